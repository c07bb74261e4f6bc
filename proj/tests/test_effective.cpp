#include <doctest.h>

#include <cmath>

#include "hlawka/cyclotomic.hpp"
#include "hlawka/effective.hpp"
#include "hlawka/lattice_ops.hpp"
#include "hlawka/lll.hpp"
#include "oracles.hpp"

using namespace hlawka;

TEST_SUITE_BEGIN("effective");

TEST_CASE("point sandwich") {
    SUBCASE("Z^2 at r = 10") {
        Sandwich s = point_sandwich(lattice_zn(2), 10.0);
        CHECK(s.lower == doctest::Approx(M_PI * std::pow(10 - std::sqrt(0.5), 2)).epsilon(1e-12));
        CHECK(s.upper == doctest::Approx(M_PI * std::pow(10 + std::sqrt(0.5), 2)).epsilon(1e-12));
        CHECK(s.exact == 317);  // box-scan: 316 nonzero + origin
        CHECK(s.exact == oracle::box_count(lattice_zn(2), 10.0, false) + 1);
        CHECK((double)s.exact >= s.lower);
        CHECK((double)s.exact <= s.upper);
    }
    SUBCASE("r barely above l0") {
        Sandwich s = point_sandwich(lattice_zn(2), std::sqrt(0.5) + 1e-6);
        CHECK(s.lower < 1e-9);
        CHECK((double)s.exact >= s.lower);
    }
    SUBCASE("joint scaling invariance") {
        IntLattice L = lattice_zn(2);
        IntLattice scaled = L;
        scaled.scale = Rat(4);  // beta = 2
        Sandwich a = point_sandwich(L, 6.0, std::sqrt(0.5));
        Sandwich b = point_sandwich(scaled, 12.0, 2 * std::sqrt(0.5));
        CHECK(a.exact == b.exact);
        CHECK(b.lower == doctest::Approx(a.lower).epsilon(1e-9));
        CHECK(b.upper == doctest::Approx(a.upper).epsilon(1e-9));
    }
    CHECK_THROWS_AS(point_sandwich(lattice_zn(2), 0.1), std::invalid_argument);
    SUBCASE("holds on A2, D4 and Craig(7,2)") {
        for (IntLattice L : {IntLattice::from_gram(Mat(2, 2, {2, 1, 1, 2})), lattice_d4(),
                             craig_lattice(7, 2)}) {
            double l0 = covering_radius_bound(L);
            for (double r : {2.0 * l0, 4.0 * l0}) {
                Sandwich s = point_sandwich(L, r);
                CHECK((double)s.exact >= s.lower - 1e-9);
                CHECK((double)s.exact <= s.upper + 1e-9);
            }
        }
    }
}

TEST_CASE("craig bounds") {
    SUBCASE("closed forms at (7,1)") {
        CraigBounds b = craig_bounds(7, 1);
        CHECK(b.hermite_lb == doctest::Approx(std::sqrt(2.0) / std::pow(7.0, 1.0 / 12)).epsilon(1e-12));
        CHECK(b.dual_hermite_lb == doctest::Approx(2.0 / std::pow(7.0, 3.0 / 12)).epsilon(1e-12));
        CHECK(b.covering_ub ==
              doctest::Approx(std::sqrt(6.0) / 2.0 / b.dual_hermite_lb).epsilon(1e-12));
    }
    SUBCASE("never exceeds the exact Hermite parameter") {
        for (auto [q, l] : std::vector<std::pair<i64, int>>{{7, 1}, {7, 2}, {11, 2}, {11, 3}}) {
            auto rep = density_report(craig_lattice(q, l));
            CHECK(rep.hermite >= craig_bounds(q, l).hermite_lb - 1e-9);
        }
    }
    SUBCASE("schedule tracks the asymptotic growth shape") {
        // hermite_lb under l = schedule(n) grows like sqrt(2pi/log n) sqrt(n/2pi e)
        double prev_ratio = 0;
        for (i64 q : {101, 1009, 10007}) {
            int n = (int)q - 1;
            int l = craig_parameter_schedule(n);
            double lb = craig_bounds(q, l).hermite_lb;
            double model = std::sqrt(2 * M_PI / std::log((double)n)) *
                           std::sqrt(n / (2 * M_PI * std::exp(1.0)));
            double ratio = lb / model;
            CHECK(ratio > 0.8);
            CHECK(ratio < 1.3);
            if (prev_ratio > 0) CHECK(std::fabs(ratio - 1.0) <= std::fabs(prev_ratio - 1.0) + 0.05);
            prev_ratio = ratio;
        }
    }
}

TEST_CASE("effective planner") {
    SUBCASE("Z^n flagship numbers: n=100, delta=1/3") {
        PlanParams p;
        p.base = PlanParams::Base::Zn;
        p.n = 100;
        p.delta = 1.0 / 3.0;
        p.nu = 0.01;
        EffectivePlan plan = effective_plan(p);
        CHECK(plan.p_min_i == doctest::Approx(1000.0).epsilon(1e-9));
        CHECK(plan.p_min_ii == doctest::Approx(std::pow(500.0, 1.01)).epsilon(1e-12));
        CHECK(plan.p_chosen == 1009);
        CHECK(plan.k == 33);
        CHECK(plan.log_family_size > 0);
        CHECK(plan.density_bound > 0);
        CHECK(plan.density_bound < 1);
    }
    SUBCASE("thresholds are monotone in n and 1/delta") {
        auto p_of = [](int n, double delta) {
            PlanParams p;
            p.n = n;
            p.delta = delta;
            return effective_plan(p);
        };
        CHECK(p_of(100, 0.3).p_min_i >= p_of(50, 0.3).p_min_i);
        CHECK(p_of(100, 0.3).p_min_ii >= p_of(50, 0.3).p_min_ii);
        CHECK(p_of(100, 0.25).p_min_i >= p_of(100, 0.35).p_min_i);
    }
    SUBCASE("density bound rises toward (1-eps)/2^{m-1} in p") {
        PlanParams p;
        p.n = 16;
        p.delta = 1.0 / 3.0;
        double limit = 0.7 / std::pow(2.0, 15);
        EffectivePlan plan = effective_plan(p);
        CHECK(plan.density_bound <= limit);
        // large alphabet pushes the parenthesized factor to 1
        double r = std::sqrt(16.0 / (2 * M_PI * std::exp(1.0)));
        double paren = 1.0 + plan.mu_base / (r * std::pow(1e9, (16.0 - plan.k) / 16.0));
        CHECK(limit * std::pow(paren, -16.0) == doctest::Approx(limit).epsilon(1e-4));
    }
    SUBCASE("craig base uses the schedule and its bound functions") {
        PlanParams p;
        p.base = PlanParams::Base::Craig;
        p.craig_q = 101;
        p.delta = 0.2;
        EffectivePlan plan = effective_plan(p);
        int l = craig_parameter_schedule(100);
        CHECK(plan.gamma_kernel == doctest::Approx(craig_bounds(101, l).hermite_lb));
        CHECK(plan.mu_base == doctest::Approx(craig_bounds(101, l).covering_ub));
        CHECK(plan.p_chosen >= 2);
        // condition (i) follows the (sqrt(log n))^{1/delta} shape: smaller than Z^n's
        PlanParams zn;
        zn.n = 100;
        zn.delta = 0.2;
        CHECK(plan.p_min_i < effective_plan(zn).p_min_i);
    }
    SUBCASE("quaternionic variant needs k > m/2 and uses the radius exponent") {
        PlanParams p;
        p.n = 16;
        p.delta = 0.75;
        p.quaternionic = true;
        EffectivePlan plan = effective_plan(p);
        double r = std::sqrt(16.0 / (2 * M_PI * std::exp(1.0)));
        CHECK(plan.p_min_i == doctest::Approx(std::pow(r, 2.0 * 16 / (2 * 12 - 16))).epsilon(1e-12));
        PlanParams bad = p;
        bad.delta = 0.4;
        CHECK_THROWS_AS(effective_plan(bad), std::invalid_argument);
    }
}

TEST_CASE("optimal rate lands near 1/3 for Z^n") {
    for (int n : {50, 100, 200, 500}) {
        PlanParams p;
        p.n = n;
        p.nu = 0.01;
        double best = optimal_delta(p);
        CHECK(std::fabs(best - 1.0 / 3.0) < 0.05);
    }
}

TEST_CASE("table rows") {
    auto rows = table1_rows(10000);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].construction == "construction-a-z");
    SUBCASE("craig family is asymptotically smaller than construction A") {
        double prev = 1.0;
        for (int n : {1000, 10000, 100000}) {
            auto r = table1_rows(n);
            double ratio = r[3].log_family / r[0].log_family;
            CHECK(ratio == doctest::Approx(std::log(std::log((double)n)) / std::log((double)n))
                               .epsilon(1e-9));
            CHECK(ratio < prev);
            prev = ratio;
        }
        CHECK(prev < 0.15);
    }
}

TEST_CASE("packing efficiency") {
    CHECK(packing_efficiency_goal(lattice_zn(1)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(packing_efficiency_goal(lattice_zn(2)) ==
          doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-12));
    // lambda1^2 = 2, V = 2, V4 = pi^2/2
    double expect = (std::sqrt(2.0) / 2) / std::pow(2.0 / (M_PI * M_PI / 2), 0.25);
    CHECK(packing_efficiency_goal(lattice_d4()) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(packing_efficiency_goal(lattice_d4()) == doctest::Approx(0.88600).epsilon(1e-4));
}

TEST_SUITE_END();
