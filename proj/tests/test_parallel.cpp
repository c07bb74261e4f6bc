#include <doctest.h>

#include <omp.h>

#include "hlawka/ensemble.hpp"
#include "hlawka/lll.hpp"
#include "hlawka/quaternion.hpp"
#include "oracles.hpp"

using namespace hlawka;

// The OpenMP kernels must return bit-identical results against the serial
// reference, for any thread count: partial results are merged in slice order.

TEST_SUITE_BEGIN("parallel");

namespace {

struct ThreadGuard {
    int saved;
    explicit ThreadGuard(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
    ~ThreadGuard() { omp_set_num_threads(saved); }
};

}  // namespace

TEST_CASE("ball tallies match the serial reference") {
    Rng rng(31);
    for (int it = 0; it < 12; ++it) {
        int m = 2 + (int)rng.below(3);
        Mat g(m, m);
        for (;;) {
            for (int i = 0; i < m; ++i)
                for (int j = 0; j <= i; ++j) {
                    i64 v = (i64)rng.below(9) - 4;
                    g.at(i, j) = g.at(j, i) = i == j ? std::abs(v) + 1 + m : v;
                }
            if (is_positive_definite(g)) break;
        }
        QBound b{(i64)(10 + rng.below(60))};
        BallTally serial = tally_ball(g, b, nullptr, Exec::Serial);
        for (int threads : {1, 2, 5}) {
            ThreadGuard tg(threads);
            BallTally par = tally_ball(g, b, nullptr, Exec::Parallel);
            CHECK(par.all == serial.all);
            CHECK(par.prim == serial.prim);
        }
    }
}

TEST_CASE("radial sums are bitwise deterministic across thread counts") {
    IntLattice L = lattice_d4();
    auto red = lll_reduce(L);
    QBound b{40};
    auto f = [](double t) { return std::exp(-0.73 * t); };
    RadialSums serial = sum_radial(red.L.G, b, 0.5, f, nullptr, Exec::Serial);
    for (int threads : {1, 2, 7}) {
        ThreadGuard tg(threads);
        RadialSums par = sum_radial(red.L.G, b, 0.5, f, nullptr, Exec::Parallel);
        CHECK(par.all == serial.all);    // exact double equality
        CHECK(par.prim == serial.prim);
    }
}

TEST_CASE("theta and counting agree between execution modes") {
    IntLattice a2 = IntLattice::from_gram(Mat(2, 2, {2, 1, 1, 2}));
    CHECK(theta_series(a2, 0.8, 1e-11, Exec::Serial) == theta_series(a2, 0.8, 1e-11, Exec::Parallel));
    CHECK(count_points(a2, 5.5, true, Exec::Serial) == count_points(a2, 5.5, true, Exec::Parallel));
}

TEST_CASE("residue-box scan matches its serial reference") {
    Lemma1Report serial = noninvertible_norm_check(13, -1, Exec::Serial);
    for (int threads : {2, 4}) {
        ThreadGuard tg(threads);
        Lemma1Report par = noninvertible_norm_check(13, -1, Exec::Parallel);
        CHECK(par.checked == serial.checked);
        CHECK(par.noninvertible == serial.noninvertible);
        CHECK(par.violations == serial.violations);
    }
}

TEST_CASE("monte carlo ensembles are schedule independent") {
    EnsembleSpec spec{natural_reduction(lattice_zn(2), 7), 1, 1.0,
                      EnsembleSpec::Mode::MonteCarlo, 64, 5150};
    TestFunction ball = TestFunction::ball(1.4);
    AverageReport first;
    bool have = false;
    for (int threads : {1, 3, 8}) {
        ThreadGuard tg(threads);
        AverageReport rep = average_sum_f(spec, ball, true);
        if (!have) {
            first = rep;
            have = true;
        } else {
            CHECK(rep.estimate == first.estimate);
            CHECK(rep.stderr_ == first.stderr_);
            CHECK(rep.kernel_term == first.kernel_term);
        }
    }
}

TEST_SUITE_END();
