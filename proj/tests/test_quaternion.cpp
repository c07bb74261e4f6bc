#include <doctest.h>

#include <cmath>

#include "hlawka/lattice_ops.hpp"
#include "hlawka/lll.hpp"
#include "hlawka/quaternion.hpp"

using namespace hlawka;

namespace {

Quat qi() { return Quat::from_int(0, 1, 0, 0); }
Quat qj() { return Quat::from_int(0, 0, 1, 0); }
Quat qk() { return Quat::from_int(0, 0, 0, 1); }
Quat omega() { return Quat::from_doubled(-1, 1, 1, 1); }

}  // namespace

TEST_SUITE_BEGIN("quaternion");

TEST_CASE("hamilton relations and norm multiplicativity") {
    Quat minus_one = Quat::from_int(-1, 0, 0, 0);
    CHECK(quat_mul(qi(), qi()) == minus_one);
    CHECK(quat_mul(qj(), qj()) == minus_one);
    CHECK(quat_mul(qk(), qk()) == minus_one);
    CHECK(quat_mul(qi(), qj()) == qk());
    CHECK(quat_mul(qj(), qi()) == Quat::from_int(0, 0, 0, -1));
    CHECK(quat_nrd(omega()) == 1);
    SUBCASE("omega^3 = 1: omega has order 6 up to sign") {
        Quat w2 = quat_mul(omega(), omega());
        CHECK(quat_mul(w2, omega()) == Quat::from_int(1, 0, 0, 0));
    }
    SUBCASE("exact norm multiplicativity on random Hurwitz pairs") {
        Rng rng(13);
        for (int it = 0; it < 200; ++it) {
            auto rand_quat = [&](Rng& r) {
                if (r.below(2)) return Quat::from_int((i64)r.below(9) - 4, (i64)r.below(9) - 4,
                                                      (i64)r.below(9) - 4, (i64)r.below(9) - 4);
                return Quat::from_doubled(2 * ((i64)r.below(5) - 2) + 1, 2 * ((i64)r.below(5) - 2) + 1,
                                          2 * ((i64)r.below(5) - 2) + 1, 2 * ((i64)r.below(5) - 2) + 1);
            };
            Quat a = rand_quat(rng), b = rand_quat(rng);
            CHECK(quat_nrd(quat_mul(a, b)) == quat_nrd(a) * quat_nrd(b));
        }
    }
    SUBCASE("associativity sample") {
        Quat a = Quat::from_int(1, -2, 0, 3), b = omega(), c = Quat::from_int(0, 1, 1, -1);
        CHECK(quat_mul(quat_mul(a, b), c) == quat_mul(a, quat_mul(b, c)));
    }
}

TEST_CASE("hurwitz units") {
    auto units = hurwitz_units();
    CHECK(units.size() == 24);
    for (const auto& u : units) {
        CHECK(quat_nrd(u) == 1);
        CHECK(u.hurwitz_integral());
    }
}

TEST_CASE("hurwitz isomorphism") {
    SUBCASE("lexicographically least (a,b)") {
        CHECK(hurwitz_iso(3).a == 1);
        CHECK(hurwitz_iso(3).b == 1);
        CHECK(hurwitz_iso(7).a == 2);
        CHECK(hurwitz_iso(7).b == 3);
    }
    SUBCASE("generator relations and unit norms at p in {3,7,11}") {
        for (i64 p : {3, 7, 11}) {
            HurwitzIso iso = hurwitz_iso(p);
            Mat2 minus_id{{p - 1, 0, 0, p - 1}};
            CHECK(m2_mul(iso.phi_i, iso.phi_i, p) == minus_id);
            CHECK(m2_mul(iso.phi_j, iso.phi_j, p) == minus_id);
            // anticommutation
            Mat2 ij = m2_mul(iso.phi_i, iso.phi_j, p);
            Mat2 ji = m2_mul(iso.phi_j, iso.phi_i, p);
            PrimeField F(p);
            for (int t = 0; t < 4; ++t) CHECK(ij.e[t] == F.neg(ji.e[t]));
            // det images of all 24 units equal nrd = 1
            for (const auto& u : hurwitz_units())
                CHECK(m2_det(iso.apply(u), p) == 1 % p);
        }
    }
    SUBCASE("det phi(j) = 1 comes from a^2+b^2 = -1") {
        for (i64 p : {5, 13, 17}) {
            HurwitzIso iso = hurwitz_iso(p);
            CHECK(m2_det(iso.phi_j, p) == 1);
        }
    }
}

TEST_CASE("reductions are ring homomorphisms") {
    SUBCASE("lipschitz: exhaustive on residues at p=5") {
        QuatReduction R = lipschitz_reduction(5, 1);
        auto img = [&](const Quat& x) {
            std::vector<i64> coords{x.c[0] / 2, x.c[1] / 2, x.c[2] / 2, x.c[3] / 2};
            return R.apply(coords)[0];
        };
        std::vector<Quat> box;
        for (i64 a = 0; a < 5; ++a)
            for (i64 b = 0; b < 5; ++b)
                for (i64 c = 0; c < 5; ++c)
                    for (i64 d = 0; d < 5; ++d) box.push_back(Quat::from_int(a, b, c, d));
        Rng rng(4);
        for (int it = 0; it < 4000; ++it) {
            const Quat& x = box[rng.below(box.size())];
            const Quat& y = box[rng.below(box.size())];
            CHECK(img(quat_mul(x, y)) == m2_mul(img(x), img(y), 5));
            CHECK(img(quat_add(x, y)) == m2_add(img(x), img(y), 5));
            CHECK(m2_det(img(x), 5) == quat_nrd(x) % 5);
        }
        CHECK(img(Quat::from_int(1, 0, 0, 0)) == Mat2{{1, 0, 0, 1}});
        CHECK(img(qi()) == Mat2{{2, 0, 0, 3}});  // u = 2 at p = 5
    }
    SUBCASE("hurwitz: homomorphism on the omega basis at p in {3,7}") {
        for (i64 p : {3, 7}) {
            QuatReduction R = hurwitz_reduction(p, 1);
            auto to_coords = [](const Quat& x) {
                i64 D = x.c[3];
                return std::vector<i64>{(x.c[0] + D) / 2, (x.c[1] - D) / 2, (x.c[2] - D) / 2, D};
            };
            auto img = [&](const Quat& x) { return R.apply(to_coords(x))[0]; };
            std::vector<Quat> box;
            for (i64 a = 0; a < p; ++a)
                for (i64 b = 0; b < p; ++b)
                    for (i64 c = 0; c < p; ++c)
                        for (i64 d = 0; d < p; ++d) box.push_back(Quat::from_int(a, b, c, d));
            Rng rng(6);
            for (int it = 0; it < 3000; ++it) {
                Quat x = box[rng.below(box.size())];
                Quat y = box[rng.below(box.size())];
                if (rng.below(2)) x = quat_add(x, omega());
                if (rng.below(2)) y = quat_add(y, omega());
                CHECK(img(quat_mul(x, y)) == m2_mul(img(x), img(y), p));
                CHECK(m2_det(img(x), p) == quat_nrd(x) % p);
            }
            // omega image determinant = nrd(omega) = 1
            CHECK(m2_det(img(omega()), p) == 1);
        }
    }
    SUBCASE("lipschitz needs p = 1 mod 4") {
        CHECK_THROWS_AS(lipschitz_reduction(7, 1), std::invalid_argument);
        CHECK_THROWS_AS(hurwitz_reduction(2, 1), std::invalid_argument);
    }
}

TEST_CASE("base lattices") {
    SUBCASE("hurwitz base is D4: minimum 1, kissing 24, volume 1/2") {
        QuatReduction R = hurwitz_reduction(5, 1);
        CHECK(shortest_vector(R.base).second == Rat(1));  // unit quaternions
        CHECK(R.base.volume_sq() == Rat(1, 4));
        auto red = lll_reduce(R.base);
        auto pts = collect_points(red.L.G, QBound{2}, -1);  // doubled form value 2
        i64 kissing = 0;
        for (auto& [c, Q] : pts)
            if (Q == 2) kissing += 2;
        CHECK(kissing == 24);
    }
    SUBCASE("lipschitz kernel has volume p^{4m}") {
        QuatReduction R = lipschitz_reduction(5, 1);
        auto [ker, cert] = kernel_lattice(R.to_reduction());
        CHECK(ker.volume_sq() == Rat(Int("152587890625")));  // 5^8 * 1
    }
}

TEST_CASE("matrix code lifts") {
    QuatReduction R = hurwitz_reduction(5, 2);
    SUBCASE("zero module lifts to the kernel") {
        auto ker = kernel_lattice(R.to_reduction()).first;
        // nonzero kernel vectors have norm >= p (a multiple of p in fact)
        CHECK(to_double(shortest_vector(ker).second) >= 5.0);
    }
    SUBCASE("full module lifts to the base") {
        std::vector<M2Vec> gens{{Mat2{{1, 0, 0, 1}}, Mat2{}}, {Mat2{}, Mat2{{1, 0, 0, 1}}}};
        FreeMatCode full{5, 2, 2, gens};
        IntLattice L = lift_matrix_code(R, full);
        CHECK(L.volume_sq() == R.base.volume_sq());
    }
    SUBCASE("diagonal module: index p^4, minima closed under the 24 units") {
        FreeMatCode diag{5, 2, 1, {{Mat2{{1, 0, 0, 1}}, Mat2{{1, 0, 0, 1}}}}};
        IntLattice L = lift_matrix_code(R, diag);
        Rat idx_sq = L.volume_sq() / R.base.volume_sq();
        CHECK(idx_sq == Rat(Int("152587890625")));  // (5^4)^2
        auto [pt, lam] = shortest_vector(L);
        auto redl = lll_reduce(L);
        i64 qmin = (i64)(to_double(lam / L.scale) + 0.5);
        auto pts = collect_points(redl.L.G, QBound{qmin}, -1);
        // map back to base coordinates: x * U * B
        for (const auto& u : hurwitz_units()) {
            Mat act = unit_action_matrix(R, u);
            for (auto& [c, Q] : pts) {
                if (Q != qmin) continue;
                std::vector<i64> base_coords(8, 0), img(8, 0);
                for (int i = 0; i < 8; ++i)
                    for (int j = 0; j < 8; ++j) base_coords[j] += c[i] * redl.U.at(i, j);
                std::vector<i64> lifted(8, 0);
                for (int i = 0; i < 8; ++i)
                    for (int j = 0; j < 8; ++j) lifted[j] += base_coords[i] * L.basis->at(i, j);
                for (int i = 0; i < 8; ++i)
                    for (int j = 0; j < 8; ++j) img[j] += lifted[i] * act.at(i, j);
                CHECK(in_row_lattice(*L.basis, img));
            }
        }
    }
    SUBCASE("unit action preserves the base form") {
        for (const auto& u : hurwitz_units()) {
            Mat act = unit_action_matrix(R, u);
            CHECK(conjugate_gram(act, R.base.G) == R.base.G);
        }
    }
}

TEST_CASE("noninvertible images force norms divisible by p") {
    SUBCASE("exhaustive at p=5") {
        Lemma1Report rep = noninvertible_norm_check(5);
        CHECK(rep.checked == 625);
        CHECK(rep.violations == 0);
        CHECK(rep.noninvertible > 0);
    }
    SUBCASE("norm-p elements have singular image") {
        QuatReduction R = lipschitz_reduction(5, 1);
        Mat2 img = R.apply({1, 2, 0, 0})[0];  // 1 + 2i, nrd = 5
        CHECK(m2_det(img, 5) == 0);
        Mat2 one = R.apply({1, 0, 0, 0})[0];
        CHECK(m2_det(one, 5) == 1);
    }
    SUBCASE("lift vectors below norm p have an invertible coordinate") {
        QuatReduction R = hurwitz_reduction(5, 2);
        FreeMatCode diag{5, 2, 1, {{Mat2{{1, 0, 0, 1}}, Mat2{{1, 0, 0, 1}}}}};
        IntLattice L = lift_matrix_code(R, diag);
        auto redl = lll_reduce(L);
        // true norm < p means doubled form value < 2p
        auto pts = collect_points(redl.L.G, QBound{2 * 5 - 1}, -1);
        for (auto& [c, Q] : pts) {
            std::vector<i64> base_coords(8, 0);
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) base_coords[j] += c[i] * redl.U.at(i, j);
            std::vector<i64> lifted(8, 0);
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) lifted[j] += base_coords[i] * L.basis->at(i, j);
            M2Vec img = R.apply(lifted);
            bool unit = false;
            for (const auto& mm : img) unit = unit || m2_is_unit(mm, 5);
            CHECK(unit);
        }
    }
}

TEST_CASE("balanced free modules over M2(F_2)") {
    BalancedReport rep = balanced_check(2, 2, 1);
    CHECK(rep.balanced);
    CHECK(rep.M == 16);
    CHECK(rep.unit_vectors == 156);
    CHECK(rep.counting_ok);
    SUBCASE("averaging bound for constant and random nonnegative g") {
        auto ones = [](const M2Vec&) { return Rat(1); };
        auto [lhs, rhs] = balanced_average_bound(2, 2, 1, ones);
        CHECK(lhs <= rhs);
        CHECK(rhs == Rat(16));  // |R|^k * g*(R^m)/|(R^m)*| with g == 1
        Rng rng(77);
        for (int it = 0; it < 10; ++it) {
            u64 salt = rng.next();
            auto g = [salt](const M2Vec& v) {
                u64 h = salt;
                for (const auto& mm : v)
                    for (i64 e : mm.e) h = h * 1099511628211ULL + (u64)e;
                return Rat((long)(h % 97));
            };
            auto [l, r] = balanced_average_bound(2, 2, 1, g);
            CHECK(l <= r);
        }
    }
}

TEST_SUITE_END();
