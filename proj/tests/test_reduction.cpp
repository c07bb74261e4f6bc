#include <doctest.h>

#include <cmath>

#include "hlawka/cyclotomic.hpp"
#include "hlawka/lattice_ops.hpp"
#include "hlawka/reduction.hpp"
#include "oracles.hpp"

using namespace hlawka;

namespace {

bool contains_row(const Mat& basis, const std::vector<i64>& v) {
    return in_row_lattice(basis, v);
}

}  // namespace

TEST_SUITE_BEGIN("reduction");

TEST_CASE("natural reduction kernels") {
    SUBCASE("Z^n: kernel is p Z^n") {
        Reduction R = natural_reduction(lattice_zn(3), 5);
        auto [ker, cert] = kernel_lattice(R);
        CHECK(cert.lambda1_sq == Rat(25));
        CHECK(cert.ratio == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(ker.volume_sq() == Rat(Int("244140625")));  // (5^3)^2 * 1
    }
    SUBCASE("A2 at p=5: kernel Gram 25 * A2") {
        IntLattice a2 = IntLattice::from_gram(Mat(2, 2, {2, 1, 1, 2}));
        Reduction R = natural_reduction(a2, 5);
        auto [ker, cert] = kernel_lattice(R);
        CHECK(shortest_vector(ker).second == Rat(50));  // 25 * 2
        CHECK(ker.volume_sq() == a2.volume_sq() * 625);
    }
    SUBCASE("volume ratio p^n for any base") {
        IntLattice d4 = lattice_d4();
        Reduction R = natural_reduction(d4, 3);
        auto [ker, cert] = kernel_lattice(R);
        CHECK(ker.volume_sq() / d4.volume_sq() == Rat(Int("6561")));  // 3^8 = (3^4)^2
    }
}

TEST_CASE("surjectivity validation") {
    Mat bad(2, 2, {1, 1, 2, 2});
    CHECK_THROWS_AS(make_reduction(lattice_zn(2), 3, bad), std::invalid_argument);
    Mat rect(1, 3, {2, 4, 6});
    CHECK_THROWS_AS(make_reduction(lattice_zn(3), 2, rect), std::invalid_argument);
}

TEST_CASE("lift_code") {
    Reduction R2 = natural_reduction(lattice_zn(2), 3);
    SUBCASE("full space lifts to the base") {
        LinearCode full = make_code(3, 2, Mat::identity(2));
        IntLattice L = lift_code(R2, full);
        CHECK(L.G == R2.base.G);
    }
    SUBCASE("zero code lifts to the kernel") {
        LinearCode zero{3, 2, 0, Mat(0, 2)};
        IntLattice L = lift_code(R2, zero);
        CHECK(L.volume_sq() == Rat(81));
        CHECK(shortest_vector(L).second == Rat(9));
    }
    SUBCASE("span{(1,1)} over F_3") {
        LinearCode c = make_code(3, 2, Mat(1, 2, {1, 1}));
        IntLattice L = lift_code(R2, c);
        CHECK(L.volume_sq() == Rat(9));  // volume 3
        CHECK(shortest_vector(L).second == Rat(2));
        REQUIRE(L.basis.has_value());
        CHECK(contains_row(*L.basis, {1, 1}));
        CHECK(contains_row(*L.basis, {3, 0}));
        CHECK_FALSE(contains_row(*L.basis, {1, 0}));
    }
    SUBCASE("mismatched parameters are rejected") {
        LinearCode wrong_p = make_code(5, 2, Mat(1, 2, {1, 1}));
        CHECK_THROWS_AS(lift_code(R2, wrong_p), std::invalid_argument);
        LinearCode wrong_n = make_code(3, 3, Mat(1, 3, {1, 1, 0}));
        CHECK_THROWS_AS(lift_code(R2, wrong_n), std::invalid_argument);
    }
}

TEST_CASE("nesting and volume tower") {
    Reduction R = natural_reduction(lattice_zn(4), 3);
    LinearCode zero{3, 4, 0, Mat(0, 4)};
    IntLattice ker = lift_code(R, zero);
    Rng rng(9);
    for (u64 s = 0; s < 8; ++s) {
        int k = 1 + (int)rng.below(3);
        LinearCode c = sample_code(3, 4, k, s);
        IntLattice L = lift_code(R, c);
        // volume tower, exactly
        Rat expect = R.base.volume_sq();
        for (int i = 0; i < 2 * (4 - k); ++i) expect *= 3;
        CHECK(L.volume_sq() == expect);
        // quotient cardinality p^k between lift and kernel
        Rat ratio = ker.volume_sq() / L.volume_sq();
        Rat pk(1);
        for (int i = 0; i < 2 * k; ++i) pk *= 3;
        CHECK(ratio == pk);
        // nesting: kernel basis rows inside the lift, lift rows integral
        for (int i = 0; i < ker.basis->rows; ++i) {
            std::vector<i64> row(ker.basis->cols);
            for (int j = 0; j < ker.basis->cols; ++j) row[j] = ker.basis->at(i, j);
            CHECK(contains_row(*L.basis, row));
        }
    }
}

TEST_CASE("kernel certificates") {
    SUBCASE("ideal reduction kernel satisfies the split-prime norm bound") {
        Reduction R = ideal_reduction(5, 1, 11, split_primes(5, 1, 11)[0].second);
        auto [ker, cert] = kernel_lattice(R);
        // lambda_1^2 >= n p^{2/n} = 4 sqrt(11)
        CHECK(to_double(cert.lambda1_sq) >= 4.0 * std::sqrt(11.0));
    }
    SUBCASE("degenerate family flagged by a vanishing ratio") {
        // M = (0 1) annihilates e_1, so (1,0) stays in every kernel
        for (i64 p : {5, 11, 31}) {
            Reduction R = make_reduction(lattice_zn(2), p, Mat(1, 2, {0, 1}));
            auto [ker, cert] = kernel_lattice(R);
            CHECK(cert.lambda1_sq == Rat(1));
            CHECK(cert.ratio == doctest::Approx(1.0 / std::sqrt((double)p)).epsilon(1e-12));
        }
    }
    SUBCASE("theorem-2 exponent check") {
        Reduction R = natural_reduction(lattice_zn(4), 11);
        Thm2Params t{1.0, 2.0 / 4.0, 2};  // lambda_1 = p vs p^{(4-2)/4 + 1/2} = p
        auto [ker, cert] = kernel_lattice(R, t);
        REQUIRE(cert.exponent_ok.has_value());
        CHECK(*cert.exponent_ok);
        Thm2Params strict{1.01, 2.0 / 4.0, 2};
        auto cert2 = kernel_lattice(R, strict).second;
        CHECK_FALSE(*cert2.exponent_ok);
    }
}

TEST_CASE("normalize") {
    CHECK(normalize(lattice_zn(2), 1.0).second == doctest::Approx(1.0));
    SUBCASE("Z^2 to volume 4") {
        auto [L, beta] = normalize(lattice_zn(2), 4.0);
        CHECK(beta == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(volume(L) == doctest::Approx(4.0).epsilon(1e-13));
    }
    SUBCASE("lifted lattice of volume 3 to volume 1") {
        Reduction R = natural_reduction(lattice_zn(2), 3);
        IntLattice lift = lift_code(R, make_code(3, 2, Mat(1, 2, {1, 1})));
        auto [L, beta] = normalize(lift, 1.0);
        CHECK(beta == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
        CHECK(volume(L) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("round trip volume within 1e-12 on irrational scalings") {
        IntLattice a2 = IntLattice::from_gram(Mat(2, 2, {2, 1, 1, 2}));
        for (double v : {0.5, 1.0, 7.3}) {
            auto [L, beta] = normalize(a2, v);
            CHECK(std::fabs(volume(L) / v - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("reduction json round trip") {
    Reduction R = natural_reduction(lattice_zn(2), 7);
    Reduction back = reduction_from_json(reduction_to_json(R));
    CHECK(back.p == 7);
    CHECK(back.n == 2);
    CHECK(back.M == R.M);
    CHECK(back.base.G == R.base.G);
}

TEST_SUITE_END();
