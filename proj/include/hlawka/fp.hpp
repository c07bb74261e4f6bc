#pragma once

#include "hlawka/common.hpp"
#include "hlawka/linalg.hpp"

namespace hlawka {

/// Arithmetic in F_p for a machine-word prime p.
struct PrimeField {
    i64 p;
    explicit PrimeField(i64 p_) : p(p_) {
        if (p <= 1 || !is_prime((u64)p)) throw std::invalid_argument("modulus is not prime");
    }
    i64 reduce(i64 x) const { i64 r = x % p; return r < 0 ? r + p : r; }
    i64 add(i64 a, i64 b) const { i64 r = a + b; return r >= p ? r - p : r; }
    i64 sub(i64 a, i64 b) const { i64 r = a - b; return r < 0 ? r + p : r; }
    i64 mul(i64 a, i64 b) const { return (i64)((i128)a * b % p); }
    i64 neg(i64 a) const { return a == 0 ? 0 : p - a; }
    i64 pow(i64 a, i64 e) const {
        i64 r = 1 % p; a = reduce(a);
        while (e) { if (e & 1) r = mul(r, a); a = mul(a, a); e >>= 1; }
        return r;
    }
    i64 inv(i64 a) const { return pow(reduce(a), p - 2); }
};

/// In-place reduced row-echelon form over F_p; returns the rank.
/// The unique RREF makes it the canonical representative of the row space.
int rref_mod_p(Mat& m, i64 p);

int rank_mod_p(const Mat& m, i64 p);

/// Basis rows of the (right) kernel {x : m x = 0 (mod p)}.
Mat kernel_mod_p(const Mat& m, i64 p);

/// Basis rows of the preimage {x : m x in rowspace(sub) (mod p)}.
/// `sub` rows live in F_p^rows(m); result rows live in F_p^cols(m).
Mat preimage_mod_p(const Mat& m, const Mat& sub, i64 p);

/// True iff v lies in the row space of (RREF) m over F_p.
bool in_row_space_mod_p(const Mat& m, const std::vector<i64>& v, i64 p);

}  // namespace hlawka
