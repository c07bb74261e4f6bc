#pragma once

#include <functional>

#include "hlawka/fp.hpp"

namespace hlawka {

/// (n,k,p) linear code, stored as the canonical RREF generator matrix.
struct LinearCode {
    i64 p;
    int n, k;
    Mat gen;  // k x n, reduced row-echelon form, rank k

    bool operator==(const LinearCode& o) const {
        return p == o.p && n == o.n && k == o.k && gen == o.gen;
    }
    bool contains(const std::vector<i64>& word) const {
        return in_row_space_mod_p(gen, word, p);
    }
};

LinearCode make_code(i64 p, int n, const Mat& rows);  // canonicalizes; k = rank

/// Uniform over all k-dimensional subspaces: rejection-sample i.i.d. uniform
/// k x n matrices until full rank, then canonicalize. Every subspace has the
/// same number of full-rank generators, so the law is exactly uniform.
LinearCode sample_code(i64 p, int n, int k, u64 seed);

/// Number of k-dimensional subspaces of F_p^n (Gaussian binomial), exact.
Int gaussian_binomial(int n, int k, i64 p);

/// All k-dimensional subspaces, each exactly once (canonical RREF forms).
/// Throws cap_error carrying the exact count when it exceeds the cap.
std::vector<LinearCode> enumerate_codes(i64 p, int n, int k, i64 cap = -1);

/// Visits every codeword (including zero) in a deterministic order.
void for_each_word(const LinearCode& c, const std::function<void(const std::vector<i64>&)>& fn);

/// Visits every vector of F_p^n in lexicographic order.
void for_each_vector(i64 p, int n, const std::function<void(const std::vector<i64>&)>& fn);

}  // namespace hlawka
