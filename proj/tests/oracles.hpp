#pragma once

// Independent brute-force references the fast paths are checked against.

#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "hlawka/code.hpp"
#include "hlawka/lattice.hpp"

namespace hlawka::oracle {

/// All nonzero integer vectors with scale * x^T G x <= r^2, by scanning the
/// box |x_i| <= floor(sqrt(r^2/scale * (G^{-1})_ii)).
inline std::vector<std::vector<i64>> box_points(const IntLattice& L, const Rat& r_sq_true,
                                                bool primitive_only) {
    int m = L.m;
    Rat limit = r_sq_true / L.scale;  // threshold on the integer form
    auto inv_diag = inverse_diagonal(L.G);
    std::vector<i64> lo(m), hi(m);
    for (int i = 0; i < m; ++i) {
        Rat bound_sq = limit * inv_diag[i];
        double b = std::sqrt(std::max(0.0, to_double(bound_sq))) + 1;
        hi[i] = (i64)b;
        lo[i] = -hi[i];
    }
    std::vector<std::vector<i64>> out;
    std::vector<i64> x = lo;
    for (;;) {
        bool zero = true;
        for (i64 v : x) zero &= (v == 0);
        if (!zero) {
            i128 q = 0;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) q += (i128)L.G.at(i, j) * x[i] * x[j];
            if (Rat(int_from_i128(q)) <= limit) {
                i64 g = 0;
                for (i64 v : x) g = gcd_abs(g, v);
                if (!primitive_only || g == 1) out.push_back(x);
            }
        }
        int t = 0;
        while (t < m) {
            if (++x[t] > hi[t]) {
                x[t] = lo[t];
                ++t;
            } else {
                break;
            }
        }
        if (t == m) break;
    }
    return out;
}

inline i64 box_count(const IntLattice& L, double r, bool primitive_only) {
    Rat rr = rat_from_double(r);
    return (i64)box_points(L, rr * rr, primitive_only).size();
}

/// Exact shortest nonzero value of the integer form by box scan seeded with
/// the minimal diagonal entry.
inline i64 box_svp(const IntLattice& L) {
    i64 diag = L.G.at(0, 0);
    for (int i = 1; i < L.m; ++i) diag = std::min(diag, L.G.at(i, i));
    Rat seed = Rat((long)diag) * L.scale;
    auto pts = box_points(L, seed, false);
    i64 best = diag;
    for (const auto& x : pts) {
        i128 q = 0;
        for (int i = 0; i < L.m; ++i)
            for (int j = 0; j < L.m; ++j) q += (i128)L.G.at(i, j) * x[i] * x[j];
        best = std::min(best, (i64)q);
    }
    return best;
}

/// All k-dimensional subspaces of F_p^n as sets of vectors, by grouping the
/// spans of every k-tuple. Feasible only for tiny parameters.
inline std::set<std::set<std::vector<i64>>> subspaces(i64 p, int n, int k) {
    std::vector<std::vector<i64>> all;
    for_each_vector(p, n, [&](const std::vector<i64>& v) { all.push_back(v); });
    std::set<std::set<std::vector<i64>>> spans;
    std::vector<size_t> idx(k, 0);
    for (;;) {
        Mat gen(k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) gen.at(i, j) = all[idx[i]][j];
        Mat r = gen;
        if (rref_mod_p(r, p) == k) {
            LinearCode c{p, n, k, Mat(k, n)};
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < n; ++j) c.gen.at(i, j) = r.at(i, j);
            std::set<std::vector<i64>> words;
            for_each_word(c, [&](const std::vector<i64>& w) { words.insert(w); });
            spans.insert(std::move(words));
        }
        int t = 0;
        while (t < k && ++idx[t] == all.size()) idx[t++] = 0;
        if (t == k) break;
    }
    return spans;
}

}  // namespace hlawka::oracle
