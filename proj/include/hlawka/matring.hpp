#pragma once

#include <array>

#include "hlawka/fp.hpp"

namespace hlawka {

/// Element of the matrix ring M_2(F_p), row-major entries.
struct Mat2 {
    std::array<i64, 4> e{0, 0, 0, 0};
    bool operator==(const Mat2&) const = default;
    auto operator<=>(const Mat2&) const = default;
};

Mat2 m2_mul(const Mat2& a, const Mat2& b, i64 p);
Mat2 m2_add(const Mat2& a, const Mat2& b, i64 p);
i64 m2_det(const Mat2& a, i64 p);
inline bool m2_is_unit(const Mat2& a, i64 p) { return m2_det(a, p) != 0; }

/// Every element of M_2(F_p), lexicographic order; |R| = p^4.
std::vector<Mat2> ring_elements(i64 p);

/// Vector in M_2(F_p)^m.
using M2Vec = std::vector<Mat2>;

/// Free rank-k left submodule of M_2(F_p)^m, canonical generators.
struct FreeMatCode {
    i64 p;
    int m, k;
    std::vector<M2Vec> gens;  // k generator vectors
};

/// Left module generated by the rows of gens: span over R of {r * g_i}.
/// Returned sorted; size |R|^k exactly when the module is free of rank k.
std::vector<M2Vec> module_elements(i64 p, int m, const std::vector<M2Vec>& gens);

bool module_contains(const std::vector<M2Vec>& sorted_elements, const M2Vec& v);

/// True iff v has at least one unit (invertible) coordinate.
bool has_unit_coordinate(const M2Vec& v, i64 p);

/// All free rank-k submodules of M_2(F_p)^m, each exactly once, canonicalized
/// by the lexicographically least generating tuple. Desk scale only.
std::vector<FreeMatCode> enumerate_free_modules(i64 p, int m, int k, i64 cap = -1);

/// Flatten a module into an F_p-subspace of F_p^{4m} (RREF basis, 4k rows
/// for a free rank-k module). Coordinates: per component, row-major 2x2.
Mat module_fp_basis(i64 p, int m, const std::vector<M2Vec>& gens);

}  // namespace hlawka
