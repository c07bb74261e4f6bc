#pragma once

#include "hlawka/lattice.hpp"

namespace hlawka {

struct LLLResult {
    IntLattice L;  // same lattice, reduced Gram; basis updated when present
    Mat U;         // unimodular transform: L.G = U * input.G * U^T
};

/// Exact-rational LLL on the Gram matrix (no embedding needed).
/// delta in (1/4, 1], default 99/100.
LLLResult lll_reduce(const IntLattice& L, Rat delta = Rat(99, 100));

/// Squared Gram-Schmidt norms B_i of the (Gram-only) basis, exact.
std::vector<Rat> gso_norms(const Mat& G);

/// Covering radius upper bound from the GSO box: tau^2 <= (scale/4) sum B_i.
/// Tightest after LLL; valid for any basis.
double covering_radius_bound(const IntLattice& L);

}  // namespace hlawka
