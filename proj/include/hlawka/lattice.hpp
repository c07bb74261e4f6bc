#pragma once

#include <optional>
#include <string>

#include "hlawka/linalg.hpp"

namespace hlawka {

/// Rank-m lattice given by an exact integer Gram matrix and a positive
/// rational scale: true inner products are scale * G. An optional integer
/// coordinate basis records how the lattice sits inside an ambient lattice.
struct IntLattice {
    int m = 0;
    Mat G;
    Rat scale{1};
    std::optional<Mat> basis;

    /// Validates symmetry and positive definiteness (exact LDL^T).
    static IntLattice from_gram(Mat g, Rat scale = Rat(1), std::optional<Mat> basis = {});

    /// s^m * det(G): the squared volume, exact.
    Rat volume_sq() const;
};

/// s^{m/2} sqrt(det G), computed with enough guard bits for 1e-12 relative error.
double volume(const IntLattice& L);

// Built-in Gram matrices.
IntLattice lattice_zn(int n);
IntLattice lattice_an(int n);  // root lattice A_n (path Gram: 2 on diag, -1 adjacent)
IntLattice lattice_d4();       // checkerboard lattice in dimension four

std::string lattice_to_json(const IntLattice& L);
IntLattice lattice_from_json(const std::string& text);

}  // namespace hlawka
