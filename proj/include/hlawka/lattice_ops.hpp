#pragma once

#include "hlawka/enumerate.hpp"
#include "hlawka/testfn.hpp"

namespace hlawka {

/// Lattice point in basis coordinates with its exact squared norm.
struct LatticePoint {
    std::vector<i64> coords;
    Rat sqnorm;
    bool primitive() const {
        i64 g = 0;
        for (i64 v : coords) g = gcd_abs(g, v);
        return g == 1;
    }
};

/// Exact first minimum. Tie-break among minimizers: lexicographically least
/// coordinate vector with positive leading nonzero coordinate.
std::pair<LatticePoint, Rat> shortest_vector(const IntLattice& L);

/// lambda_1^2 .. lambda_upto^2 (true, scaled values) by radius-growing
/// enumeration with exact rank tracking.
std::vector<Rat> successive_minima(const IntLattice& L, int upto);

/// Nonzero (or primitive) points with true squared norm <= r^2, exact.
i64 count_points(const IntLattice& L, double r, bool primitive_only,
                 Exec exec = Exec::Parallel);

/// Theta series sum over the whole lattice (origin included), absolute tail
/// error below eps. The truncation radius comes from per-shell point-count
/// upper bounds using a covering-radius bound.
double theta_series(const IntLattice& L, double tau, double eps = 1e-10,
                    Exec exec = Exec::Parallel);

/// Sum of f over nonzero (or primitive) points; Gaussian tails truncated as in
/// theta_series with tolerance tail_eps.
double sum_test_function(const IntLattice& L, const TestFunction& f, bool primitive_only,
                         Exec exec = Exec::Parallel, double tail_eps = 1e-10);

struct DensityReport {
    double packing_density;                   // vol B_{lambda1/2} / V
    double hermite;                           // lambda1 / V^{1/m}
    std::vector<double> successive_densities; // Delta_i, i = 1..upto
    double packing_efficiency;                // rho / rho_eff
    double lambda1_sq;
    double volume;
};

DensityReport density_report(const IntLattice& L, int successive_upto = 1);

/// Truncation radius R such that sum_{||x|| > R} exp(-tau ||x||^2) < eps,
/// via shell counts bounded with covering radius l0.
double gaussian_tail_radius(const IntLattice& L, double tau, double eps);

/// Multiplicities of true squared norms up to bound (inclusive), sorted.
/// Entry: (normsq, number of lattice vectors attaining it), origin excluded.
std::vector<std::pair<Rat, i64>> theta_coefficients(const IntLattice& L, const Rat& bound);

}  // namespace hlawka
