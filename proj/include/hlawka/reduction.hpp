#pragma once

#include <optional>

#include "hlawka/code.hpp"
#include "hlawka/lattice.hpp"

namespace hlawka {

/// Surjective homomorphism base -> F_p^n, given by an n x m integer matrix
/// acting on basis coordinates mod p. Every such homomorphism factors this
/// way, so kernels and code preimages reduce to HNF computations.
struct Reduction {
    IntLattice base;
    i64 p;
    int n;
    Mat M;  // n x m, rank n mod p
};

Reduction make_reduction(IntLattice base, i64 p, Mat M);

/// m = n, M = identity; the kernel is p * base.
Reduction natural_reduction(const IntLattice& L, i64 p);

/// Preimage lattice of the code: basis = HNF of [lifts of M^{-1}(C); p I].
/// Volume is exactly p^{n-k} * V(base); inclusions and the image span are
/// verified before returning.
IntLattice lift_code(const Reduction& R, const LinearCode& C);

struct Thm2Params {
    double c = 1.0;
    double alpha = 0.0;
    int k = 0;
};

struct KernelCert {
    Rat lambda1_sq;       // true (scaled) squared first minimum of the kernel
    double gamma;         // Hermite parameter of the kernel
    double ratio;         // lambda_1 / p^{n/m}, the non-degeneracy ratio
    std::optional<bool> exponent_ok;  // lambda_1 >= c p^{(n-k)/m + alpha}, when requested
};

std::pair<IntLattice, KernelCert> kernel_lattice(const Reduction& R,
                                                 std::optional<Thm2Params> thm2 = {});

/// Scales L to volume V_target: returns (beta * L, beta). The rational scale
/// stores beta^2 to double precision, so the volume matches V_target to
/// relative 1e-12 (exact when beta^2 is dyadic).
std::pair<IntLattice, double> normalize(const IntLattice& L, double V_target);

std::string reduction_to_json(const Reduction& R);
Reduction reduction_from_json(const std::string& text);

}  // namespace hlawka
