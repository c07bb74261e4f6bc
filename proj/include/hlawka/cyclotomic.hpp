#pragma once

#include "hlawka/reduction.hpp"

namespace hlawka {

/// Prime-conductor cyclotomic field Q(zeta_q), q an odd prime, degree n = q-1.
/// Integral elements are integer vectors in the power basis 1, zeta, ...,
/// zeta^{q-2}; zeta^{q-1} = -(1 + zeta + ... + zeta^{q-2}).
struct CycField {
    i64 q;
    int n;
    explicit CycField(i64 q_);

    using Elt = std::vector<i64>;  // length n, power-basis coefficients

    Elt zero() const { return Elt(n, 0); }
    Elt one() const;
    Elt zeta_pow(i64 e) const;  // zeta^e as a canonical element
    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt conj(const Elt& a) const;  // zeta -> zeta^{-1}
    Elt pow(const Elt& a, int e) const;
    bool is_zero(const Elt& a) const;

    /// Exact trace: Tr(1) = q-1, Tr(zeta^a) = -1 for a != 0 mod q.
    i64 trace(const Elt& a) const;

    /// Number of roots of unity in the field: +-zeta^j, so 2q.
    i64 roots_of_unity() const { return 2 * q; }
};

/// Trace-form Gram of Z[zeta]: T_ij = Tr(zeta^{i-j}) = q*[i==j] - 1.
/// Determinant q^{q-2} (the field discriminant up to sign).
IntLattice cyclotomic_trace_lattice(i64 q);

/// Rank q-1 lattice of the ideal (1-zeta)^l with the trace form, stored with
/// scale 1/q. For l = 1 this is the root lattice A_{q-1} on the nose.
IntLattice craig_lattice(i64 q, int l);

/// l = round(n / (2 ln(n+1))), clamped to >= 1.
int craig_parameter_schedule(int n);

/// First `count` primes p >= start with p = 1 (mod q), each with a root g of
/// order q mod p (g = a^{(p-1)/q} for the least a giving g != 1).
std::vector<std::pair<i64, i64>> split_primes(i64 q, int count, i64 start = 2);

/// Reduction from (Z[zeta])^t with the block trace form onto F_p^t: block b
/// sends power-basis coordinates (a_0..a_{n-1}) to sum a_i g^i mod p.
Reduction ideal_reduction(i64 q, int t, i64 p, i64 g);

/// Multiplication-by-zeta matrix on power-basis coordinates (an isometry of
/// the trace form).
Mat zeta_multiplication_matrix(i64 q);

struct KSuccessiveMinima {
    int t;
    std::vector<Rat> values_sq;              // true (scaled) squared K-minima
    std::vector<std::vector<i64>> witnesses; // coordinates in the lattice basis
};

/// Successive minima over the field K for a module of rank t <= 2 inside
/// (Z[zeta])^t. Coordinates of L are relative to the ideal_reduction base
/// (via L.basis); K-independence decided exactly in the ring.
KSuccessiveMinima k_successive_minima(const IntLattice& L, const CycField& F, int t);

struct RogersTrialRow {
    i64 p;
    u64 seed;        // per-trial derived seed (0 for exhaustive)
    i64 code_id;     // trial index / exhaustive index
    double sum_f;
    bool accepted;
    std::vector<double> lambda_k_sq;  // scaled by beta^2 (volume-1 lattice)
    double lhs;  // (prod Delta_i^K)^{1/t}
    double rhs;
};

struct RogersRun {
    i64 q, p;
    int t, k;
    double eps, r, threshold, rhs;
    bool exhaustive;
    bool found;
    double min_sum;
    std::vector<RogersTrialRow> rows;
};

/// Ensemble search for a lattice whose primitive Rogers sum passes the
/// acceptance threshold (1-eps) r(K)/n; reports both sides of the successive
/// density product bound for every acceptor.
RogersRun rogers_density_search(i64 q, int t, const std::vector<i64>& p_list, int k,
                                i64 trials, u64 seed, double eps);

}  // namespace hlawka
