#pragma once

#include <array>
#include <functional>
#include <optional>

#include "hlawka/enumerate.hpp"
#include "hlawka/matring.hpp"
#include "hlawka/reduction.hpp"

namespace hlawka {

/// Quaternion with doubled integer coordinates (2a, 2b, 2c, 2d): Lipschitz
/// integers have all-even entries, Hurwitz half-integers all-odd.
struct Quat {
    std::array<i64, 4> c{0, 0, 0, 0};  // doubled (a, b, c, d)

    static Quat from_int(i64 a, i64 b, i64 cc, i64 d) { return Quat{{2 * a, 2 * b, 2 * cc, 2 * d}}; }
    static Quat from_doubled(i64 a, i64 b, i64 cc, i64 d) { return Quat{{a, b, cc, d}}; }
    bool hurwitz_integral() const {
        int par = (int)(c[0] & 1);
        for (i64 v : c)
            if ((int)(v & 1) != par) return false;
        return true;
    }
    bool operator==(const Quat&) const = default;
};

Quat quat_mul(const Quat& x, const Quat& y);
Quat quat_add(const Quat& x, const Quat& y);
Quat quat_conj(const Quat& x);
i64 quat_nrd(const Quat& x);  // reduced norm a^2+b^2+c^2+d^2, exact integer

/// The 24 Hurwitz units (the 8 Lipschitz units first).
std::vector<Quat> hurwitz_units();

/// Wedderburn-style isomorphism data H/pH -> M_2(F_p): phi(i) = (0 -1; 1 0),
/// phi(j) = (a b; b -a) with a^2 + b^2 = -1 (mod p), (a, b) lex-least.
struct HurwitzIso {
    i64 p;
    i64 a, b;
    Mat2 phi_one, phi_i, phi_j, phi_k;
    Mat2 apply(const Quat& x) const;  // ring map on Hurwitz-integral quaternions
};

HurwitzIso hurwitz_iso(i64 p);

/// Componentwise reduction from an order power into M_2(F_p)^m, flattened to
/// an F_p-linear map on 4m integer coordinates.
struct QuatReduction {
    enum class Flavor { Lipschitz, Hurwitz } flavor;
    i64 p;
    int m;
    IntLattice base;  // Z^{4m} (Lipschitz) or the doubled Hurwitz Gram, scale 1/2
    Mat M;            // 4m x 4m flat map mod p (row-major 2x2 per component)
    i64 u = 0;        // root of -1 mod p (Lipschitz flavor)
    std::optional<HurwitzIso> iso;  // Hurwitz flavor

    Reduction to_reduction() const { return make_reduction(base, p, M); }
    /// Image of a coordinate vector, one 2x2 matrix per component.
    M2Vec apply(const std::vector<i64>& coords) const;
};

/// p = 1 (mod 4): split reduction of the Lipschitz order, kernel p Z^{4m}.
QuatReduction lipschitz_reduction(i64 p, int m);

/// Any odd p: reduction of the Hurwitz order (coordinates over {1,i,j,omega}).
QuatReduction hurwitz_reduction(i64 p, int m);

/// Lift of a free matrix-ring code: rank 4m, volume p^{4m} V(base) / |C|.
IntLattice lift_matrix_code(const QuatReduction& R, const FreeMatCode& C);

/// Left multiplication by a Hurwitz unit as an integer matrix on the
/// reduction's coordinates (an isometry of the base form).
Mat unit_action_matrix(const QuatReduction& R, const Quat& unit);

struct Lemma1Report {
    i64 p;
    i64 checked = 0;
    i64 noninvertible = 0;
    i64 violations = 0;
    std::optional<std::array<i64, 4>> counterexample;
};

/// Exhaustive check over Lipschitz residues in [0, min(p, bound))^4:
/// det phi = 0 (mod p) must force the squared norm to be 0 (mod p).
Lemma1Report noninvertible_norm_check(i64 p, i64 bound = -1, Exec exec = Exec::Parallel);

struct BalancedReport {
    bool balanced = false;
    i64 L = 0;             // codes through each unit-bearing vector
    i64 M = 0;             // elements per code (|R|^k)
    i64 codes = 0;
    i64 unit_vectors = 0;  // |(R^m)*|
    bool counting_ok = false;  // M * codes >= L * |(R^m)*|
};

BalancedReport balanced_check(i64 p, int m, int k);

/// Exact both sides of the averaging bound E[g*] <= |R|^k / |(R^m)*| g*(R^m)
/// for a nonnegative g.
std::pair<Rat, Rat> balanced_average_bound(i64 p, int m, int k,
                                           const std::function<Rat(const M2Vec&)>& g);

}  // namespace hlawka
