#pragma once

#include <optional>

#include "hlawka/lattice.hpp"

namespace hlawka {

struct Sandwich {
    double lower, upper;
    i64 exact;  // all points in the closed ball, origin included
};

/// Point-count sandwich (r - l0)^m V_m <= V N(r) <= (r + l0)^m V_m.
/// l0 defaults to sqrt(m)/2 for Z^m-shaped Grams and to the GSO covering
/// bound otherwise.
Sandwich point_sandwich(const IntLattice& L, double r, std::optional<double> l0 = {});

struct CraigBounds {
    double hermite_lb;       // sqrt(2l) / q^{(2l-1)/2n}, n = q-1
    double dual_hermite_lb;  // sqrt(n-2l) / q^{(n-2l-1)/2n}
    double covering_ub;      // (sqrt(n)/2) / dual_hermite_lb
};

CraigBounds craig_bounds(i64 q, int l);

struct PlanParams {
    enum class Base { Zn, Craig } base = Base::Zn;
    int n = 0;
    i64 craig_q = 0;      // Craig base: q = n + 1 (prime)
    int craig_l = 0;      // 0: use the schedule
    double delta = 1.0 / 3.0;
    double nu = 0.01;
    double c1 = 1.0, c2 = 1.0;
    double eps = 0.3;
    bool quaternionic = false;  // replaces condition (i) by p >= c1 r^{2m/(2k-m)}
};

struct EffectivePlan {
    PlanParams params;
    int m = 0, k = 0;
    double gamma_kernel = 0;   // Hermite lower bound for the kernel family
    double mu_base = 0;        // covering parameter upper bound for the base
    double p_min_i = 0;        // threshold from condition (i)
    double p_min_ii = 0;       // threshold from condition (ii)
    i64 p_chosen = 0;          // least prime >= max(p_min_i, p_min_ii)
    double density_bound = 0;  // guaranteed density at p_chosen
    double log_family_size = 0;  // ln of the Gaussian binomial at p_chosen
};

EffectivePlan effective_plan(const PlanParams& params);

/// Grid search over delta minimizing p_chosen (ties to the smallest delta).
double optimal_delta(const PlanParams& params, double lo = 0.2, double hi = 0.5,
                     double step = 0.001);

struct Table1Row {
    std::string construction;
    int rank;
    std::string nk;       // code parameters, as a formula
    double log_p;         // ln of the alphabet-size scaling
    double log_family;    // family-size exponent (up to constants)
};

/// Formula columns of the comparison table, evaluated at each n.
std::vector<Table1Row> table1_rows(int n);

/// rho / rho_eff with rho = lambda_1 / 2 and rho_eff = (V / V_m)^{1/m};
/// the Minkowski benchmark is 1/2.
double packing_efficiency_goal(const IntLattice& L);

}  // namespace hlawka
