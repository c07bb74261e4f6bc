#pragma once

#include "hlawka/reduction.hpp"
#include "hlawka/testfn.hpp"
#include "hlawka/lattice_ops.hpp"

namespace hlawka {

struct EnsembleSpec {
    Reduction red;
    int k;             // code dimension
    double V = 1.0;    // normalization volume
    enum class Mode { Exhaustive, MonteCarlo } mode = Mode::Exhaustive;
    i64 trials = 0;    // Monte Carlo only
    u64 seed = 0;
};

/// Both sides of the balancedness identity over all (n,k,p)-codes:
/// lhs = |C|^{-1} sum_C sum_{c != 0} g(c), rhs = (p^k-1)/(p^n-1) sum_{v != 0} g(v).
/// Exact rationals; they must agree.
std::pair<Rat, Rat> loeliger_lhs_rhs(i64 p, int n, int k,
                                     const std::function<Rat(const std::vector<i64>&)>& g);

struct AverageReport {
    double estimate = 0;
    double target = 0;
    double abs_err = 0;
    double rel_err = 0;
    double stderr_ = 0;        // Monte Carlo only
    double kernel_term = 0;    // contribution of points in the kernel fiber
    std::optional<Rat> exact_estimate;  // exhaustive ball-indicator runs
    std::optional<Rat> exact_kernel;
    i64 p = 0;
    int k = 0;
    i64 trials = 0;
    std::string f;
    bool primitive = false;
};

/// Ensemble average of sum_x f(x) over normalized lifts; target is the
/// closed-form limit V^{-1} int f (all points) or (zeta(m) V)^{-1} int f
/// (primitive points). The kernel-fiber term is reported separately.
AverageReport average_sum_f(const EnsembleSpec& spec, const TestFunction& f, bool primitive);

/// Average theta series; target V^{-1} (pi/tau)^{m/2} + 1.
AverageReport theta_average(const EnsembleSpec& spec, double tau);

struct MhResult {
    bool hit = false;
    i64 trial = -1;             // hit index (code index when exhaustive)
    LinearCode code;            // the accepting code
    double beta = 0;            // normalization applied to the lift
    Rat lambda1_sq;             // exact first minimum of the (unnormalized) lift
    double delta_cert = 0;      // certified density
    double bound = 0;           // L (1 - eps) / 2^m
    double radius = 0;          // MH radius
    i64 min_primitive_count = -1;  // smallest count seen when no hit
};

/// Scans the ensemble for a lattice with zero primitive points inside the
/// radius defined by vol B_r = L (1-eps) zeta(m) V; any hit is re-certified
/// with an exact shortest-vector computation.
MhResult mh_search(const EnsembleSpec& spec, double eps, double L_mult = 2.0);

}  // namespace hlawka
