#include "hlawka/effective.hpp"

#include <cmath>

#include "hlawka/code.hpp"
#include "hlawka/cyclotomic.hpp"
#include "hlawka/lattice_ops.hpp"
#include "hlawka/lll.hpp"

namespace hlawka {

namespace {

bool looks_like_zn(const IntLattice& L) {
    return L.G == Mat::identity(L.m) && L.scale == 1;
}

}  // namespace

Sandwich point_sandwich(const IntLattice& L, double r, std::optional<double> l0_opt) {
    int m = L.m;
    double l0 = l0_opt ? *l0_opt
                       : (looks_like_zn(L) ? std::sqrt((double)m) / 2.0
                                           : covering_radius_bound(L));
    if (r <= l0) throw std::invalid_argument("point_sandwich: need r > l0");
    double vm = unit_ball_volume(m);
    double vol = volume(L);
    Sandwich s;
    s.lower = vm * std::pow(r - l0, m) / vol;
    s.upper = vm * std::pow(r + l0, m) / vol;
    s.exact = count_points(L, r, false) + 1;
    return s;
}

CraigBounds craig_bounds(i64 q, int l) {
    int n = (int)q - 1;
    if (l < 1 || 2 * l >= (int)q) throw std::invalid_argument("craig_bounds: need 1 <= l < q/2");
    CraigBounds b;
    double qn = (double)q;
    b.hermite_lb = std::sqrt(2.0 * l) / std::pow(qn, (2.0 * l - 1) / (2.0 * n));
    b.dual_hermite_lb =
        std::sqrt((double)(n - 2 * l)) / std::pow(qn, (double)(n - 2 * l - 1) / (2.0 * n));
    b.covering_ub = (std::sqrt((double)n) / 2.0) / b.dual_hermite_lb;
    return b;
}

EffectivePlan effective_plan(const PlanParams& params) {
    if (!(params.delta > 0 && params.delta < 1))
        throw std::invalid_argument("effective_plan: rate must lie in (0,1)");
    if (params.nu <= 0) throw std::invalid_argument("effective_plan: nu must be positive");
    EffectivePlan plan;
    plan.params = params;
    int n = params.n;
    if (params.base == PlanParams::Base::Craig) {
        if (params.craig_q < 3) throw std::invalid_argument("effective_plan: craig_q required");
        n = (int)params.craig_q - 1;
    }
    plan.m = n;  // natural reductions: m = n
    plan.k = std::max(1, (int)std::llround(params.delta * n));

    if (params.base == PlanParams::Base::Zn) {
        plan.gamma_kernel = 1.0;  // gamma(p Z^n) = 1
        plan.mu_base = std::sqrt((double)n) / 2.0;
    } else {
        int l = params.craig_l > 0 ? params.craig_l : craig_parameter_schedule(n);
        CraigBounds cb = craig_bounds(params.craig_q, l);
        plan.gamma_kernel = cb.hermite_lb;  // gamma(p Lambda) = gamma(Lambda)
        plan.mu_base = cb.covering_ub;
    }

    double m = (double)plan.m;
    double r = std::sqrt(m / (2.0 * M_PI * std::exp(1.0)));
    if (params.quaternionic) {
        double kk = (double)plan.k;
        if (2.0 * kk <= m)
            throw std::invalid_argument("effective_plan: quaternionic variant needs k > m/2");
        plan.p_min_i = params.c1 * std::pow(r, 2.0 * m / (2.0 * kk - m));
    } else {
        // p^{n delta / m} gamma >= c1 sqrt(m), with n = m
        plan.p_min_i = std::pow(params.c1 * std::sqrt(m) / plan.gamma_kernel, 1.0 / params.delta);
    }
    // p^{n/m} >= (c2 m mu / gamma)^{1+nu}, with n = m
    plan.p_min_ii =
        std::pow(params.c2 * m * plan.mu_base / plan.gamma_kernel, 1.0 + params.nu);

    double p_min = std::max(plan.p_min_i, plan.p_min_ii);
    plan.p_chosen = (i64)next_prime((u64)std::ceil(p_min - 1e-9));

    double pj = (double)plan.p_chosen;
    double paren = 1.0 + plan.mu_base / (r * std::pow(pj, (double)(n - plan.k) / m));
    plan.density_bound =
        (1.0 - params.eps) / std::pow(2.0, m - 1.0) * std::pow(paren, -m);

    Int fam = gaussian_binomial(n, plan.k, plan.p_chosen);
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, fam.get_mpz_t());
    plan.log_family_size = std::log(mant) + (double)exp2 * std::log(2.0);
    return plan;
}

double optimal_delta(const PlanParams& params, double lo, double hi, double step) {
    double best_delta = lo;
    i64 best_p = -1;
    for (double d = lo; d <= hi + 1e-12; d += step) {
        PlanParams q = params;
        q.delta = d;
        EffectivePlan plan = effective_plan(q);
        if (best_p < 0 || plan.p_chosen < best_p) {
            best_p = plan.p_chosen;
            best_delta = d;
        }
    }
    return best_delta;
}

std::vector<Table1Row> table1_rows(int n) {
    std::vector<Table1Row> rows;
    double nn = (double)n;
    double ln = std::log(nn);
    double lln = std::log(ln);
    rows.push_back({"construction-a-z", n, "(n, n/3)", 1.5 * ln, nn * nn * ln});
    rows.push_back({"double-circulant", n, "(n, n/2)", 2.0 * ln + lln, nn * ln});
    // rank m = 2 phi(l); with m = n the alphabet grows like l^3 (log l)^{phi(l)}
    rows.push_back({"cyclotomic", n, "(2, 1)",
                    3.0 * std::log(nn / 2.0) + (nn / 2.0) * std::log(std::log(nn / 2.0)),
                    nn * ln});
    double craig_delta = lln / (2.0 * ln + lln);
    rows.push_back({"craig-reduction", n,
                    "(n, n*" + std::to_string(craig_delta) + ")",
                    ln + 0.5 * lln, nn * nn * lln});
    return rows;
}

double packing_efficiency_goal(const IntLattice& L) {
    auto [pt, lam_sq] = shortest_vector(L);
    double rho = std::sqrt(to_double(lam_sq)) / 2.0;
    double rho_eff = std::pow(volume(L) / unit_ball_volume(L.m), 1.0 / L.m);
    return rho / rho_eff;
}

}  // namespace hlawka
