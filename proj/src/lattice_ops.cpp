#include "hlawka/lattice_ops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hlawka/lll.hpp"

namespace hlawka {

namespace {

std::vector<i64> to_original_coords(const std::vector<i64>& x, const Mat& U) {
    // point sum_i x_i b'_i with b'_i = sum_j U_ij b_j  =>  coords x^T U
    int n = U.rows;
    std::vector<i64> out(U.cols, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < U.cols; ++j) out[j] += x[i] * U.at(i, j);
    return out;
}

void sign_normalize(std::vector<i64>& v) {
    for (i64 x : v) {
        if (x > 0) return;
        if (x < 0) {
            for (auto& w : v) w = -w;
            return;
        }
    }
}

}  // namespace

std::pair<LatticePoint, Rat> shortest_vector(const IntLattice& L) {
    if (L.m > caps().max_svp_rank)
        throw cap_error("shortest_vector: rank exceeds enumeration cap");
    auto red = lll_reduce(L);
    SvpOut s = svp_gram(red.L.G);
    std::vector<std::vector<i64>> cands;
    for (const auto& x : s.minimizers) {
        auto orig = to_original_coords(x, red.U);
        sign_normalize(orig);
        cands.push_back(std::move(orig));
    }
    // canonical minimizer: lexicographically greatest sign-normalized
    // representative (Z^n yields the first basis vector)
    std::sort(cands.begin(), cands.end());
    LatticePoint pt;
    pt.coords = cands.back();
    pt.sqnorm = Rat((long)s.qmin) * L.scale;
    return {pt, pt.sqnorm};
}

std::vector<Rat> successive_minima(const IntLattice& L, int upto) {
    if (upto < 1 || upto > L.m) throw std::invalid_argument("successive_minima: bad upto");
    if (L.m > caps().max_svp_rank)
        throw cap_error("successive_minima: rank exceeds enumeration cap");
    auto red = lll_reduce(L);
    // the first `upto` reduced basis vectors witness lambda_upto <= max G_ii
    i64 qcap = 0;
    for (int i = 0; i < upto; ++i) qcap = std::max(qcap, red.L.G.at(i, i));
    auto pts = collect_points(red.L.G, QBound{qcap}, -1);
    RankTracker tracker(L.m);
    std::vector<Rat> out;
    for (const auto& [coords, Q] : pts) {
        if (tracker.add(coords)) {
            out.push_back(Rat((long)Q) * L.scale);
            if ((int)out.size() == upto) break;
        }
    }
    if ((int)out.size() != upto)
        throw std::logic_error("successive_minima: bound failed to capture requested minima");
    return out;
}

i64 count_points(const IntLattice& L, double r, bool primitive_only, Exec exec) {
    if (r < 0) return 0;
    Rat r2 = rat_from_double(r);
    r2 *= r2;
    auto red = lll_reduce(L);
    QBound b = QBound::from_plain(r2 / L.scale);
    // refusal pre-estimate from the covering-radius sandwich
    double l0 = covering_radius_bound(L);
    double vm = unit_ball_volume(L.m);
    double vol = volume(L);
    double upper = vm * std::pow(r + l0, L.m) / vol;
    if (upper > 4.0 * (double)caps().max_points + 64.0) {
        std::ostringstream os;
        os << "count_points: estimated count " << upper << " exceeds cap; sandwich bounds ["
           << vm * std::pow(std::max(0.0, r - l0), L.m) / vol << ", " << upper << "]";
        throw cap_error(os.str(), std::to_string(upper));
    }
    BallTally t = tally_ball(red.L.G, b, nullptr, exec, -1);
    return primitive_only ? t.prim : t.all;
}

double gaussian_tail_radius(const IntLattice& L, double tau, double eps) {
    double l0 = covering_radius_bound(L);
    double vm = unit_ball_volume(L.m);
    double vol = volume(L);
    double R = std::sqrt(std::max(1.0, std::log(1.0 / eps) / tau));
    for (;; R *= 1.25) {
        // tail over shells (R+j, R+j+1]: count <= V_m (R+j+1+l0)^m / vol
        double tail = 0;
        for (int j = 0;; ++j) {
            double shell = std::exp(-tau * (R + j) * (R + j)) *
                           vm * std::pow(R + j + 1 + l0, L.m) / vol;
            tail += shell;
            if (shell < eps * 1e-6 && j > 2) break;
            if (j > 10000) { tail = eps * 10; break; }
        }
        if (tail < eps) return R;
        if (R > 1e9) throw std::logic_error("gaussian_tail_radius: no convergence");
    }
}

double theta_series(const IntLattice& L, double tau, double eps, Exec exec) {
    if (tau <= 0) throw std::invalid_argument("theta_series: tau must be positive");
    double R = gaussian_tail_radius(L, tau, eps);
    auto red = lll_reduce(L);
    Rat r2 = rat_from_double(R);
    r2 *= r2;
    QBound b = QBound::from_plain(r2 / L.scale);
    double factor = to_double(L.scale);
    RadialSums s = sum_radial(red.L.G, b, factor,
                              [tau](double t) { return std::exp(-tau * t); }, nullptr, exec, -1);
    return 1.0 + s.all;
}

double sum_test_function(const IntLattice& L, const TestFunction& f, bool primitive_only,
                         Exec exec, double tail_eps) {
    double R = f.support_radius();
    if (!std::isfinite(R)) R = gaussian_tail_radius(L, f.tau, tail_eps);
    auto red = lll_reduce(L);
    Rat r2 = rat_from_double(R);
    r2 *= r2;
    QBound b = QBound::from_plain(r2 / L.scale);
    double factor = to_double(L.scale);
    RadialSums s = sum_radial(red.L.G, b, factor,
                              [&f](double t) { return f.eval_sq(t); }, nullptr, exec, -1);
    return primitive_only ? s.prim : s.all;
}

DensityReport density_report(const IntLattice& L, int successive_upto) {
    DensityReport rep;
    auto minima = successive_minima(L, std::max(1, successive_upto));
    double vol = volume(L);
    double vm = unit_ball_volume(L.m);
    double lam1 = std::sqrt(to_double(minima[0]));
    rep.lambda1_sq = to_double(minima[0]);
    rep.volume = vol;
    rep.packing_density = vm * std::pow(lam1 / 2, L.m) / vol;
    rep.hermite = lam1 / std::pow(vol, 1.0 / L.m);
    for (const Rat& lam_sq : minima)
        rep.successive_densities.push_back(
            vm * std::pow(std::sqrt(to_double(lam_sq)) / 2, L.m) / vol);
    double rho_eff = std::pow(vol / vm, 1.0 / L.m);
    rep.packing_efficiency = (lam1 / 2) / rho_eff;
    return rep;
}

std::vector<std::pair<Rat, i64>> theta_coefficients(const IntLattice& L, const Rat& bound) {
    auto red = lll_reduce(L);
    QBound b = QBound::from_plain(bound / L.scale);
    auto pts = collect_points(red.L.G, b, -1);
    std::vector<std::pair<Rat, i64>> out;
    for (const auto& [coords, Q] : pts) {
        Rat norm = Rat((long)Q) * L.scale;
        if (norm > bound) continue;
        if (!out.empty() && out.back().first == norm)
            out.back().second += 2;
        else
            out.emplace_back(norm, 2);
    }
    return out;
}

}  // namespace hlawka
