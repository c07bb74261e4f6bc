#include "hlawka/ensemble.hpp"

#include <cmath>

#include <omp.h>

#include "hlawka/lll.hpp"

namespace hlawka {

std::pair<Rat, Rat> loeliger_lhs_rhs(i64 p, int n, int k,
                                     const std::function<Rat(const std::vector<i64>&)>& g) {
    auto codes = enumerate_codes(p, n, k);
    Rat lhs(0);
    for (const auto& c : codes) {
        for_each_word(c, [&](const std::vector<i64>& w) {
            for (i64 v : w)
                if (v != 0) {
                    lhs += g(w);
                    return;
                }
        });
    }
    lhs /= Rat((long)codes.size());
    Rat rhs(0);
    for_each_vector(p, n, [&](const std::vector<i64>& v) {
        for (i64 x : v)
            if (x != 0) {
                rhs += g(v);
                return;
            }
    });
    Int pk, pn, pz((long)p);
    mpz_pow_ui(pk.get_mpz_t(), pz.get_mpz_t(), (unsigned)k);
    mpz_pow_ui(pn.get_mpz_t(), pz.get_mpz_t(), (unsigned)n);
    rhs *= Rat(pk - 1) / Rat(pn - 1);
    return {lhs, rhs};
}

namespace {

struct LiftEval {
    // exact tallies for the ball indicator; double sums otherwise
    bool exact = false;
    i64 count = 0, count_kernel = 0;        // exact path
    double sum = 0, sum_kernel = 0;         // float path
};

struct LiftContext {
    const Reduction* red;
    double V;
    int m;
    double beta2;        // normalization factor on squared norms
    Rat vt_sq;           // V as exact rational, squared
};

/// Evaluates sum_f over one normalized lift, splitting off the kernel fiber.
LiftEval eval_lift(const LiftContext& ctx, const LinearCode& C, const TestFunction& f,
                   bool primitive, Exec exec) {
    IntLattice lift = lift_code(*ctx.red, C);
    auto red = lll_reduce(lift);
    // kernel test in enumeration coordinates: M (U B)^T x
    Mat UB = to_i64(matmul(to_z(red.U), to_z(*lift.basis)));
    ModpTest ker{to_i64(matmul(to_z(ctx.red->M), to_z(transpose(UB)))), ctx.red->p};
    for (auto& v : ker.M.a) v %= ctx.red->p;

    LiftEval out;
    double factor = ctx.beta2 * to_double(lift.scale);
    if (f.kind == TestFunction::Kind::BallIndicator) {
        out.exact = true;
        // beta^2 s Q <= r^2 exactly: V^2 Q^m <= r^{2m} det G
        Rat coeff = ctx.vt_sq / Rat(det(lift.G));
        Rat rr = rat_from_double(f.r);
        Rat rhs(1);
        for (int i = 0; i < 2 * ctx.m; ++i) rhs *= rr;
        QBound qb = QBound::from_powered(ctx.m, coeff, rhs);
        BallTally t = tally_ball(red.L.G, qb, &ker, exec, -1);
        out.count = primitive ? t.prim : t.all;
        out.count_kernel = primitive ? t.ker_prim : t.ker_all;
        out.sum = (double)out.count;
        out.sum_kernel = (double)out.count_kernel;
        return out;
    }
    double support = f.support_radius();
    if (!std::isfinite(support)) {
        IntLattice normalized = lift;
        normalized.scale = lift.scale * rat_from_double(ctx.beta2);
        support = gaussian_tail_radius(normalized, f.tau, 1e-12);
    }
    Rat coeff = ctx.vt_sq / Rat(det(lift.G));
    Rat rr = rat_from_double(support);
    Rat rhs(1);
    for (int i = 0; i < 2 * ctx.m; ++i) rhs *= rr;
    QBound qb = QBound::from_powered(ctx.m, coeff, rhs);
    RadialSums s = sum_radial(red.L.G, qb, factor,
                              [&f](double x) { return f.eval_sq(x); }, &ker, exec, -1);
    out.sum = primitive ? s.prim : s.all;
    out.sum_kernel = primitive ? s.ker_prim : s.ker_all;
    return out;
}

LiftContext make_context(const EnsembleSpec& spec) {
    LiftContext ctx;
    ctx.red = &spec.red;
    ctx.V = spec.V;
    ctx.m = spec.red.base.m;
    double vol_lift = std::pow((double)spec.red.p, spec.red.n - spec.k) * volume(spec.red.base);
    ctx.beta2 = std::pow(spec.V / vol_lift, 2.0 / ctx.m);
    Rat v = rat_from_double(spec.V);
    ctx.vt_sq = v * v;
    return ctx;
}

}  // namespace

AverageReport average_sum_f(const EnsembleSpec& spec, const TestFunction& f, bool primitive) {
    LiftContext ctx = make_context(spec);
    AverageReport rep;
    rep.p = spec.red.p;
    rep.k = spec.k;
    rep.f = f.describe();
    rep.primitive = primitive;

    int m = ctx.m;
    double integral = f.integral(m);
    rep.target = primitive ? integral / (zeta(m) * spec.V) : integral / spec.V;

    if (spec.mode == EnsembleSpec::Mode::Exhaustive) {
        auto codes = enumerate_codes(spec.red.p, spec.red.n, spec.k);
        rep.trials = (i64)codes.size();
        bool exact = f.kind == TestFunction::Kind::BallIndicator;
        Rat acc(0), acc_ker(0);
        double facc = 0, facc_ker = 0;
        for (const auto& c : codes) {
            LiftEval e = eval_lift(ctx, c, f, primitive, Exec::Parallel);
            if (exact) {
                acc += Rat((long)e.count);
                acc_ker += Rat((long)e.count_kernel);
            }
            facc += e.sum;
            facc_ker += e.sum_kernel;
        }
        if (exact) {
            acc /= Rat((long)codes.size());
            acc_ker /= Rat((long)codes.size());
            rep.exact_estimate = acc;
            rep.exact_kernel = acc_ker;
            rep.estimate = to_double(acc);
            rep.kernel_term = to_double(acc_ker);
        } else {
            rep.estimate = facc / (double)codes.size();
            rep.kernel_term = facc_ker / (double)codes.size();
        }
    } else {
        i64 T = spec.trials;
        rep.trials = T;
        std::vector<double> vals((size_t)T), kvals((size_t)T);
        std::vector<std::string> errors((size_t)T);
#pragma omp parallel for schedule(dynamic)
        for (i64 t = 0; t < T; ++t) {
            try {
                LinearCode c = sample_code(spec.red.p, spec.red.n, spec.k,
                                           trial_seed(spec.seed, (u64)t));
                LiftEval e = eval_lift(ctx, c, f, primitive, Exec::Serial);
                vals[(size_t)t] = e.sum;
                kvals[(size_t)t] = e.sum_kernel;
            } catch (const std::exception& ex) {
                errors[(size_t)t] = ex.what();
            }
        }
        for (const auto& err : errors)
            if (!err.empty()) throw cap_error(err);
        double mean = 0;
        for (double v : vals) mean += v;
        mean /= (double)T;
        double var = 0;
        for (double v : vals) var += (v - mean) * (v - mean);
        var = T > 1 ? var / ((double)T * (T - 1)) : 0.0;
        double kmean = 0;
        for (double v : kvals) kmean += v;
        kmean /= (double)T;
        rep.estimate = mean;
        rep.stderr_ = std::sqrt(var);
        rep.kernel_term = kmean;
    }
    rep.abs_err = std::fabs(rep.estimate - rep.target);
    rep.rel_err = rep.target != 0 ? rep.abs_err / std::fabs(rep.target) : rep.abs_err;
    return rep;
}

AverageReport theta_average(const EnsembleSpec& spec, double tau) {
    AverageReport rep = average_sum_f(spec, TestFunction::gaussian(tau), false);
    // theta includes the origin
    rep.estimate += 1.0;
    int m = spec.red.base.m;
    rep.target = std::pow(M_PI / tau, m / 2.0) / spec.V + 1.0;
    rep.abs_err = std::fabs(rep.estimate - rep.target);
    rep.rel_err = rep.abs_err / rep.target;
    rep.f = "theta:" + std::to_string(tau);
    return rep;
}

MhResult mh_search(const EnsembleSpec& spec, double eps, double L_mult) {
    LiftContext ctx = make_context(spec);
    int m = ctx.m;
    double zm = zeta(m);
    double vm = unit_ball_volume(m);
    double r = std::pow(L_mult * (1.0 - eps) * zm * spec.V / vm, 1.0 / m);
    TestFunction ball = TestFunction::ball(r);

    MhResult res;
    res.radius = r;
    res.bound = L_mult * (1.0 - eps) / std::pow(2.0, m);

    auto check_code = [&](const LinearCode& c) -> std::pair<bool, i64> {
        LiftEval e = eval_lift(ctx, c, ball, true, Exec::Serial);
        return {e.count == 0, e.count};
    };
    auto certify = [&](const LinearCode& c, i64 trial) {
        IntLattice lift = lift_code(spec.red, c);
        auto [pt, lam_sq] = shortest_vector(lift);
        res.hit = true;
        res.trial = trial;
        res.code = c;
        res.beta = std::sqrt(ctx.beta2);
        res.lambda1_sq = lam_sq;
        double lam_scaled = std::sqrt(ctx.beta2 * to_double(lam_sq));
        res.delta_cert = vm * std::pow(lam_scaled / 2.0, m) / spec.V;
        if (res.delta_cert < res.bound)
            throw std::logic_error("mh_search: certificate failed the density bound");
    };

    if (spec.mode == EnsembleSpec::Mode::Exhaustive) {
        auto codes = enumerate_codes(spec.red.p, spec.red.n, spec.k);
        for (i64 i = 0; i < (i64)codes.size(); ++i) {
            auto [hit, count] = check_code(codes[(size_t)i]);
            if (res.min_primitive_count < 0 || count < res.min_primitive_count)
                res.min_primitive_count = count;
            if (hit) {
                certify(codes[(size_t)i], i);
                return res;
            }
        }
        return res;
    }

    // Monte Carlo: blocks evaluated in parallel, first hit by trial index wins.
    const i64 block = 64;
    for (i64 start = 0; start < spec.trials; start += block) {
        i64 end = std::min(spec.trials, start + block);
        std::vector<i64> counts((size_t)(end - start), -1);
        std::vector<std::string> errors((size_t)(end - start));
#pragma omp parallel for schedule(dynamic)
        for (i64 t = start; t < end; ++t) {
            try {
                LinearCode c = sample_code(spec.red.p, spec.red.n, spec.k,
                                           trial_seed(spec.seed, (u64)t));
                counts[(size_t)(t - start)] = check_code(c).second;
            } catch (const std::exception& ex) {
                errors[(size_t)(t - start)] = ex.what();
            }
        }
        for (const auto& err : errors)
            if (!err.empty()) throw cap_error(err);
        for (i64 t = start; t < end; ++t) {
            i64 count = counts[(size_t)(t - start)];
            if (res.min_primitive_count < 0 || count < res.min_primitive_count)
                res.min_primitive_count = count;
            if (count == 0) {
                certify(sample_code(spec.red.p, spec.red.n, spec.k, trial_seed(spec.seed, (u64)t)),
                        t);
                return res;
            }
        }
    }
    return res;
}

}  // namespace hlawka
