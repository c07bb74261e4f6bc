#include "hlawka/cyclotomic.hpp"

#include <cmath>
#include <limits>

#include "hlawka/lattice_ops.hpp"
#include "hlawka/lll.hpp"

namespace hlawka {

CycField::CycField(i64 q_) : q(q_), n((int)q_ - 1) {
    if (q < 3 || !is_prime((u64)q)) throw std::invalid_argument("conductor must be an odd prime");
}

CycField::Elt CycField::one() const {
    Elt e(n, 0);
    e[0] = 1;
    return e;
}

namespace {

// length-q representation modulo x^q - 1; canonical form zeroes index q-1
std::vector<i64> canon(std::vector<i64> c, i64 q) {
    i64 top = c[(size_t)q - 1];
    std::vector<i64> out((size_t)q - 1);
    for (i64 i = 0; i + 1 < q; ++i) out[i] = c[i] - top;
    return out;
}

std::vector<i64> expand(const CycField::Elt& a, i64 q) {
    std::vector<i64> c((size_t)q, 0);
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    return c;
}

}  // namespace

CycField::Elt CycField::zeta_pow(i64 e) const {
    e %= q;
    if (e < 0) e += q;
    std::vector<i64> c((size_t)q, 0);
    c[(size_t)e] = 1;
    return canon(std::move(c), q);
}

CycField::Elt CycField::add(const Elt& a, const Elt& b) const {
    Elt r(n);
    for (int i = 0; i < n; ++i) r[i] = a[i] + b[i];
    return r;
}

CycField::Elt CycField::sub(const Elt& a, const Elt& b) const {
    Elt r(n);
    for (int i = 0; i < n; ++i) r[i] = a[i] - b[i];
    return r;
}

CycField::Elt CycField::mul(const Elt& a, const Elt& b) const {
    std::vector<i64> c((size_t)q, 0);
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            c[(size_t)((i + j) % q)] += a[i] * b[j];
        }
    }
    return canon(std::move(c), q);
}

CycField::Elt CycField::conj(const Elt& a) const {
    std::vector<i64> c((size_t)q, 0);
    for (int i = 0; i < n; ++i) c[(size_t)((q - i) % q)] += a[i];
    return canon(std::move(c), q);
}

CycField::Elt CycField::pow(const Elt& a, int e) const {
    Elt r = one();
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

bool CycField::is_zero(const Elt& a) const {
    for (i64 v : a)
        if (v != 0) return false;
    return true;
}

i64 CycField::trace(const Elt& a) const {
    // Tr(sum a_i zeta^i) = a_0 q - sum_i a_i
    i64 s = 0;
    for (i64 v : a) s += v;
    return a[0] * q - s;
}

IntLattice cyclotomic_trace_lattice(i64 q) {
    CycField F(q);
    Mat g(F.n, F.n);
    for (int i = 0; i < F.n; ++i)
        for (int j = 0; j < F.n; ++j) g.at(i, j) = (i == j) ? q - 1 : -1;
    return IntLattice::from_gram(std::move(g));
}

IntLattice craig_lattice(i64 q, int l) {
    CycField F(q);
    if (l < 1 || 2 * l >= q) throw std::invalid_argument("craig_lattice: need 1 <= l < q/2");
    // w = ((1-zeta)(1-zeta^{-1}))^l; G_ij = Tr(w zeta^{i-j})
    CycField::Elt u = F.mul(F.sub(F.one(), F.zeta_pow(1)), F.sub(F.one(), F.zeta_pow(-1)));
    CycField::Elt w = F.pow(u, l);
    std::vector<i64> tr((size_t)q);  // Tr(w zeta^d) for d = 0..q-1
    for (i64 d = 0; d < q; ++d) tr[(size_t)d] = F.trace(F.mul(w, F.zeta_pow(d)));
    Mat g(F.n, F.n);
    for (int i = 0; i < F.n; ++i)
        for (int j = 0; j < F.n; ++j) g.at(i, j) = tr[(size_t)(((i - j) % q + q) % q)];
    return IntLattice::from_gram(std::move(g), Rat(1, (long)q));
}

int craig_parameter_schedule(int n) {
    double l = (double)n / (2.0 * std::log((double)n + 1.0));
    return std::max(1, (int)std::llround(l));
}

std::vector<std::pair<i64, i64>> split_primes(i64 q, int count, i64 start) {
    std::vector<std::pair<i64, i64>> out;
    i64 p = std::max<i64>(start, 2);
    i64 steps = 0;
    while ((int)out.size() < count) {
        if (++steps > 50'000'000) throw cap_error("split_primes: search cap exceeded");
        if (p % q == 1 && is_prime((u64)p)) {
            PrimeField F(p);
            i64 g = 0;
            for (i64 a = 2; a < p; ++a) {
                i64 cand = F.pow(a, (p - 1) / q);
                if (cand != 1) { g = cand; break; }
            }
            if (g != 0) out.emplace_back(p, g);
        }
        ++p;
    }
    return out;
}

Reduction ideal_reduction(i64 q, int t, i64 p, i64 g) {
    CycField F(q);
    if (t < 1) throw std::invalid_argument("ideal_reduction: t >= 1");
    PrimeField Fp(p);
    if (p % q != 1 || Fp.pow(g, q) != 1 || Fp.reduce(g) == 1)
        throw std::invalid_argument("ideal_reduction: (p, g) is not a valid split pair");
    int n = F.n;
    IntLattice block = cyclotomic_trace_lattice(q);
    Mat gram(n * t, n * t);
    for (int b = 0; b < t; ++b)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) gram.at(b * n + i, b * n + j) = block.G.at(i, j);
    Mat M(t, n * t);
    i64 gi = 1;
    for (int i = 0; i < n; ++i) {
        for (int b = 0; b < t; ++b) M.at(b, b * n + i) = gi;
        gi = Fp.mul(gi, g);
    }
    IntLattice base = IntLattice::from_gram(std::move(gram), Rat(1), Mat::identity(n * t));
    return make_reduction(std::move(base), p, std::move(M));
}

Mat zeta_multiplication_matrix(i64 q) {
    CycField F(q);
    Mat T(F.n, F.n);
    for (int i = 0; i < F.n; ++i) {
        CycField::Elt img = F.zeta_pow(i + 1);
        for (int j = 0; j < F.n; ++j) T.at(i, j) = img[j];
    }
    return T;
}

KSuccessiveMinima k_successive_minima(const IntLattice& L, const CycField& F, int t) {
    if (t < 1 || t > 2) throw std::invalid_argument("k_successive_minima: t in {1,2} only");
    if (L.m != F.n * t) throw std::invalid_argument("k_successive_minima: rank mismatch");
    auto red = lll_reduce(L);
    i64 qcap = 0;
    for (int i = 0; i < L.m; ++i) qcap = std::max(qcap, red.L.G.at(i, i));
    auto pts = collect_points(red.L.G, QBound{qcap}, -1);

    // map enumeration coords to base coordinates (field components)
    Mat U = red.U;
    const Mat* basis = L.basis ? &*L.basis : nullptr;
    auto to_field_coords = [&](const std::vector<i64>& x) {
        std::vector<i64> mid(L.m, 0);
        for (int i = 0; i < L.m; ++i)
            for (int j = 0; j < L.m; ++j) mid[j] += x[i] * U.at(i, j);
        if (!basis) return mid;
        std::vector<i64> out(basis->cols, 0);
        for (int i = 0; i < basis->rows; ++i)
            for (int j = 0; j < basis->cols; ++j) out[j] += mid[i] * basis->at(i, j);
        return out;
    };

    KSuccessiveMinima out;
    out.t = t;
    std::vector<std::vector<CycField::Elt>> witnesses;  // each: t field elements
    for (const auto& [coords, Q] : pts) {
        auto base_coords = to_field_coords(coords);
        std::vector<CycField::Elt> comp(t);
        for (int b = 0; b < t; ++b)
            comp[b] = CycField::Elt(base_coords.begin() + b * F.n,
                                    base_coords.begin() + (b + 1) * F.n);
        bool independent = false;
        if (witnesses.empty()) {
            independent = true;
        } else if ((int)witnesses.size() < t) {
            // t = 2: K-independent iff the 2x2 field determinant is nonzero
            const auto& w = witnesses[0];
            CycField::Elt det = F.sub(F.mul(w[0], comp[1]), F.mul(w[1], comp[0]));
            independent = !F.is_zero(det);
        }
        if (!independent) continue;
        witnesses.push_back(comp);
        out.values_sq.push_back(Rat((long)Q) * L.scale);
        out.witnesses.push_back(base_coords);
        if ((int)witnesses.size() == t) break;
    }
    if ((int)out.values_sq.size() != t)
        throw std::logic_error("k_successive_minima: radius bound failed to reach rank t");
    return out;
}

RogersRun rogers_density_search(i64 q, int t, const std::vector<i64>& p_list, int k,
                                i64 trials, u64 seed, double eps) {
    if (t < 2) throw std::invalid_argument("rogers_density_search: t >= 2 required");
    if (k < 1 || k > t) throw std::invalid_argument("rogers_density_search: need 1 <= k <= t");
    CycField F(q);
    int n = F.n, m = n * t;
    double rk = (double)F.roots_of_unity();
    double zm = zeta(m);
    double vm = unit_ball_volume(m);
    // integral of f == r(K) V zeta(m) (1-eps) / n at V = 1
    double target_integral = rk * zm * (1.0 - eps) / n;
    double r = std::pow(target_integral * m / (std::exp(1.0) * (1.0 - std::exp(-(double)t)) * vm),
                        1.0 / m);
    TestFunction f = TestFunction::rogers(r, (double)t, n);
    double threshold = (1.0 - eps) * rk / n;
    double rhs = rk * t * zm * (1.0 - eps) / (std::exp(1.0) * (1.0 - std::exp(-(double)t)) *
                                              std::pow(2.0, m));

    RogersRun run;
    run.q = q;
    run.t = t;
    run.k = k;
    run.eps = eps;
    run.r = r;
    run.threshold = threshold;
    run.rhs = rhs;
    run.found = false;
    run.min_sum = std::numeric_limits<double>::infinity();

    for (i64 p : p_list) {
        auto sp = split_primes(q, 1, p);
        if (sp.front().first != p)
            throw std::invalid_argument("rogers_density_search: p does not split completely");
        i64 g = sp.front().second;
        Reduction red = ideal_reduction(q, t, p, g);
        run.p = p;

        Int n_codes = gaussian_binomial(t, k, p);
        bool exhaustive = n_codes <= Int((long)std::max<i64>(trials, 64));
        run.exhaustive = exhaustive;
        std::vector<LinearCode> codes;
        if (exhaustive) codes = enumerate_codes(p, t, k);
        i64 n_trials = exhaustive ? (i64)codes.size() : trials;

        double vol_lift = std::pow((double)p, t - k) * volume(red.base);
        double beta2 = std::pow(vol_lift, -2.0 / m);
        double support = f.support_radius();

        for (i64 trial = 0; trial < n_trials; ++trial) {
            u64 tseed = exhaustive ? 0 : trial_seed(seed, (u64)trial);
            LinearCode C = exhaustive ? codes[(size_t)trial] : sample_code(p, t, k, tseed);
            IntLattice lift = lift_code(red, C);
            auto redl = lll_reduce(lift);
            // support bound: beta^2 s Q <= support^2, exactly via the m-th power
            Rat coeff = Rat(1) / Rat(det(lift.G));
            Rat rp = rat_from_double(support);
            Rat rhs_pow(1);
            for (int i = 0; i < 2 * m; ++i) rhs_pow *= rp;
            QBound qb = QBound::from_powered(m, coeff, rhs_pow);
            double factor = beta2 * to_double(lift.scale);
            RadialSums sums = sum_radial(redl.L.G, qb, factor,
                                         [&f](double x) { return f.eval_sq(x); }, nullptr,
                                         Exec::Serial, -1);
            RogersTrialRow row;
            row.p = p;
            row.seed = tseed;
            row.code_id = trial;
            row.sum_f = sums.prim;
            row.accepted = sums.prim <= threshold;
            run.min_sum = std::min(run.min_sum, sums.prim);
            if (row.accepted) {
                run.found = true;
                auto ks = k_successive_minima(lift, F, t);
                double prod = 1.0;
                for (const Rat& lam_sq : ks.values_sq) {
                    double scaled = beta2 * to_double(lam_sq);
                    row.lambda_k_sq.push_back(scaled);
                    prod *= vm * std::pow(std::sqrt(scaled) / 2.0, m);
                }
                row.lhs = std::pow(prod, 1.0 / t);
            } else {
                row.lhs = 0.0;
            }
            row.rhs = rhs;
            run.rows.push_back(std::move(row));
        }
    }
    return run;
}

}  // namespace hlawka
