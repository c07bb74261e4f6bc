#include "hlawka/enumerate.hpp"

#include <algorithm>
#include <cmath>

#include <omp.h>

#include "hlawka/lll.hpp"

namespace hlawka {

QBound QBound::from_plain(const Rat& limit) {
    QBound b;
    if (limit < 0) { b.qmax = -1; return b; }
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), limit.get_num().get_mpz_t(), limit.get_den().get_mpz_t());
    if (q > Int((long)(i64)1 << 62)) throw cap_error("QBound: radius exceeds safe integer range");
    b.qmax = q.fits_slong_p() ? (i64)q.get_si() : ((i64)1 << 62);
    return b;
}

QBound QBound::from_powered(int power, const Rat& coeff, const Rat& rhs) {
    if (coeff <= 0) throw std::invalid_argument("QBound: coeff must be positive");
    QBound b;
    if (rhs < 0) { b.qmax = -1; return b; }
    // largest integer q with coeff * q^power <= rhs, via float guess + exact fixup
    double guess = std::pow(to_double(rhs / coeff), 1.0 / power);
    if (guess > 4.6e18) throw cap_error("QBound: radius exceeds safe integer range");
    i64 q = (i64)std::floor(guess);
    auto ok = [&](i64 v) {
        if (v < 0) return true;
        Int vz((long)v), pw;
        mpz_pow_ui(pw.get_mpz_t(), vz.get_mpz_t(), power);
        return Rat(pw) * coeff <= rhs;
    };
    while (!ok(q)) --q;
    while (ok(q + 1)) ++q;
    b.qmax = q;
    return b;
}

bool ModpTest::is_zero(const std::vector<i64>& x) const {
    for (int r = 0; r < M.rows; ++r) {
        i128 acc = 0;
        for (int c = 0; c < M.cols; ++c) acc += (i128)M.at(r, c) * x[c];
        if ((i64)(acc % p) != 0) return false;
    }
    return true;
}

namespace {

i128 quad_form(const Mat& G, const std::vector<i64>& x) {
    int n = G.rows;
    i128 acc = 0;
    for (int i = 0; i < n; ++i) {
        acc += (i128)G.at(i, i) * x[i] * x[i];
        for (int j = i + 1; j < n; ++j) acc += 2 * (i128)G.at(i, j) * x[i] * x[j];
    }
    return acc;
}

struct PointSink {
    virtual void point(const std::vector<i64>& x, i64 Q) = 0;
    virtual ~PointSink() = default;
};

/// Depth-first enumeration of x with Q(x) <= qmax, one representative per
/// +-pair (the highest-index nonzero coordinate is positive). Floating-point
/// bounds prune; the exact integer form decides.
class Enumerator {
public:
    Enumerator(const Mat& G, i64 qmax) : G_(G), n_(G.rows), qmax_(qmax) {
        if (qmax < 0) { empty_ = true; return; }
        for (i64 g : G.a)
            if (std::llabs(g) > ((i64)1 << 45))
                throw std::overflow_error("Gram entries exceed safe enumeration range");
        Bd_.resize(n_);
        mu_.assign(n_, std::vector<double>(n_, 0.0));
        // recompute exact mu for the double model
        {
            std::vector<std::vector<Rat>> r(n_, std::vector<Rat>(n_, Rat(0)));
            std::vector<std::vector<Rat>> mu(n_, std::vector<Rat>(n_, Rat(0)));
            std::vector<Rat> Bq(n_, Rat(0));
            for (int i = 0; i < n_; ++i) {
                for (int j = 0; j <= i; ++j) {
                    Rat acc((long)G.at(i, j));
                    for (int k = 0; k < j; ++k) acc -= mu[j][k] * r[i][k];
                    r[i][j] = acc;
                    if (j < i) mu[i][j] = r[i][j] / Bq[j];
                }
                Bq[i] = r[i][i];
            }
            for (int i = 0; i < n_; ++i) {
                Bd_[i] = to_double(Bq[i]);
                for (int j = 0; j < i; ++j) mu_[i][j] = to_double(mu[i][j]);
            }
        }
        bound_fp_ = (double)qmax_ + 0.5;
    }

    i64 top_max() const {
        if (empty_) return -1;
        return (i64)std::floor(std::sqrt(std::max(0.0, bound_fp_ / Bd_[n_ - 1])));
    }

    /// Enumerates the slice x_{n-1} = top.
    void run_slice(i64 top, PointSink& sink, i64 cap) const {
        if (empty_) return;
        std::vector<i64> x(n_, 0);
        x[n_ - 1] = top;
        double y = (double)top;
        double S = Bd_[n_ - 1] * y * y;
        if (S > bound_fp_) return;
        i64 seen = 0;
        dfs(n_ - 2, S, top == 0, x, sink, cap, seen);
    }

    void run_all(PointSink& sink, i64 cap) const {
        for (i64 t = 0; t <= top_max(); ++t) run_slice(t, sink, cap);
    }

private:
    void dfs(int k, double S, bool zero_above, std::vector<i64>& x, PointSink& sink,
             i64 cap, i64& seen) const {
        if (k < 0) {
            if (zero_above) return;  // origin
            i128 Q = quad_form(G_, x);
            if (Q <= (i128)qmax_) {
                if (cap > 0 && ++seen > cap) throw cap_error("point enumeration cap exceeded");
                sink.point(x, (i64)Q);
            }
            return;
        }
        double c = 0;
        for (int i = k + 1; i < n_; ++i) c -= mu_[i][k] * x[i];
        double room = (bound_fp_ - S) / Bd_[k];
        if (room < 0) return;
        double rad = std::sqrt(room);
        i64 lo = (i64)std::ceil(c - rad - 1e-9);
        i64 hi = (i64)std::floor(c + rad + 1e-9);
        if (zero_above && lo < 0) lo = 0;
        if (hi - lo > ((i64)1 << 25)) throw cap_error("enumeration interval too wide");
        for (i64 v = lo; v <= hi; ++v) {
            double dv = (double)v - c;
            double S2 = S + Bd_[k] * dv * dv;
            if (S2 > bound_fp_ + 1e-6) continue;
            x[k] = v;
            dfs(k - 1, S2, zero_above && v == 0, x, sink, cap, seen);
        }
        x[k] = 0;
    }

    const Mat& G_;
    int n_;
    i64 qmax_;
    bool empty_ = false;
    double bound_fp_ = -1;
    std::vector<double> Bd_;
    std::vector<std::vector<double>> mu_;
};

i64 vec_gcd(const std::vector<i64>& x) {
    i64 g = 0;
    for (i64 v : x) g = gcd_abs(g, v);
    return g;
}

/// Runs one sink per top-level slice and merges in slice order, so results do
/// not depend on the schedule or thread count.
template <class SliceResult, class MakeSink, class Merge>
void run_sliced(const Mat& G, const QBound& b, Exec exec, i64 cap, MakeSink make,
                Merge merge) {
    Enumerator e(G, b.qmax);
    i64 tmax = e.top_max();
    if (tmax < 0) return;
    int nslices = (int)tmax + 1;
    std::vector<SliceResult> results(nslices);
    std::vector<std::string> errors(nslices);
    bool parallel = exec == Exec::Parallel && nslices > 1;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int t = 0; t < nslices; ++t) {
        try {
            auto sink = make(&results[t]);
            e.run_slice(t, sink, cap);
        } catch (const std::exception& ex) {
            errors[t] = ex.what();
            if (errors[t].empty()) errors[t] = "enumeration error";
        }
    }
    for (const auto& err : errors)
        if (!err.empty()) throw cap_error(err);
    i64 total = 0;
    for (int t = 0; t < nslices; ++t) {
        merge(results[t]);
        total += results[t].points;
        if (cap > 0 && total > cap) throw cap_error("point enumeration cap exceeded");
    }
}

}  // namespace

BallTally tally_ball(const Mat& G, const QBound& b, const ModpTest* ker, Exec exec, i64 cap) {
    if (cap < 0) cap = caps().max_points;
    struct Slice {
        BallTally t;
        i64 points = 0;
    };
    struct Sink : PointSink {
        Slice* s;
        const ModpTest* ker;
        void point(const std::vector<i64>& x, i64) override {
            ++s->points;
            bool prim = vec_gcd(x) == 1;
            bool kz = ker && ker->is_zero(x);
            s->t.all += 2;
            if (prim) s->t.prim += 2;
            if (kz) {
                s->t.ker_all += 2;
                if (prim) s->t.ker_prim += 2;
            }
        }
    };
    BallTally out;
    run_sliced<Slice>(
        G, b, exec, cap,
        [&](Slice* s) {
            Sink k;
            k.s = s;
            k.ker = ker;
            return k;
        },
        [&](const Slice& s) {
            out.all += s.t.all;
            out.prim += s.t.prim;
            out.ker_all += s.t.ker_all;
            out.ker_prim += s.t.ker_prim;
        });
    return out;
}

RadialSums sum_radial(const Mat& G, const QBound& support, double factor,
                      const std::function<double(double)>& f, const ModpTest* ker, Exec exec,
                      i64 cap) {
    if (cap < 0) cap = caps().max_points;
    struct Slice {
        RadialSums r;
        i64 points = 0;
    };
    struct Sink : PointSink {
        Slice* s;
        const ModpTest* ker;
        double factor;
        const std::function<double(double)>* f;
        void point(const std::vector<i64>& x, i64 Q) override {
            ++s->points;
            double v = 2.0 * (*f)(factor * (double)Q);
            bool prim = vec_gcd(x) == 1;
            bool kz = ker && ker->is_zero(x);
            s->r.all += v;
            if (prim) s->r.prim += v;
            if (kz) {
                s->r.ker_all += v;
                if (prim) s->r.ker_prim += v;
            }
        }
    };
    RadialSums out;
    run_sliced<Slice>(
        G, support, exec, cap,
        [&](Slice* s) {
            Sink k;
            k.s = s;
            k.ker = ker;
            k.factor = factor;
            k.f = &f;
            return k;
        },
        [&](const Slice& s) {
            out.all += s.r.all;
            out.prim += s.r.prim;
            out.ker_all += s.r.ker_all;
            out.ker_prim += s.r.ker_prim;
            out.points += s.points;
        });
    return out;
}

std::vector<std::pair<std::vector<i64>, i64>> collect_points(const Mat& G, const QBound& b,
                                                             i64 cap) {
    if (cap < 0) cap = caps().max_points;
    struct Sink : PointSink {
        std::vector<std::pair<std::vector<i64>, i64>>* out;
        void point(const std::vector<i64>& x, i64 Q) override { out->emplace_back(x, Q); }
    };
    std::vector<std::pair<std::vector<i64>, i64>> pts;
    Enumerator e(G, b.qmax);
    Sink s;
    s.out = &pts;
    e.run_all(s, cap);
    if (cap > 0 && (i64)pts.size() > cap) throw cap_error("point enumeration cap exceeded");
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b2) {
        if (a.second != b2.second) return a.second < b2.second;
        return a.first < b2.first;
    });
    return pts;
}

SvpOut svp_gram(const Mat& G) {
    int n = G.rows;
    i64 best = G.at(0, 0);
    for (int i = 1; i < n; ++i) best = std::min(best, G.at(i, i));
    // shrink: enumerate at the current best until no strictly shorter vector
    struct MinSink : PointSink {
        i64 best;
        void point(const std::vector<i64>&, i64 Q) override { best = std::min(best, Q); }
    };
    MinSink ms;
    ms.best = best;
    Enumerator e(G, best);
    e.run_all(ms, -1);
    SvpOut out;
    out.qmin = ms.best;
    for (auto& [coords, Q] : collect_points(G, QBound{ms.best}, -1)) {
        if (Q != ms.best) continue;
        std::vector<i64> c = coords;
        for (i64 v : c) {
            if (v > 0) break;
            if (v < 0) {
                for (auto& w : c) w = -w;
                break;
            }
        }
        out.minimizers.push_back(std::move(c));
    }
    std::sort(out.minimizers.begin(), out.minimizers.end());
    return out;
}

}  // namespace hlawka
