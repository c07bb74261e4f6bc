#pragma once

#include <functional>
#include <utility>

#include "hlawka/lattice.hpp"

namespace hlawka {

enum class Exec { Serial, Parallel };

/// Exact acceptance threshold on the integer Gram form value Q(x) = x^T G x.
/// Both constructors reduce the predicate to an integer comparison Q <= qmax,
/// so enumeration never depends on floating-point boundary behavior.
struct QBound {
    i64 qmax = -1;  // negative: empty ball

    /// Q <= limit
    static QBound from_plain(const Rat& limit);
    /// coeff * Q^power <= rhs  (coeff > 0); used for volume-normalized radii
    static QBound from_powered(int power, const Rat& coeff, const Rat& rhs);
};

/// Optional per-point classifier x -> (M x mod p == 0), in the coordinates the
/// enumeration runs in.
struct ModpTest {
    Mat M;
    i64 p;
    bool is_zero(const std::vector<i64>& x) const;
};

/// Counts of nonzero lattice points with Q <= qmax (both signs counted).
struct BallTally {
    i64 all = 0, prim = 0, ker_all = 0, ker_prim = 0;
};

BallTally tally_ball(const Mat& G, const QBound& b, const ModpTest* ker,
                     Exec exec = Exec::Parallel, i64 cap = -1);

/// Sums of a radial function f(true_normsq) with true_normsq = factor * Q,
/// over nonzero points inside the support bound. Deterministic across thread
/// counts: per-slice partials are merged in a fixed order.
struct RadialSums {
    double all = 0, prim = 0, ker_all = 0, ker_prim = 0;
    i64 points = 0;
};

RadialSums sum_radial(const Mat& G, const QBound& support, double factor,
                      const std::function<double(double)>& f, const ModpTest* ker,
                      Exec exec = Exec::Parallel, i64 cap = -1);

/// One representative of each +-pair with Q <= qmax, sorted by (Q, coords).
std::vector<std::pair<std::vector<i64>, i64>> collect_points(const Mat& G, const QBound& b,
                                                             i64 cap = -1);

/// Minimum of the form over nonzero vectors, with all minimizing
/// representatives (sign-normalized: first nonzero coordinate positive).
struct SvpOut {
    i64 qmin = 0;
    std::vector<std::vector<i64>> minimizers;
};
SvpOut svp_gram(const Mat& G);

}  // namespace hlawka
