#include "hlawka/linalg.hpp"

#include <stdexcept>

namespace hlawka {

MatZ to_z(const Mat& m) {
    MatZ r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Int((long)m.a[i]);
    return r;
}

Mat to_i64(const MatZ& m) {
    Mat r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) {
        if (!m.a[i].fits_slong_p()) throw std::overflow_error("matrix entry exceeds 64 bits");
        r.a[i] = m.a[i].get_si();
    }
    return r;
}

Mat conjugate_gram(const Mat& B, const Mat& G) {
    MatZ bz = to_z(B), gz = to_z(G);
    MatZ r = matmul(matmul(bz, gz), transpose(bz));
    return to_i64(r);
}

Int det(const MatZ& m) {
    assert(m.rows == m.cols);
    int n = m.rows;
    if (n == 0) return 1;
    MatZ a = m;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int sw = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { sw = i; break; }
            if (sw < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(sw, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    Int d = a.at(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

Int det(const Mat& m) { return det(to_z(m)); }

MatZ hnf(const MatZ& in) {
    MatZ a = in;
    int rows = a.rows, cols = a.cols;
    int r = 0;  // next pivot row
    for (int c = 0; c < cols && r < rows; ++c) {
        // gcd out column c below row r
        for (int i = r + 1; i < rows; ++i) {
            if (a.at(i, c) == 0) continue;
            if (a.at(r, c) == 0) {
                for (int j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(i, j));
                continue;
            }
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       a.at(r, c).get_mpz_t(), a.at(i, c).get_mpz_t());
            Int u = a.at(r, c) / g, v = a.at(i, c) / g;
            // (row_r, row_i) <- (s*row_r + t*row_i, -v*row_r + u*row_i)
            for (int j = 0; j < cols; ++j) {
                Int x = a.at(r, j), y = a.at(i, j);
                a.at(r, j) = s * x + t * y;
                a.at(i, j) = u * y - v * x;
            }
        }
        if (a.at(r, c) == 0) continue;
        if (a.at(r, c) < 0)
            for (int j = 0; j < cols; ++j) a.at(r, j) = -a.at(r, j);
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a.at(i, c).get_mpz_t(), a.at(r, c).get_mpz_t());
            if (q != 0)
                for (int j = 0; j < cols; ++j) a.at(i, j) -= q * a.at(r, j);
        }
        ++r;
    }
    MatZ out(r, cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = a.at(i, j);
    return out;
}

int rank_q(const MatZ& m) {
    MatZ a = m;
    int rank = 0;
    for (int c = 0; c < a.cols && rank < a.rows; ++c) {
        int piv = -1;
        for (int i = rank; i < a.rows; ++i)
            if (a.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < a.cols; ++j) std::swap(a.at(rank, j), a.at(piv, j));
        for (int i = rank + 1; i < a.rows; ++i) {
            if (a.at(i, c) == 0) continue;
            Int pr = a.at(rank, c), pi = a.at(i, c);
            for (int j = 0; j < a.cols; ++j)
                a.at(i, j) = a.at(i, j) * pr - a.at(rank, j) * pi;
        }
        ++rank;
    }
    return rank;
}

int rank_q(const Mat& m) { return rank_q(to_z(m)); }

std::vector<Rat> solve_left(const Mat& B, const std::vector<i64>& v) {
    // Solve y * B = v: transpose to B^T y^T = v^T, Gaussian elimination over Q.
    int n = B.rows, d = B.cols;
    assert((int)v.size() == d);
    MatQ aug(d, n + 1);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = Rat((long)B.at(j, i));
        aug.at(i, n) = Rat((long)v[i]);
    }
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < n && r < d; ++c) {
        int piv = -1;
        for (int i = r; i < d; ++i)
            if (aug.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j <= n; ++j) std::swap(aug.at(r, j), aug.at(piv, j));
        Rat inv = 1 / aug.at(r, c);
        for (int j = 0; j <= n; ++j) aug.at(r, j) *= inv;
        for (int i = 0; i < d; ++i) {
            if (i == r || aug.at(i, c) == 0) continue;
            Rat f = aug.at(i, c);
            for (int j = 0; j <= n; ++j) aug.at(i, j) -= f * aug.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    for (int i = r; i < d; ++i)
        if (aug.at(i, n) != 0) return {};  // inconsistent: v outside the span
    std::vector<Rat> y(n, Rat(0));
    for (int i = 0; i < r; ++i) y[pivots[i]] = aug.at(i, n);
    return y;
}

bool in_row_lattice(const Mat& B, const std::vector<i64>& v) {
    auto y = solve_left(B, v);
    if (y.empty() && !(B.rows == 0)) {
        // empty either means inconsistent or zero-dimensional solve
        bool all_zero = true;
        for (i64 x : v) all_zero &= (x == 0);
        return all_zero;
    }
    for (const Rat& q : y)
        if (q.get_den() != 1) return false;
    return true;
}

std::vector<Rat> inverse_diagonal(const Mat& G) {
    int n = G.rows;
    MatZ gz = to_z(G);
    Int d = det(gz);
    assert(d != 0);
    std::vector<Rat> diag(n);
    for (int i = 0; i < n; ++i) {
        // cofactor: delete row i, col i
        MatZ minor(n - 1, n - 1);
        for (int r = 0, rr = 0; r < n; ++r) {
            if (r == i) continue;
            for (int c = 0, cc = 0; c < n; ++c) {
                if (c == i) continue;
                minor.at(rr, cc++) = gz.at(r, c);
            }
            ++rr;
        }
        Rat q(det(minor));
        q /= Rat(d);
        q.canonicalize();
        diag[i] = q;
    }
    return diag;
}

bool is_positive_definite(const Mat& G) {
    int n = G.rows;
    if (n != G.cols) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (G.at(i, j) != G.at(j, i)) return false;
    MatQ a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = Rat((long)G.at(i, j));
    // LDL^T: all pivots must stay positive
    for (int k = 0; k < n; ++k) {
        if (a.at(k, k) <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            Rat f = a.at(i, k) / a.at(k, k);
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return true;
}

bool RankTracker::add(const std::vector<i64>& v) {
    std::vector<Rat> w(dim);
    for (int i = 0; i < dim; ++i) w[i] = Rat((long)v[i]);
    for (size_t r = 0; r < rows.size(); ++r) {
        int p = pivot[r];
        if (w[p] == 0) continue;
        Rat f = w[p] / rows[r][p];
        for (int i = 0; i < dim; ++i) w[i] -= f * rows[r][i];
    }
    int p = -1;
    for (int i = 0; i < dim; ++i)
        if (w[i] != 0) { p = i; break; }
    if (p < 0) return false;
    rows.push_back(std::move(w));
    pivot.push_back(p);
    return true;
}

}  // namespace hlawka
