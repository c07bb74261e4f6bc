#include "hlawka/fp.hpp"

namespace hlawka {

int rref_mod_p(Mat& m, i64 p) {
    PrimeField F(p);
    for (auto& x : m.a) x = F.reduce(x);
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (m.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(piv, j));
        i64 inv = F.inv(m.at(rank, c));
        for (int j = 0; j < m.cols; ++j) m.at(rank, j) = F.mul(m.at(rank, j), inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, c) == 0) continue;
            i64 f = m.at(i, c);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

int rank_mod_p(const Mat& m, i64 p) {
    Mat c = m;
    return rref_mod_p(c, p);
}

Mat kernel_mod_p(const Mat& m, i64 p) {
    PrimeField F(p);
    Mat r = m;
    int rank = rref_mod_p(r, p);
    int n = m.cols;
    std::vector<int> pivot_col(rank);
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < rank; ++i) {
        int c = 0;
        while (r.at(i, c) == 0) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    Mat ker(n - rank, n);
    int row = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        ker.at(row, c) = 1;
        for (int i = 0; i < rank; ++i)
            ker.at(row, pivot_col[i]) = F.neg(r.at(i, c));
        ++row;
    }
    return ker;
}

Mat preimage_mod_p(const Mat& m, const Mat& sub, i64 p) {
    // x maps into rowspace(sub) iff [m x ; sub^T] loses no rank over the sub rows;
    // solve by stacking: {x : m x = y^T sub for some y}. Equivalent kernel trick:
    // kernel of the map x -> (m x mod rowspace(sub)). Build the quotient by
    // appending sub^T columns and taking the kernel of [m | -sub^T] projected to x.
    int n = m.cols, rows = m.rows, k = sub.rows;
    Mat stacked(rows, n + k);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < n; ++j) stacked.at(i, j) = m.at(i, j);
        for (int j = 0; j < k; ++j) stacked.at(i, n + j) = -sub.at(j, i);
    }
    Mat ker = kernel_mod_p(stacked, p);  // rows: (x, y)
    Mat pre(ker.rows, n);
    for (int i = 0; i < ker.rows; ++i)
        for (int j = 0; j < n; ++j) pre.at(i, j) = ker.at(i, j);
    // drop dependent x-parts (distinct (x,y) may share x)
    Mat r = pre;
    int rank = rref_mod_p(r, p);
    Mat out(rank, n);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = r.at(i, j);
    return out;
}

bool in_row_space_mod_p(const Mat& m, const std::vector<i64>& v, i64 p) {
    Mat aug(m.rows + 1, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    for (int j = 0; j < m.cols; ++j) aug.at(m.rows, j) = v[j];
    return rank_mod_p(aug, p) == rank_mod_p(m, p);
}

}  // namespace hlawka
