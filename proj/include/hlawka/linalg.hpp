#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

#include "hlawka/common.hpp"

namespace hlawka {

template <class T>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}
    Matrix(int r, int c, std::initializer_list<T> v) : rows(r), cols(c), a(v) {
        assert((int)a.size() == r * c);
    }

    T& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const T& at(int r, int c) const { return a[(size_t)r * cols + c]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

using Mat = Matrix<i64>;    // small exact integer matrices (Grams, bases, maps)
using MatZ = Matrix<Int>;   // arbitrary-precision intermediates (HNF, dets)
using MatQ = Matrix<Rat>;

MatZ to_z(const Mat& m);
Mat to_i64(const MatZ& m);  // throws std::overflow_error if an entry does not fit

template <class T>
Matrix<T> matmul(const Matrix<T>& x, const Matrix<T>& y) {
    assert(x.cols == y.rows);
    Matrix<T> r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const T& v = x.at(i, k);
            if (v == T(0)) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
    Matrix<T> r(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

/// B * G * B^T for an integer basis B acting on a symmetric Gram G.
Mat conjugate_gram(const Mat& B, const Mat& G);

Int det(const MatZ& m);  // Bareiss, exact
Int det(const Mat& m);

/// Row-style Hermite normal form. Returns an r x cols matrix whose rows are a
/// triangular basis (positive pivots, entries above a pivot reduced into
/// [0, pivot)) of the row lattice of `in`; r = rank.
MatZ hnf(const MatZ& in);

int rank_q(const MatZ& m);  // rank over Q (fraction-free elimination)
int rank_q(const Mat& m);

/// Solve x * B = v over Q for a full-row-rank B (rows are basis vectors).
/// Returns empty if v is outside the row span.
std::vector<Rat> solve_left(const Mat& B, const std::vector<i64>& v);

/// True iff v lies in the integer row span of B.
bool in_row_lattice(const Mat& B, const std::vector<i64>& v);

/// Diagonal of G^{-1} for symmetric positive-definite integer G, exact.
std::vector<Rat> inverse_diagonal(const Mat& G);

/// Exact symmetric LDL^T test for positive definiteness.
bool is_positive_definite(const Mat& G);

/// Incremental exact rank tracker over Q for integer vectors.
struct RankTracker {
    int dim;
    std::vector<std::vector<Rat>> rows;  // reduced rows, each with a pivot
    std::vector<int> pivot;
    explicit RankTracker(int d) : dim(d) {}
    int rank() const { return (int)rows.size(); }
    /// Adds v if it increases the rank; returns true when it did.
    bool add(const std::vector<i64>& v);
};

}  // namespace hlawka
