#include "hlawka/lll.hpp"

#include <cmath>

namespace hlawka {

namespace {

struct Gso {
    std::vector<std::vector<Rat>> mu;  // mu[i][j], j < i
    std::vector<Rat> B;                // squared GSO norms
};

Gso compute_gso(const Mat& G) {
    int n = G.rows;
    Gso g;
    g.mu.assign(n, std::vector<Rat>(n, Rat(0)));
    g.B.assign(n, Rat(0));
    // r[i][j] = <b_i, b*_j>
    std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            Rat acc((long)G.at(i, j));
            for (int k = 0; k < j; ++k) acc -= g.mu.at(j)[k] * r[i][k];
            r[i][j] = acc;
            if (j < i) g.mu[i][j] = r[i][j] / g.B[j];
        }
        g.B[i] = r[i][i];
    }
    return g;
}

void row_op(Mat& G, Mat& U, int i, int j, i64 q) {
    // b_i <- b_i - q b_j, applied symmetrically to the Gram
    int n = G.rows;
    for (int c = 0; c < n; ++c) G.at(i, c) -= q * G.at(j, c);
    for (int r = 0; r < n; ++r) G.at(r, i) -= q * G.at(r, j);
    for (int c = 0; c < U.cols; ++c) U.at(i, c) -= q * U.at(j, c);
}

void row_swap(Mat& G, Mat& U, int i, int j) {
    int n = G.rows;
    for (int c = 0; c < n; ++c) std::swap(G.at(i, c), G.at(j, c));
    for (int r = 0; r < n; ++r) std::swap(G.at(r, i), G.at(r, j));
    for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
}

i64 nearest_int(const Rat& q) {
    Int quot;
    mpz_fdiv_q(quot.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if ((q - Rat(quot)) * 2 >= 1) quot += 1;  // round half up
    if (!quot.fits_slong_p()) throw std::overflow_error("LLL size-reduction coefficient overflow");
    return quot.get_si();
}

}  // namespace

std::vector<Rat> gso_norms(const Mat& G) { return compute_gso(G).B; }

LLLResult lll_reduce(const IntLattice& L, Rat delta) {
    if (!(delta > Rat(1, 4) && delta <= 1))
        throw std::invalid_argument("lll_reduce: delta must lie in (1/4, 1]");
    int n = L.m;
    Mat G = L.G;
    Mat U = Mat::identity(n);
    if (n <= 1) {
        LLLResult res{L, U};
        return res;
    }
    Gso g = compute_gso(G);
    int k = 1;
    while (k < n) {
        // size-reduce b_k against b_{k-1} .. b_0
        for (int j = k - 1; j >= 0; --j) {
            i64 q = nearest_int(g.mu[k][j]);
            if (q != 0) {
                row_op(G, U, k, j, q);
                g = compute_gso(G);
            }
        }
        if (g.B[k] >= (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.B[k - 1]) {
            ++k;
        } else {
            row_swap(G, U, k, k - 1);
            g = compute_gso(G);
            k = std::max(k - 1, 1);
        }
    }
    IntLattice out;
    out.m = n;
    out.G = G;
    out.scale = L.scale;
    if (L.basis) out.basis = to_i64(matmul(to_z(U), to_z(*L.basis)));
    LLLResult res{std::move(out), std::move(U)};
    return res;
}

double covering_radius_bound(const IntLattice& L) {
    auto red = lll_reduce(L);
    auto B = gso_norms(red.L.G);
    Rat sum(0);
    for (const Rat& b : B) sum += b;
    Rat t2 = sum * L.scale / 4;
    return std::sqrt(to_double(t2));
}

}  // namespace hlawka
