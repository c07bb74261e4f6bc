#include "hlawka/reduction.hpp"

#include <cmath>

#include <json.hpp>

#include "hlawka/lattice_ops.hpp"

namespace hlawka {

Reduction make_reduction(IntLattice base, i64 p, Mat M) {
    if (M.cols != base.m) throw std::invalid_argument("reduction: M must have m columns");
    if (M.rows > base.m) throw std::invalid_argument("reduction: need n <= m");
    if (rank_mod_p(M, p) != M.rows)
        throw std::invalid_argument("reduction: M must be surjective mod p");
    Reduction R{std::move(base), p, M.rows, std::move(M)};
    return R;
}

Reduction natural_reduction(const IntLattice& L, i64 p) {
    return make_reduction(L, p, Mat::identity(L.m));
}

IntLattice lift_code(const Reduction& R, const LinearCode& C) {
    if (C.p != R.p) throw std::invalid_argument("lift_code: mismatched modulus");
    if (C.n != R.n) throw std::invalid_argument("lift_code: mismatched length");
    int m = R.base.m;
    Mat pre = preimage_mod_p(R.M, C.gen, R.p);  // rows in F_p^m, dim m-n+k
    MatZ stacked(pre.rows + m, m);
    for (int i = 0; i < pre.rows; ++i)
        for (int j = 0; j < m; ++j) stacked.at(i, j) = Int((long)pre.at(i, j));
    for (int i = 0; i < m; ++i) stacked.at(pre.rows + i, i) = Int((long)R.p);
    MatZ H = hnf(stacked);
    if (H.rows != m) throw std::logic_error("lift_code: HNF rank defect");
    Mat B = to_i64(H);

    // determinant identity: index p^{n-k}
    Int want(1), pz((long)R.p);
    mpz_pow_ui(want.get_mpz_t(), pz.get_mpz_t(), (unsigned)(R.n - C.k));
    Int d = det(B);
    if (d < 0) d = -d;
    if (d != want) throw std::logic_error("lift_code: volume identity violated");

    // kernel inside lift: p e_i must lie in the row lattice
    for (int i = 0; i < m; ++i) {
        std::vector<i64> pe(m, 0);
        pe[i] = R.p;
        if (!in_row_lattice(B, pe)) throw std::logic_error("lift_code: kernel not contained");
    }
    // the image of the basis spans exactly C
    Mat img(m, R.n);
    PrimeField F(R.p);
    for (int i = 0; i < m; ++i)
        for (int r = 0; r < R.n; ++r) {
            i128 acc = 0;
            for (int j = 0; j < m; ++j) acc += (i128)R.M.at(r, j) * B.at(i, j);
            img.at(i, r) = F.reduce((i64)(acc % R.p));
        }
    Mat img_r = img;
    if (rref_mod_p(img_r, R.p) != C.k) throw std::logic_error("lift_code: image rank mismatch");
    for (int i = 0; i < m; ++i) {
        std::vector<i64> word(R.n);
        for (int r = 0; r < R.n; ++r) word[r] = img.at(i, r);
        if (!C.contains(word)) throw std::logic_error("lift_code: image escapes the code");
    }

    Mat gram = conjugate_gram(B, R.base.G);
    std::optional<Mat> basis = B;
    if (R.base.basis) basis = to_i64(matmul(to_z(B), to_z(*R.base.basis)));
    return IntLattice::from_gram(std::move(gram), R.base.scale, std::move(basis));
}

std::pair<IntLattice, KernelCert> kernel_lattice(const Reduction& R,
                                                 std::optional<Thm2Params> thm2) {
    LinearCode zero{R.p, R.n, 0, Mat(0, R.n)};
    IntLattice ker = lift_code(R, zero);
    KernelCert cert;
    auto [pt, lam_sq] = shortest_vector(ker);
    cert.lambda1_sq = lam_sq;
    double lam = std::sqrt(to_double(lam_sq));
    cert.gamma = lam / std::pow(volume(ker), 1.0 / ker.m);
    cert.ratio = lam / std::pow((double)R.p, (double)R.n / R.base.m);
    if (thm2) {
        double rhs = thm2->c * std::pow((double)R.p,
                                        (double)(R.n - thm2->k) / R.base.m + thm2->alpha);
        cert.exponent_ok = lam >= rhs;
    }
    return {std::move(ker), cert};
}

std::pair<IntLattice, double> normalize(const IntLattice& L, double V_target) {
    if (V_target <= 0) throw std::invalid_argument("normalize: target volume must be positive");
    double vol = volume(L);
    double beta2 = std::pow(V_target / vol, 2.0 / L.m);
    IntLattice out = L;
    out.scale = L.scale * rat_from_double(beta2);
    return {std::move(out), std::sqrt(beta2)};
}

std::string reduction_to_json(const Reduction& R) {
    nlohmann::json j;
    j["p"] = R.p;
    j["n"] = R.n;
    auto rows = nlohmann::json::array();
    for (int i = 0; i < R.M.rows; ++i) {
        auto row = nlohmann::json::array();
        for (int c = 0; c < R.M.cols; ++c) row.push_back(R.M.at(i, c));
        rows.push_back(row);
    }
    j["M"] = rows;
    j["base"] = nlohmann::json::parse(lattice_to_json(R.base));
    return j.dump();
}

Reduction reduction_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    IntLattice base = lattice_from_json(j.at("base").dump());
    i64 p = j.at("p").get<i64>();
    auto rows = j.at("M");
    int n = (int)rows.size(), m = (int)rows.at(0).size();
    Mat M(n, m);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < m; ++c) M.at(i, c) = rows.at(i).at(c).get<i64>();
    return make_reduction(std::move(base), p, std::move(M));
}

}  // namespace hlawka
