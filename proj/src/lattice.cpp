#include "hlawka/lattice.hpp"

#include <json.hpp>

namespace hlawka {

IntLattice IntLattice::from_gram(Mat g, Rat scale, std::optional<Mat> basis) {
    if (g.rows != g.cols) throw std::invalid_argument("Gram matrix must be square");
    if (scale <= 0) throw std::invalid_argument("scale must be positive");
    if (!is_positive_definite(g))
        throw std::invalid_argument("Gram matrix is not symmetric positive definite");
    IntLattice L;
    L.m = g.rows;
    L.G = std::move(g);
    L.scale = std::move(scale);
    L.basis = std::move(basis);
    return L;
}

Rat IntLattice::volume_sq() const {
    Rat s(1);
    for (int i = 0; i < m; ++i) s *= scale;
    return s * Rat(det(G));
}

double volume(const IntLattice& L) {
    Rat v2 = L.volume_sq();
    mpf_class f(0, 256);
    mpf_set_q(f.get_mpf_t(), v2.get_mpq_t());
    mpf_class r(0, 256);
    mpf_sqrt(r.get_mpf_t(), f.get_mpf_t());
    return r.get_d();
}

IntLattice lattice_zn(int n) {
    return IntLattice::from_gram(Mat::identity(n), Rat(1), Mat::identity(n));
}

IntLattice lattice_an(int n) {
    Mat g(n, n);
    for (int i = 0; i < n; ++i) {
        g.at(i, i) = 2;
        if (i + 1 < n) g.at(i, i + 1) = g.at(i + 1, i) = -1;
    }
    return IntLattice::from_gram(g);
}

IntLattice lattice_d4() {
    // basis (1,-1,0,0),(0,1,-1,0),(0,0,1,-1),(0,0,1,1)
    Mat g(4, 4, {2, -1, 0, 0,
                 -1, 2, -1, -1,
                 0, -1, 2, 0,
                 0, -1, 0, 2});
    return IntLattice::from_gram(g);
}

std::string lattice_to_json(const IntLattice& L) {
    nlohmann::json j;
    j["m"] = L.m;
    auto rows = nlohmann::json::array();
    for (int i = 0; i < L.m; ++i) {
        auto row = nlohmann::json::array();
        for (int c = 0; c < L.m; ++c) row.push_back(L.G.at(i, c));
        rows.push_back(row);
    }
    j["gram"] = rows;
    j["scale_num"] = L.scale.get_num().get_si();
    j["scale_den"] = L.scale.get_den().get_si();
    if (L.basis) {
        auto b = nlohmann::json::array();
        for (int i = 0; i < L.basis->rows; ++i) {
            auto row = nlohmann::json::array();
            for (int c = 0; c < L.basis->cols; ++c) row.push_back(L.basis->at(i, c));
            b.push_back(row);
        }
        j["basis"] = b;
    }
    return j.dump();
}

IntLattice lattice_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int m = j.at("m").get<int>();
    Mat g(m, m);
    auto rows = j.at("gram");
    for (int i = 0; i < m; ++i)
        for (int c = 0; c < m; ++c) g.at(i, c) = rows.at(i).at(c).get<i64>();
    Rat scale(1);
    if (j.contains("scale_num"))
        scale = Rat((long)j.at("scale_num").get<i64>(), (long)j.value("scale_den", (i64)1));
    scale.canonicalize();
    std::optional<Mat> basis;
    if (j.contains("basis")) {
        auto b = j.at("basis");
        int r = (int)b.size(), c = (int)b.at(0).size();
        Mat bm(r, c);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < c; ++k) bm.at(i, k) = b.at(i).at(k).get<i64>();
        basis = bm;
    }
    return IntLattice::from_gram(std::move(g), scale, std::move(basis));
}

}  // namespace hlawka
