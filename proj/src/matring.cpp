#include "hlawka/matring.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace hlawka {

Mat2 m2_mul(const Mat2& a, const Mat2& b, i64 p) {
    PrimeField F(p);
    Mat2 r;
    r.e[0] = F.reduce(F.mul(a.e[0], b.e[0]) + F.mul(a.e[1], b.e[2]));
    r.e[1] = F.reduce(F.mul(a.e[0], b.e[1]) + F.mul(a.e[1], b.e[3]));
    r.e[2] = F.reduce(F.mul(a.e[2], b.e[0]) + F.mul(a.e[3], b.e[2]));
    r.e[3] = F.reduce(F.mul(a.e[2], b.e[1]) + F.mul(a.e[3], b.e[3]));
    return r;
}

Mat2 m2_add(const Mat2& a, const Mat2& b, i64 p) {
    PrimeField F(p);
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = F.add(a.e[i], b.e[i]);
    return r;
}

i64 m2_det(const Mat2& a, i64 p) {
    PrimeField F(p);
    return F.sub(F.mul(a.e[0], a.e[3]), F.mul(a.e[1], a.e[2]));
}

std::vector<Mat2> ring_elements(i64 p) {
    std::vector<Mat2> out;
    out.reserve((size_t)(p * p * p * p));
    Mat2 m;
    for (m.e[0] = 0; m.e[0] < p; ++m.e[0])
        for (m.e[1] = 0; m.e[1] < p; ++m.e[1])
            for (m.e[2] = 0; m.e[2] < p; ++m.e[2])
                for (m.e[3] = 0; m.e[3] < p; ++m.e[3]) out.push_back(m);
    return out;
}

std::vector<M2Vec> module_elements(i64 p, int m, const std::vector<M2Vec>& gens) {
    // F_p-span of {E_ab * g_i}: left R-module = F_p-space spanned by all
    // matrix-unit multiples of the generators.
    Mat basis = module_fp_basis(p, m, gens);
    std::vector<M2Vec> out;
    int dim = basis.rows;
    std::vector<i64> coeff(dim, 0);
    PrimeField F(p);
    for (;;) {
        M2Vec v(m);
        for (int c = 0; c < m; ++c)
            for (int t = 0; t < 4; ++t) {
                i64 acc = 0;
                for (int i = 0; i < dim; ++i)
                    acc += F.mul(coeff[i], basis.at(i, 4 * c + t));
                v[c].e[t] = F.reduce(acc);
            }
        out.push_back(std::move(v));
        int t = 0;
        while (t < dim && ++coeff[t] == p) coeff[t++] = 0;
        if (t == dim) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool module_contains(const std::vector<M2Vec>& sorted_elements, const M2Vec& v) {
    return std::binary_search(sorted_elements.begin(), sorted_elements.end(), v);
}

bool has_unit_coordinate(const M2Vec& v, i64 p) {
    for (const Mat2& c : v)
        if (m2_is_unit(c, p)) return true;
    return false;
}

Mat module_fp_basis(i64 p, int m, const std::vector<M2Vec>& gens) {
    // matrix units E_00, E_01, E_10, E_11
    std::vector<Mat2> units(4);
    for (int t = 0; t < 4; ++t) units[t].e[t] = 1;
    Mat rows((int)gens.size() * 4, 4 * m);
    int r = 0;
    for (const M2Vec& g : gens)
        for (int t = 0; t < 4; ++t) {
            for (int c = 0; c < m; ++c) {
                Mat2 prod = m2_mul(units[t], g[c], p);
                for (int s = 0; s < 4; ++s) rows.at(r, 4 * c + s) = prod.e[s];
            }
            ++r;
        }
    int rank = rref_mod_p(rows, p);
    Mat out(rank, 4 * m);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < 4 * m; ++j) out.at(i, j) = rows.at(i, j);
    return out;
}

namespace {

M2Vec scale_vec(const Mat2& r, const M2Vec& g, i64 p) {
    M2Vec out(g.size());
    for (size_t i = 0; i < g.size(); ++i) out[i] = m2_mul(r, g[i], p);
    return out;
}

M2Vec add_vec(const M2Vec& a, const M2Vec& b, i64 p) {
    M2Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = m2_add(a[i], b[i], p);
    return out;
}

/// Lexicographically least k-tuple generating the module freely.
std::vector<M2Vec> canonical_generators(i64 p, int m, int k,
                                        const std::vector<M2Vec>& elements) {
    // Greedy: pick the least element extending a free partial tuple to a
    // free tuple completable to the whole module.
    size_t ring = 1;
    for (int i = 0; i < 4; ++i) ring *= (size_t)p;
    std::vector<M2Vec> picked;
    auto gen_size = [&](const std::vector<M2Vec>& gens) {
        return module_elements(p, m, gens).size();
    };
    for (int slot = 0; slot < k; ++slot) {
        for (const M2Vec& cand : elements) {
            std::vector<M2Vec> trial = picked;
            trial.push_back(cand);
            size_t sz = gen_size(trial);
            size_t want = 1;
            for (int i = 0; i <= slot; ++i) want *= ring;
            if (sz != want) continue;  // not free at this rank
            if (slot + 1 == k && sz != elements.size()) continue;
            if (slot + 1 < k) {
                // completable? the remaining generators must exist; since the
                // module is free of rank k, any free partial tuple of a free
                // module extends (finite modules over semisimple rings).
            }
            picked = std::move(trial);
            break;
        }
        if ((int)picked.size() != slot + 1)
            throw std::logic_error("canonical_generators: no free extension found");
    }
    // the picked tuple must generate everything
    if (gen_size(picked) != elements.size())
        throw std::logic_error("canonical_generators: tuple does not generate");
    return picked;
}

}  // namespace

std::vector<FreeMatCode> enumerate_free_modules(i64 p, int m, int k, i64 cap) {
    if (cap < 0) cap = caps().max_codes;
    if (k < 1 || k > m) throw std::invalid_argument("enumerate_free_modules: need 1 <= k <= m");
    double ring = std::pow((double)p, 4.0);
    double tuples = std::pow(std::pow(ring, m), k);
    if (tuples > (double)cap)
        throw cap_error("enumerate_free_modules: generator tuple space too large");

    std::vector<Mat2> R = ring_elements(p);
    size_t ring_sz = R.size();
    size_t want = 1;
    for (int i = 0; i < k; ++i) want *= ring_sz;

    // iterate over all k-tuples of vectors in R^m
    std::vector<M2Vec> all_vecs;
    {
        std::vector<int> idx(m, 0);
        for (;;) {
            M2Vec v(m);
            for (int c = 0; c < m; ++c) v[c] = R[idx[c]];
            all_vecs.push_back(std::move(v));
            int t = 0;
            while (t < m && ++idx[t] == (int)ring_sz) idx[t++] = 0;
            if (t == m) break;
        }
    }

    std::set<std::vector<M2Vec>> seen;  // keyed by sorted element lists
    std::vector<FreeMatCode> out;
    std::vector<size_t> tuple(k, 0);
    for (;;) {
        std::vector<M2Vec> gens(k);
        for (int i = 0; i < k; ++i) gens[i] = all_vecs[tuple[i]];
        auto elems = module_elements(p, m, gens);
        if (elems.size() == want) {
            if (seen.insert(elems).second) {
                out.push_back(FreeMatCode{p, m, k, canonical_generators(p, m, k, elems)});
                if ((i64)out.size() > cap) throw cap_error("enumerate_free_modules: cap exceeded");
            }
        }
        int t = 0;
        while (t < k && ++tuple[t] == all_vecs.size()) tuple[t++] = 0;
        if (t == k) break;
    }
    return out;
}

}  // namespace hlawka
