#include "hlawka/code.hpp"

namespace hlawka {

LinearCode make_code(i64 p, int n, const Mat& rows) {
    Mat g = rows;
    int k = rref_mod_p(g, p);
    Mat gen(k, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) gen.at(i, j) = g.at(i, j);
    return LinearCode{p, n, k, gen};
}

LinearCode sample_code(i64 p, int n, int k, u64 seed) {
    if (k < 1 || k > n) throw std::invalid_argument("sample_code: need 1 <= k <= n");
    PrimeField F(p);
    Rng rng(seed);
    for (;;) {
        Mat m(k, n);
        for (auto& x : m.a) x = (i64)rng.below((u64)p);
        Mat r = m;
        if (rref_mod_p(r, p) != k) continue;
        LinearCode c{p, n, k, Mat(k, n)};
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) c.gen.at(i, j) = r.at(i, j);
        return c;
    }
}

Int gaussian_binomial(int n, int k, i64 p) {
    if (k < 0 || k > n) return 0;
    Int num(1), den(1), pz((long)p);
    for (int i = 0; i < k; ++i) {
        Int pn, pk, pi;
        mpz_pow_ui(pn.get_mpz_t(), pz.get_mpz_t(), n);
        mpz_pow_ui(pk.get_mpz_t(), pz.get_mpz_t(), k);
        mpz_pow_ui(pi.get_mpz_t(), pz.get_mpz_t(), i);
        num *= pn - pi;
        den *= pk - pi;
    }
    return num / den;
}

namespace {

// RREF shapes: choose pivot columns, then fill the free positions.
void enumerate_rref(i64 p, int n, int k, std::vector<LinearCode>& out, i64 cap) {
    std::vector<int> pivots(k);
    for (int i = 0; i < k; ++i) pivots[i] = i;
    auto emit_shapes = [&](auto&& self, int idx, int start) -> void {
        if (idx == k) {
            // free positions: (row i, col j) with j > pivots[i], j not a pivot
            std::vector<std::pair<int, int>> free_pos;
            std::vector<bool> is_pivot(n, false);
            for (int c : pivots) is_pivot[c] = true;
            for (int i = 0; i < k; ++i)
                for (int j = pivots[i] + 1; j < n; ++j)
                    if (!is_pivot[j]) free_pos.emplace_back(i, j);
            std::vector<i64> digits(free_pos.size(), 0);
            for (;;) {
                Mat gen(k, n);
                for (int i = 0; i < k; ++i) gen.at(i, pivots[i]) = 1;
                for (size_t t = 0; t < free_pos.size(); ++t)
                    gen.at(free_pos[t].first, free_pos[t].second) = digits[t];
                out.push_back(LinearCode{p, n, k, gen});
                if ((i64)out.size() > cap) throw cap_error("enumerate_codes: cap exceeded");
                size_t t = 0;
                while (t < digits.size() && ++digits[t] == p) digits[t++] = 0;
                if (t == digits.size()) break;
                if (digits.empty()) break;
            }
            return;
        }
        for (int c = start; c < n; ++c) {
            pivots[idx] = c;
            self(self, idx + 1, c + 1);
        }
    };
    emit_shapes(emit_shapes, 0, 0);
}

}  // namespace

std::vector<LinearCode> enumerate_codes(i64 p, int n, int k, i64 cap) {
    if (k < 0 || k > n) throw std::invalid_argument("enumerate_codes: need 0 <= k <= n");
    if (cap < 0) cap = caps().max_codes;
    Int total = gaussian_binomial(n, k, p);
    if (total > Int((long)cap))
        throw cap_error("enumerate_codes: ensemble too large", total.get_str());
    std::vector<LinearCode> out;
    out.reserve(total.get_ui());
    if (k == 0) {
        out.push_back(LinearCode{p, n, 0, Mat(0, n)});
        return out;
    }
    enumerate_rref(p, n, k, out, cap);
    return out;
}

void for_each_word(const LinearCode& c, const std::function<void(const std::vector<i64>&)>& fn) {
    PrimeField F(c.p);
    std::vector<i64> coeff(c.k, 0), word(c.n, 0);
    for (;;) {
        for (int j = 0; j < c.n; ++j) {
            i64 acc = 0;
            for (int i = 0; i < c.k; ++i) acc += F.mul(coeff[i], c.gen.at(i, j));
            word[j] = F.reduce(acc);
        }
        fn(word);
        int t = 0;
        while (t < c.k && ++coeff[t] == c.p) coeff[t++] = 0;
        if (t == c.k) break;
        if (c.k == 0) break;
    }
}

void for_each_vector(i64 p, int n, const std::function<void(const std::vector<i64>&)>& fn) {
    std::vector<i64> v(n, 0);
    for (;;) {
        fn(v);
        int t = n - 1;
        while (t >= 0 && ++v[t] == p) v[t--] = 0;
        if (t < 0) break;
    }
}

}  // namespace hlawka
