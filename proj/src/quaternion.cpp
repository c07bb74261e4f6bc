#include "hlawka/quaternion.hpp"

#include <omp.h>

#include "hlawka/enumerate.hpp"

namespace hlawka {

namespace {

i64 half_exact(i64 v) {
    if (v & 1) throw std::logic_error("quaternion arithmetic left the order");
    return v / 2;
}

}  // namespace

Quat quat_mul(const Quat& x, const Quat& y) {
    const auto& a = x.c;
    const auto& b = y.c;
    // doubled coordinates: product of two halves carries a /2
    return Quat{{half_exact(a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]),
                 half_exact(a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2]),
                 half_exact(a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1]),
                 half_exact(a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0])}};
}

Quat quat_add(const Quat& x, const Quat& y) {
    return Quat{{x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]}};
}

Quat quat_conj(const Quat& x) { return Quat{{x.c[0], -x.c[1], -x.c[2], -x.c[3]}}; }

i64 quat_nrd(const Quat& x) {
    i64 s = 0;
    for (i64 v : x.c) s += v * v;
    if (s % 4 != 0) throw std::logic_error("quaternion norm is not integral");
    return s / 4;
}

std::vector<Quat> hurwitz_units() {
    std::vector<Quat> out;
    for (int i = 0; i < 4; ++i)
        for (int s : {1, -1}) {
            Quat q;
            q.c[i] = 2 * s;
            out.push_back(q);
        }
    for (int s0 : {1, -1})
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1}) out.push_back(Quat{{s0, s1, s2, s3}});
    return out;
}

HurwitzIso hurwitz_iso(i64 p) {
    if (p < 3 || !is_prime((u64)p) || p % 2 == 0)
        throw std::invalid_argument("hurwitz_iso: p must be an odd prime");
    PrimeField F(p);
    i64 a = -1, b = -1;
    for (i64 aa = 0; aa < p && a < 0; ++aa)
        for (i64 bb = 0; bb < p; ++bb)
            if (F.reduce(aa * aa + bb * bb + 1) == 0) {
                a = aa;
                b = bb;
                break;
            }
    if (a < 0) throw std::logic_error("hurwitz_iso: no solution of a^2+b^2=-1");
    HurwitzIso iso;
    iso.p = p;
    iso.a = a;
    iso.b = b;
    iso.phi_one = Mat2{{1, 0, 0, 1}};
    iso.phi_i = Mat2{{0, p - 1, 1, 0}};
    iso.phi_j = Mat2{{a, b, b, F.neg(a)}};
    iso.phi_k = m2_mul(iso.phi_i, iso.phi_j, p);
    return iso;
}

Mat2 HurwitzIso::apply(const Quat& x) const {
    if (!x.hurwitz_integral()) throw std::invalid_argument("apply: not a Hurwitz integer");
    PrimeField F(p);
    i64 inv2 = F.inv(2);
    Mat2 r;
    for (int t = 0; t < 4; ++t) {
        i64 acc = F.mul(F.reduce(x.c[0]), phi_one.e[t]);
        acc += F.mul(F.reduce(x.c[1]), phi_i.e[t]);
        acc += F.mul(F.reduce(x.c[2]), phi_j.e[t]);
        acc += F.mul(F.reduce(x.c[3]), phi_k.e[t]);
        r.e[t] = F.mul(F.reduce(acc), inv2);
    }
    return r;
}

namespace {

Mat block_diag(const Mat& b, int copies) {
    Mat g(b.rows * copies, b.cols * copies);
    for (int c = 0; c < copies; ++c)
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) g.at(c * b.rows + i, c * b.cols + j) = b.at(i, j);
    return g;
}

}  // namespace

QuatReduction lipschitz_reduction(i64 p, int m) {
    if (p % 4 != 1 || !is_prime((u64)p))
        throw std::invalid_argument("lipschitz_reduction: p = 1 (mod 4) required");
    PrimeField F(p);
    i64 u = 0;
    for (i64 v = 2; v < p; ++v)
        if (F.reduce(v * v + 1) == 0) { u = v; break; }
    // per-coordinate images (a, b, c, d) -> flat (e11, e12, e21, e22) of
    // [[pi(x), -pi(conj y)], [pi(y), pi(conj x)]], x = a+bi, y = c-di
    Mat blk(4, 4);
    auto set_row = [&](int r, i64 e11, i64 e12, i64 e21, i64 e22) {
        blk.at(r, 0) = F.reduce(e11);
        blk.at(r, 1) = F.reduce(e12);
        blk.at(r, 2) = F.reduce(e21);
        blk.at(r, 3) = F.reduce(e22);
    };
    set_row(0, 1, 0, 0, 1);
    set_row(1, u, 0, 0, -u);
    set_row(2, 0, -1, 1, 0);
    set_row(3, 0, -u, -u, 0);
    QuatReduction R{QuatReduction::Flavor::Lipschitz, p, m,
                    lattice_zn(4 * m), block_diag(transpose(blk), m), u, {}};
    make_reduction(R.base, p, R.M);  // validates surjectivity
    return R;
}

QuatReduction hurwitz_reduction(i64 p, int m) {
    HurwitzIso iso = hurwitz_iso(p);
    PrimeField F(p);
    i64 inv2 = F.inv(2);
    Mat2 phi_omega;
    for (int t = 0; t < 4; ++t) {
        i64 acc = F.sub(0, iso.phi_one.e[t]);
        acc = F.add(acc, iso.phi_i.e[t]);
        acc = F.add(acc, iso.phi_j.e[t]);
        acc = F.add(acc, iso.phi_k.e[t]);
        phi_omega.e[t] = F.mul(acc, inv2);
    }
    Mat blk(4, 4);
    const Mat2* gens[4] = {&iso.phi_one, &iso.phi_i, &iso.phi_j, &phi_omega};
    for (int r = 0; r < 4; ++r)
        for (int t = 0; t < 4; ++t) blk.at(r, t) = gens[r]->e[t];
    // doubled Hurwitz Gram over the basis {1, i, j, omega}, scale 1/2
    Mat hg(4, 4, {2, 0, 0, -1,
                  0, 2, 0, 1,
                  0, 0, 2, 1,
                  -1, 1, 1, 2});
    IntLattice base = IntLattice::from_gram(block_diag(hg, m), Rat(1, 2),
                                            Mat::identity(4 * m));
    QuatReduction R{QuatReduction::Flavor::Hurwitz, p, m, std::move(base),
                    block_diag(transpose(blk), m), 0, iso};
    make_reduction(R.base, p, R.M);
    return R;
}

M2Vec QuatReduction::apply(const std::vector<i64>& coords) const {
    if ((int)coords.size() != 4 * m) throw std::invalid_argument("apply: bad coordinate length");
    PrimeField F(p);
    M2Vec out(m);
    for (int r = 0; r < 4 * m; ++r) {
        i64 acc = 0;
        for (int c = 0; c < 4 * m; ++c) acc = F.add(acc, F.mul(M.at(r, c), F.reduce(coords[c])));
        out[r / 4].e[r % 4] = acc;
    }
    return out;
}

IntLattice lift_matrix_code(const QuatReduction& R, const FreeMatCode& C) {
    if (C.p != R.p || C.m != R.m) throw std::invalid_argument("lift_matrix_code: mismatched parameters");
    Mat flat = module_fp_basis(R.p, R.m, C.gens);
    if (flat.rows != 4 * C.k) throw std::invalid_argument("lift_matrix_code: module is not free of rank k");
    LinearCode flat_code{R.p, 4 * R.m, 4 * C.k, flat};
    return lift_code(R.to_reduction(), flat_code);
}

Mat unit_action_matrix(const QuatReduction& R, const Quat& unit) {
    // left multiplication on one component, in the order's coordinate basis
    std::vector<Quat> basis;
    if (R.flavor == QuatReduction::Flavor::Lipschitz) {
        basis = {Quat::from_int(1, 0, 0, 0), Quat::from_int(0, 1, 0, 0),
                 Quat::from_int(0, 0, 1, 0), Quat::from_int(0, 0, 0, 1)};
    } else {
        basis = {Quat::from_int(1, 0, 0, 0), Quat::from_int(0, 1, 0, 0),
                 Quat::from_int(0, 0, 1, 0), Quat::from_doubled(-1, 1, 1, 1)};
    }
    Mat blk(4, 4);
    for (int r = 0; r < 4; ++r) {
        Quat img = quat_mul(unit, basis[r]);
        if (R.flavor == QuatReduction::Flavor::Lipschitz) {
            for (int c = 0; c < 4; ++c) blk.at(r, c) = half_exact(img.c[c]);
        } else {
            // convert doubled (A,B,C,D) to {1,i,j,omega} coordinates
            i64 D = img.c[3];
            blk.at(r, 3) = D;
            blk.at(r, 0) = half_exact(img.c[0] + D);
            blk.at(r, 1) = half_exact(img.c[1] - D);
            blk.at(r, 2) = half_exact(img.c[2] - D);
        }
    }
    return block_diag(blk, R.m);
}

Lemma1Report noninvertible_norm_check(i64 p, i64 bound, Exec exec) {
    if (p % 4 != 1 || !is_prime((u64)p))
        throw std::invalid_argument("noninvertible_norm_check: p = 1 (mod 4) required");
    QuatReduction R = lipschitz_reduction(p, 1);
    i64 B = bound < 0 ? p : std::min(bound, p);
    Lemma1Report rep;
    rep.p = p;
    std::vector<Lemma1Report> partial((size_t)B);
    bool parallel = exec == Exec::Parallel && B > 1;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (i64 a = 0; a < B; ++a) {
        Lemma1Report& pr = partial[(size_t)a];
        std::vector<i64> coords(4);
        coords[0] = a;
        for (i64 b = 0; b < B; ++b)
            for (i64 c = 0; c < B; ++c)
                for (i64 d = 0; d < B; ++d) {
                    coords[1] = b;
                    coords[2] = c;
                    coords[3] = d;
                    ++pr.checked;
                    Mat2 img = R.apply(coords)[0];
                    if (m2_det(img, p) != 0) continue;
                    ++pr.noninvertible;
                    if ((a * a + b * b + c * c + d * d) % p != 0) {
                        ++pr.violations;
                        if (!pr.counterexample) pr.counterexample = {a, b, c, d};
                    }
                }
    }
    for (const auto& pr : partial) {
        rep.checked += pr.checked;
        rep.noninvertible += pr.noninvertible;
        rep.violations += pr.violations;
        if (!rep.counterexample && pr.counterexample) rep.counterexample = pr.counterexample;
    }
    return rep;
}

namespace {

std::vector<M2Vec> unit_bearing_vectors(i64 p, int m) {
    std::vector<Mat2> R = ring_elements(p);
    std::vector<M2Vec> out;
    std::vector<size_t> idx((size_t)m, 0);
    for (;;) {
        M2Vec v((size_t)m);
        for (int c = 0; c < m; ++c) v[(size_t)c] = R[idx[(size_t)c]];
        if (has_unit_coordinate(v, p)) out.push_back(std::move(v));
        int t = 0;
        while (t < m && ++idx[(size_t)t] == R.size()) idx[(size_t)t++] = 0;
        if (t == m) break;
    }
    return out;
}

}  // namespace

BalancedReport balanced_check(i64 p, int m, int k) {
    auto modules = enumerate_free_modules(p, m, k);
    std::vector<std::vector<M2Vec>> elements;
    elements.reserve(modules.size());
    for (const auto& mod : modules) elements.push_back(module_elements(p, m, mod.gens));

    BalancedReport rep;
    rep.codes = (i64)modules.size();
    rep.M = elements.empty() ? 0 : (i64)elements.front().size();
    auto stars = unit_bearing_vectors(p, m);
    rep.unit_vectors = (i64)stars.size();
    rep.balanced = true;
    bool first = true;
    for (const auto& v : stars) {
        i64 count = 0;
        for (const auto& elems : elements)
            if (module_contains(elems, v)) ++count;
        if (first) {
            rep.L = count;
            first = false;
        } else if (count != rep.L) {
            rep.balanced = false;
        }
    }
    rep.counting_ok = rep.M * rep.codes >= rep.L * rep.unit_vectors;
    return rep;
}

std::pair<Rat, Rat> balanced_average_bound(i64 p, int m, int k,
                                           const std::function<Rat(const M2Vec&)>& g) {
    auto modules = enumerate_free_modules(p, m, k);
    Rat lhs(0);
    for (const auto& mod : modules) {
        auto elems = module_elements(p, m, mod.gens);
        for (const auto& v : elems)
            if (has_unit_coordinate(v, p)) lhs += g(v);
    }
    lhs /= Rat((long)modules.size());
    auto stars = unit_bearing_vectors(p, m);
    Rat gstar(0);
    for (const auto& v : stars) gstar += g(v);
    Int rk(1), pz((long)p);
    mpz_pow_ui(rk.get_mpz_t(), pz.get_mpz_t(), (unsigned)(4 * k));
    Rat rhs = Rat(rk) * gstar / Rat((long)stars.size());
    return {lhs, rhs};
}

}  // namespace hlawka
