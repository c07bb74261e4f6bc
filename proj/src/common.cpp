#include "hlawka/common.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

namespace hlawka {

Caps& caps() {
    static Caps c = [] {
        Caps init;
        if (const char* env = std::getenv("HLAWKA_CAP_POINTS")) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end != env && v > 0) init.max_points = v;
        }
        return init;
    }();
    return c;
}

Int int_from_i128(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    Int hi((unsigned long)(u >> 64));
    Int lo((unsigned long)(u & 0xffffffffffffffffULL));
    Int r = (hi << 64) + lo;
    return neg ? Int(-r) : r;
}

Rat rat_from_double(double x) {
    Rat q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

double to_double(const Rat& q) { return mpq_get_d(q.get_mpq_t()); }

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return (u64)((unsigned __int128)a * b % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (n % p == 0) return n == p;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // deterministic for all 64-bit inputs
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

u64 next_prime(u64 n) {
    if (n <= 2) return 2;
    if ((n & 1) == 0) ++n;
    while (!is_prime(n)) n += 2;
    return n;
}

double unit_ball_volume(int m) {
    return std::pow(M_PI, m / 2.0) / std::tgamma(m / 2.0 + 1.0);
}

double zeta(int m) {
    if (m < 2) throw std::invalid_argument("zeta: m >= 2 required");
    double s = 0.0;
    int k = 1;
    for (;; ++k) {
        double term = std::pow((double)k, -m);
        s += term;
        // integral tail bound: sum_{j>k} j^-m < k^(1-m)/(m-1)
        if (std::pow((double)k, 1 - m) / (m - 1) < 1e-14) break;
    }
    return s;
}

std::vector<int> mobius_upto(int n) {
    std::vector<int> mu(n + 1, 1), lp(n + 1, 0);
    std::vector<int> primes;
    for (int i = 2; i <= n; ++i) {
        if (lp[i] == 0) { lp[i] = i; mu[i] = -1; primes.push_back(i); }
        for (int p : primes) {
            if (p > lp[i] || (i64)i * p > n) break;
            lp[i * p] = p;
            mu[i * p] = (p == lp[i]) ? 0 : -mu[i];
        }
    }
    if (n >= 0) mu[0] = 0;
    return mu;
}

i64 gcd_abs(i64 a, i64 b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

}  // namespace hlawka
