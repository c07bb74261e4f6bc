#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hlawka {

using i64 = long long;
using u64 = unsigned long long;
using i128 = __int128;

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when a computation would exceed a configured enumeration cap.
/// Carries a best-effort estimate of the refused quantity so callers can
/// report a count-only answer.
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& what, std::string estimate = {})
        : std::runtime_error(what), estimate(std::move(estimate)) {}
    std::string estimate;
};

struct Caps {
    i64 max_points = 10'000'000;  // enumeration/counting cap
    int max_svp_rank = 16;
    i64 max_codes = 1'000'000;  // exhaustive code/module ensembles
};

/// Process-wide caps. HLAWKA_CAP_POINTS overrides max_points at first use.
Caps& caps();

Int int_from_i128(i128 v);
Rat rat_from_double(double x);  // exact (doubles are dyadic rationals)
double to_double(const Rat& q);

// --- primes ----------------------------------------------------------------

bool is_prime(u64 n);  // deterministic Miller-Rabin for 64-bit inputs
u64 next_prime(u64 n);  // least prime >= n

// --- misc numerics ----------------------------------------------------------

double unit_ball_volume(int m);           // vol of the unit ball in R^m
double zeta(int m);                       // Riemann zeta, m >= 2, abs err < 1e-13
std::vector<int> mobius_upto(int n);      // mu(1..n)
i64 gcd_abs(i64 a, i64 b);

// --- deterministic RNG -------------------------------------------------------
//
// splitmix64: trials derive independent streams as Rng(seed ^ trial_index),
// so parallel schedules cannot change any result.

struct Rng {
    u64 state;
    explicit Rng(u64 seed) : state(seed) {}
    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// uniform in [0, n), n > 0, by rejection (no modulo bias)
    u64 below(u64 n) {
        u64 lim = ~0ULL - ~0ULL % n;
        u64 v;
        do { v = next(); } while (v >= lim);
        return v % n;
    }
    double unit() {  // [0,1)
        return double(next() >> 11) * 0x1.0p-53;
    }
};

inline u64 trial_seed(u64 seed, u64 trial) { return seed ^ trial; }

}  // namespace hlawka
