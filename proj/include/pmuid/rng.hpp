#pragma once

#include <cstdint>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace pmuid::rng {

// splitmix64; used both to whiten user seeds and as a counter-based
// generator for positional noise lookups.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Uniform in [0, 1) from 53 random bits.
inline double to_unit(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline std::mt19937_64 make_engine(uint64_t seed) {
    return std::mt19937_64(splitmix64(seed));
}

// The distributions below are written out instead of using <random>'s,
// so that generated values are identical across standard libraries and
// golden values frozen in tests stay valid.
inline double uniform(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * to_unit(eng());
}

inline double normal(std::mt19937_64& eng) {
    double u1 = to_unit(eng());
    double u2 = to_unit(eng());
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

// Uniform integer in [0, n), n >= 1.
inline int uniform_int(std::mt19937_64& eng, int n) {
    return static_cast<int>(to_unit(eng()) * static_cast<double>(n));
}

// K distinct values from {0, ..., n-1}, order given by a partial
// Fisher-Yates shuffle.
inline std::vector<int> sample_without_replacement(int n, int k,
                                                   std::mt19937_64& eng) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
        int j = i + uniform_int(eng, n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

// Stateless standard-normal draw addressed by (seed, stream, sample).
// Positional access keeps generation deterministic under any thread
// count and lets windows starting at different t0 continue seamlessly.
inline double gaussian_at(uint64_t seed, uint64_t stream, uint64_t sample) {
    const uint64_t key = splitmix64(seed ^ 0x8f1bbcdcbfa53e0bull) +
                         stream * 0x2545f4914f6cdd1dull;
    const uint64_t base = splitmix64(key) + 2ull * sample;
    double u1 = to_unit(splitmix64(base));
    double u2 = to_unit(splitmix64(base + 1ull));
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace pmuid::rng
