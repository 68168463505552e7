#pragma once

// Exact arithmetic used throughout: big integers for edge weights and
// solution costs, rationals for scales and radii. Nothing in the library
// ever rounds.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hwy1 {

using Int = mpz_class;
using Rat = mpq_class;

// Rational p/q in lowest terms, q > 0.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

// Parses "123" or "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rat(std::string_view text);

std::string to_string(const Int& v);

// "p" when integral, "p/q" otherwise.
std::string to_string(const Rat& v);

// Smallest k >= 0 with 2^k >= v. Requires v > 0.
long ceil_log2(const Rat& v);

// 2^k as a rational, k may be negative.
Rat pow2(long k);

// FNV-1a, used for corpus manifest digests.
std::uint64_t fnv1a(std::string_view data);

// Deterministic integer draw in [lo, hi] from a caller-owned generator
// state. std::uniform_int_distribution is implementation-defined, so tests
// and corpus generation use this instead.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw std::invalid_argument("empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }
};

}  // namespace hwy1
