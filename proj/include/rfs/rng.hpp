#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>
#include <string_view>

namespace rfs {

// splitmix64 step; used to mix stream identifiers into seed material.
inline constexpr std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

// Master seed plus a derivation path. Child streams are pure functions of
// (master, path), so trials can be generated in any order, or in parallel,
// with identical results.
struct Seed {
    std::uint64_t master = 0;

    [[nodiscard]] constexpr Seed child(std::uint64_t id) const {
        std::uint64_t s = master ^ (id + 0x9e3779b97f4a7c15ull);
        return Seed{splitmix64(s)};
    }

    [[nodiscard]] constexpr Seed child(std::initializer_list<std::uint64_t> path) const {
        Seed s = *this;
        for (std::uint64_t id : path) s = s.child(id);
        return s;
    }
};

// Deterministic random stream. All samplers are implemented directly on top
// of the raw 64-bit generator output so that sequences are reproducible
// independent of the standard library's distribution implementations.
class RandomStream {
public:
    explicit RandomStream(Seed seed) : gen_(seed.master) {}

    std::uint64_t next_u64() { return gen_(); }

    // Unbiased integer in [0, n); n >= 1. Lemire's multiply-shift rejection.
    std::uint64_t next_below(std::uint64_t n) {
        std::uint64_t x = gen_();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (lo < threshold) {
                x = gen_();
                m = static_cast<unsigned __int128>(x) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; consumes exactly two uniforms.
    double next_normal() {
        const double u1 = 1.0 - next_unit();  // (0, 1]
        const double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    // Exponential with rate lambda > 0.
    double next_exponential(double lambda) { return -std::log1p(-next_unit()) / lambda; }

private:
    std::mt19937_64 gen_;
};

}  // namespace rfs
