#pragma once

#include <cstdint>

#include "slq/rational.hpp"

namespace slq {

/// SplitMix64. All randomness in this project derives from this generator so
/// that any implementation can reproduce the exact streams:
///
///   state_0 = seed, state_{i+1} = state_i + 0x9E3779B97F4A7C15
///   output_i = mix(state_{i+1})  with the standard SplitMix64 finalizer
///
/// Independent streams: stream j of a master seed starts from
/// mix(seed + (j+1) * 0xD1B54A32D192ED03).
struct SplitMix64 {
    std::uint64_t state;

    explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(mix(seed + (index + 1) * 0xD1B54A32D192ED03ULL));
    }

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        return mix(state);
    }

    /// Uniform in [0,1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Bernoulli(p) decided on 53 bits with exact integer arithmetic, so the
    /// outcome is identical on every platform.
    bool bernoulli(const Rational& p) {
        std::uint64_t r = next() >> 11;
        return static_cast<unsigned __int128>(r) * static_cast<std::uint64_t>(p.den) <
               (static_cast<unsigned __int128>(static_cast<std::uint64_t>(p.num)) << 53);
    }

    /// Uniform integer in [0, bound) by rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % bound;
    }
};

} // namespace slq
