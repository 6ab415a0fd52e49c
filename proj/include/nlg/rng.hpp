#pragma once

#include <cstdint>

namespace nlg {

// Counter-based generator: draw k of a stream is a pure function of
// (seed, k), so simulations reproduce bit-exactly across platforms and
// parallel workers can consume disjoint counter ranges deterministically.
//
// value(seed, k) = splitmix64_mix(seed + (k + 1) * 0x9E3779B97F4A7C15).
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t start = 0)
        : seed_(seed), counter_(start) {}

    static std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_u64() { return at(seed_, counter_++); }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [-1, 1).
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

} // namespace nlg
