#pragma once

#include <cstdint>

namespace ids {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen as the project-wide seeded
// generator because the recurrence is fully specified by these few lines,
// so seeded outputs are bit-identical across platforms and compilers.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
    }

    // Uniform in [0, bound) by rejection-free modulo of the high bits;
    // bias is negligible for the small bounds used here, but tests that
    // need exact goldens should stick to next()/next_double().
    std::uint64_t next_below(std::uint64_t bound) { return bound ? next() % bound : 0; }

private:
    std::uint64_t state_;
};

} // namespace ids
