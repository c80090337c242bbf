#pragma once

#include <cstdint>

namespace subelect {

// splitmix64; all sampling in this library flows through it so that profiles
// are bit-identical for a fixed seed regardless of platform or stdlib.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), unbiased via rejection. bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform double in [0, 1) from the top 53 bits.
    double next_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin() { return (next() & 1u) != 0; }

private:
    std::uint64_t state_;
};

// Derives the seed of stream `index` from a base seed (one splitmix round over
// a golden-ratio offset). Index 0 keeps the base seed unchanged so a batch of
// one coincides with the single-sample path.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    if (index == 0) return seed;
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * index;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace subelect
