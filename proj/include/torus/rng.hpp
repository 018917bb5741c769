#pragma once

#include <cstdint>

#include "torus/circle.hpp"

namespace torus {

// splitmix64: tiny, seedable, and identical on every platform, which keeps
// seeded reports byte-reproducible across toolchains.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

// Random circle point num/den with 1 <= den <= max_den, 0 <= num < den.
inline CirclePoint random_point(SplitMix64& rng, std::uint64_t max_den) {
    std::uint64_t den = 1 + rng.below(max_den);
    std::uint64_t num = rng.below(den);
    return reduce(Rational(static_cast<long>(num), static_cast<long>(den)));
}

}  // namespace torus
