#pragma once

#include <cstdint>

namespace edc {

// Deterministic 64-bit generator (splitmix64).  Used instead of std::mt19937
// with <random> distributions because distribution implementations vary
// across standard libraries, and sampled runs must be reproducible from the
// recorded seed on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); unbiased via rejection sampling.
    std::uint64_t bounded(std::uint64_t n) {
        if (n <= 1)
            return 0;
        const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold)
                return x % n;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit(void) {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

} // namespace edc
