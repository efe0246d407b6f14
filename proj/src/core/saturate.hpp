#pragma once

#include <cstdint>
#include <limits>

namespace edc {

// Saturating signed-64 helpers for size/work estimates: estimates only need
// to be compared against limits, so clamping at INT64_MAX is exactly right.
constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max();

inline std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    return (a > kSaturated - b) ? kSaturated : a + b;
}

inline std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0)
        return 0;
    if (a > kSaturated / b)
        return kSaturated;
    return a * b;
}

inline std::int64_t sat_pow(std::int64_t base, int e) {
    std::int64_t w = 1;
    for (int i = 0; i < e; ++i)
        w = sat_mul(w, base);
    return w;
}

} // namespace edc
