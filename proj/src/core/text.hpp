#pragma once

#include <cstdio>
#include <string>

namespace edc {

// Locale-independent, fixed-precision double formatting for CSV output.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
}

} // namespace edc
