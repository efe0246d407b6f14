#pragma once

#include <cstdint>
#include <vector>

namespace edc {

// Color storage with a runtime-chosen element width. Large colorings keep
// hundreds of millions of entries, so paying 4 bytes each when the palette
// provably fits in one is not acceptable.
class PackedColors {
public:
    PackedColors() = default;

    // max_value is the largest color value that will ever be stored.
    PackedColors(std::uint64_t count, std::uint32_t max_value) {
        if (max_value < 0x100)
            b8_.assign(count, 0);
        else if (max_value < 0x10000)
            b16_.assign(count, 0);
        else
            b32_.assign(count, 0);
    }

    std::uint32_t get(std::uint64_t i) const {
        if (!b8_.empty())
            return b8_[i];
        if (!b16_.empty())
            return b16_[i];
        return b32_[i];
    }

    void set(std::uint64_t i, std::uint32_t c) {
        if (!b8_.empty())
            b8_[i] = static_cast<std::uint8_t>(c);
        else if (!b16_.empty())
            b16_[i] = static_cast<std::uint16_t>(c);
        else
            b32_[i] = c;
    }

    std::uint64_t size() const {
        if (!b8_.empty())
            return b8_.size();
        if (!b16_.empty())
            return b16_.size();
        return b32_.size();
    }

private:
    std::vector<std::uint8_t> b8_;
    std::vector<std::uint16_t> b16_;
    std::vector<std::uint32_t> b32_;
};

} // namespace edc
