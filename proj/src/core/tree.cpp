#include "core/tree.hpp"

#include <limits>
#include <stdexcept>

namespace edc {

namespace {

// Counting arithmetic works in uint64; anything at risk of overflowing is
// rejected up front when the Tree is constructed.
constexpr std::uint64_t kCountCap = std::uint64_t(1) << 62;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > kCountCap / b)
        throw TooLargeError("tree too large: vertex counts exceed 2^62");
    return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > kCountCap - b)
        throw TooLargeError("tree too large: vertex counts exceed 2^62");
    return a + b;
}

} // namespace

Address Address::parse(const std::string& text) {
    if (text == "r")
        return Address{};
    if (text.empty())
        throw std::invalid_argument("empty vertex address");
    std::vector<std::uint8_t> branches;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t dot = text.find('.', pos);
        if (dot == std::string::npos)
            dot = text.size();
        if (dot == pos)
            throw std::invalid_argument("malformed vertex address: " + text);
        int value = 0;
        for (std::size_t i = pos; i < dot; ++i) {
            char ch = text[i];
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("malformed vertex address: " + text);
            value = value * 10 + (ch - '0');
            if (value > 254)
                throw std::invalid_argument("branch index out of range in address: " + text);
        }
        branches.push_back(static_cast<std::uint8_t>(value));
        if (dot == text.size())
            break;
        pos = dot + 1;
    }
    return Address{std::move(branches)};
}

std::string Address::str() const {
    if (branch_.empty())
        return "r";
    std::string out;
    for (std::size_t i = 0; i < branch_.size(); ++i) {
        if (i)
            out.push_back('.');
        out += std::to_string(static_cast<int>(branch_[i]));
    }
    return out;
}

Address Address::ancestor(int i) const {
    if (i < 0 || i > depth())
        throw std::invalid_argument("ancestor distance out of range");
    return Address{std::vector<std::uint8_t>(branch_.begin(), branch_.end() - i)};
}

Address Address::child(int b) const {
    if (b < 0 || b > 254)
        throw std::invalid_argument("branch index out of range");
    std::vector<std::uint8_t> branches = branch_;
    branches.push_back(static_cast<std::uint8_t>(b));
    return Address{std::move(branches)};
}

int distance(const Address& a, const Address& b) {
    int common = 0;
    int limit = std::min(a.depth(), b.depth());
    while (common < limit && a.branch(common) == b.branch(common))
        ++common;
    return (a.depth() - common) + (b.depth() - common);
}

Tree::Tree(int q, int root_arity, int depth_cap) : q_(q), root_arity_(root_arity), depth_cap_(depth_cap) {
    if (q < 3)
        throw std::invalid_argument("q must be at least 3");
    if (root_arity != q && root_arity != q - 1)
        throw std::invalid_argument("root arity must be q or q-1");
    if (depth_cap < 0)
        throw std::invalid_argument("depth cap must be nonnegative");

    pow_.resize(static_cast<std::size_t>(depth_cap_) + 1);
    level_size_.resize(static_cast<std::size_t>(depth_cap_) + 1);
    level_offset_.resize(static_cast<std::size_t>(depth_cap_) + 2);
    pow_[0] = 1;
    for (int e = 1; e <= depth_cap_; ++e)
        pow_[static_cast<std::size_t>(e)] = checked_mul(pow_[static_cast<std::size_t>(e) - 1], static_cast<std::uint64_t>(q_ - 1));
    level_size_[0] = 1;
    for (int t = 1; t <= depth_cap_; ++t)
        level_size_[static_cast<std::size_t>(t)] =
            checked_mul(static_cast<std::uint64_t>(root_arity_), pow_[static_cast<std::size_t>(t) - 1]);
    level_offset_[0] = 0;
    for (int t = 0; t <= depth_cap_; ++t)
        level_offset_[static_cast<std::size_t>(t) + 1] =
            checked_add(level_offset_[static_cast<std::size_t>(t)], level_size_[static_cast<std::size_t>(t)]);
}

int Tree::child_count(int depth) const {
    if (depth < 0 || depth > depth_cap_)
        throw std::invalid_argument("depth out of range");
    if (depth == depth_cap_)
        return 0;
    return depth == 0 ? root_arity_ : q_ - 1;
}

bool Tree::contains(const Address& a) const {
    if (a.depth() > depth_cap_)
        return false;
    for (int i = 0; i < a.depth(); ++i) {
        int arity = (i == 0) ? root_arity_ : q_ - 1;
        if (a.branch(i) >= arity)
            return false;
    }
    return true;
}

std::uint64_t Tree::rank_of(const Address& a) const {
    if (!contains(a))
        throw std::invalid_argument("address not in tree: " + a.str());
    // Branch digits have weight (q-1)^(depth-1-i), the root digit included:
    // the root arity only restricts the leading digit's range.
    std::uint64_t rank = 0;
    for (int i = 0; i < a.depth(); ++i)
        rank += a.branch(i) * pow_[static_cast<std::size_t>(a.depth() - 1 - i)];
    return rank;
}

Address Tree::address_at(int depth, std::uint64_t rank) const {
    if (depth < 0 || depth > depth_cap_)
        throw std::invalid_argument("depth out of range");
    if (rank >= level_size(depth))
        throw std::invalid_argument("rank out of range");
    std::vector<std::uint8_t> branches(static_cast<std::size_t>(depth));
    for (int i = depth - 1; i >= 1; --i) {
        branches[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rank % static_cast<std::uint64_t>(q_ - 1));
        rank /= static_cast<std::uint64_t>(q_ - 1);
    }
    if (depth > 0)
        branches[0] = static_cast<std::uint8_t>(rank);
    return Address{std::move(branches)};
}

std::uint64_t Tree::ancestor_rank(int depth, std::uint64_t rank, int to_depth) const {
    if (to_depth < 0 || to_depth > depth)
        throw std::invalid_argument("ancestor depth out of range");
    if (to_depth == 0)
        return 0;
    return rank / pow_[static_cast<std::size_t>(depth - to_depth)];
}

std::uint64_t Tree::child_rank(int depth, std::uint64_t rank, int b) const {
    if (depth == 0)
        return static_cast<std::uint64_t>(b);
    return rank * static_cast<std::uint64_t>(q_ - 1) + static_cast<std::uint64_t>(b);
}

Tree::RankRange Tree::descendant_range(int depth, std::uint64_t rank, int down) const {
    if (down < 0 || depth + down > depth_cap_)
        throw std::invalid_argument("descendant depth out of range");
    if (down == 0)
        return {rank, rank + 1};
    if (depth == 0)
        return {0, level_size(down)};
    std::uint64_t width = pow_[static_cast<std::size_t>(down)];
    return {rank * width, rank * width + width};
}

std::uint64_t Tree::descendant_count(const Address& a, int down) const {
    if (!contains(a))
        throw std::invalid_argument("address not in tree: " + a.str());
    RankRange r = descendant_range(a.depth(), rank_of(a), down);
    return r.hi - r.lo;
}

std::vector<Address> Tree::children(const Address& a) const {
    if (!contains(a))
        throw std::invalid_argument("address not in tree: " + a.str());
    int count = child_count(a.depth());
    std::vector<Address> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int b = 0; b < count; ++b)
        out.push_back(a.child(b));
    return out;
}

} // namespace edc
