#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace edc {

// Address of a vertex in a rooted tree: the child-branch indices on the
// path from the root. The root is the empty sequence; its text form is "r",
// any other vertex prints as dot-separated branch indices ("0.1.1").
class Address {
public:
    Address() = default;
    explicit Address(std::vector<std::uint8_t> branches) : branch_(std::move(branches)) {}

    static Address parse(const std::string& text);
    std::string str() const;

    int depth() const { return static_cast<int>(branch_.size()); }
    bool is_root() const { return branch_.empty(); }
    std::uint8_t branch(int i) const { return branch_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint8_t>& branches() const { return branch_; }

    // Ancestor at distance i (ancestor(a, 0) == a). Throws std::invalid_argument
    // if i < 0 or i > depth().
    Address ancestor(int i) const;
    Address child(int b) const;

    bool operator==(const Address&) const = default;
    // Lexicographic on the branch sequence; combined with depth this gives
    // the breadth-first order used by Tree::bfs_index.
    auto operator<=>(const Address&) const = default;

private:
    std::vector<std::uint8_t> branch_;
};

// Distance between two vertices of the same rooted tree (independent of the
// tree parameters: it only depends on the longest common prefix).
int distance(const Address& a, const Address& b);

// A truncation of the infinite tree in which the root has `root_arity`
// children and every other internal vertex has q-1 children, cut at depth
// `depth_cap`. Vertices are never materialized; the class provides counting
// and rank arithmetic so colorings and verification can work positionally.
//
// A vertex is identified either by Address or by (depth, rank) where rank is
// its 0-based position among the vertices of its depth in branch-lexicographic
// order.
class Tree {
public:
    Tree(int q, int root_arity, int depth_cap);

    int q() const { return q_; }
    int root_arity() const { return root_arity_; }
    int depth_cap() const { return depth_cap_; }
    int branch_arity() const { return q_ - 1; }

    // Number of children of a vertex at the given depth (0 at depth_cap).
    int child_count(int depth) const;
    bool contains(const Address& a) const;

    std::uint64_t level_size(int depth) const { return level_size_[static_cast<std::size_t>(depth)]; }
    // Number of vertices at depth < `depth`.
    std::uint64_t level_offset(int depth) const { return level_offset_[static_cast<std::size_t>(depth)]; }
    std::uint64_t vertex_count() const { return level_offset_[static_cast<std::size_t>(depth_cap_) + 1]; }

    // (q-1)^e, valid for e in [0, depth_cap].
    std::uint64_t branch_pow(int e) const { return pow_[static_cast<std::size_t>(e)]; }

    std::uint64_t rank_of(const Address& a) const;
    Address address_at(int depth, std::uint64_t rank) const;
    std::uint64_t bfs_index(const Address& a) const { return level_offset(a.depth()) + rank_of(a); }

    // Rank of the ancestor at depth `to_depth` of the vertex (depth, rank).
    std::uint64_t ancestor_rank(int depth, std::uint64_t rank, int to_depth) const;
    // Rank (at depth+1) of child b of the vertex (depth, rank).
    std::uint64_t child_rank(int depth, std::uint64_t rank, int b) const;
    // Half-open rank interval, at depth `depth + down`, of the descendants of
    // the vertex (depth, rank) at distance exactly `down`.
    struct RankRange { std::uint64_t lo = 0, hi = 0; };
    RankRange descendant_range(int depth, std::uint64_t rank, int down) const;

    // Number of descendants at distance exactly `down`; throws if the target
    // depth exceeds depth_cap.
    std::uint64_t descendant_count(const Address& a, int down) const;
    std::vector<Address> children(const Address& a) const;

    bool operator==(const Tree&) const = default;

private:
    int q_;
    int root_arity_;
    int depth_cap_;
    std::vector<std::uint64_t> pow_;          // (q-1)^e
    std::vector<std::uint64_t> level_size_;   // per depth
    std::vector<std::uint64_t> level_offset_; // cumulative, depth_cap_+2 entries
};

} // namespace edc
