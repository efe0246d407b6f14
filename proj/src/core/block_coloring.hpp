#pragma once

#include <cstdint>
#include <vector>

#include "core/coloring.hpp"
#include "core/limits.hpp"
#include "core/tree.hpp"

namespace edc {

// Picks the block length used by the greedy exact-distance colorer:
// floor((ln d - ln ln d + ln ln(q-1)) / ln(q-1)), clamped to at least 1 and
// decremented until k*(q-1)^(k-1) <= d so the block machinery stays within
// its provable regime.  Requires q >= 3 and even d >= 2.
int choose_block_length(int q, int d);

// Proper coloring of the exact distance-d graph of a q-regular tree
// truncation, for even d.  Vertices at depth < d/2 get color 0.  Every other
// vertex inherits the color of its "owner": the nearest ancestor-or-self at
// an anchor depth (a positive multiple of the block length k) chosen so that
// any two distinct vertices at distance exactly d have distinct owners.
// Anchor colors are assigned greedily in breadth-first order, each anchor
// avoiding the colors of
//   (i) earlier-colored anchors in its own block (the level-k descendants of
//       its k-th ancestor),
//  (ii) all anchors one anchor-level up within distance floor(k/2) of a
//       shifted ancestor, and
// (iii) its deeper forbidden ancestors at depths t - i*k, i = 2..d/k+1.
class BlockColoring final : public TreeColoring {
public:
    // d: even distance >= 2; k: block length, 1 <= k <= d/2.
    BlockColoring(const Tree& tree, int d, int k, const Limits& lim = {});

    int d() const { return d_; }
    int k() const { return k_; }

    std::uint32_t color_at(int depth, std::uint64_t rank) const override;
    int anchor_depth(int depth) const override;

    // Depth of the anchor whose color a vertex at `depth` inherits
    // (depth >= d/2 only).
    int owner_depth(int depth) const;

    // Stored color of the anchor at (depth, rank); depth must be an anchor
    // level that this coloring materialized.
    std::uint32_t anchor_color(int depth, std::uint64_t rank) const;

    // Deepest materialized anchor level (0 when the truncation is entirely
    // inside the radius-(d/2 - 1) root region).
    int top_anchor_level() const { return top_; }

private:
    int d_ = 0;
    int k_ = 0;
    int root_region_ = 0; // deepest depth that is forced to color 0
    int top_ = 0;
    // anchors_[t] holds one color per rank for each anchor level t; empty
    // vectors for non-anchor levels.
    std::vector<std::vector<std::uint32_t>> anchors_;
};

// The anchors whose colors the greedy rule forbids for anchor v through the
// same-block and shifted-ancestor parts of the rule (v itself excluded).
// Exposed for tests; v must be at a positive anchor depth.
std::vector<Address> anchor_conflicts(const Tree& tree, int d, int k,
                                      const Address& v);

// The deeper forbidden ancestors of anchor v: v^(i*k) for i = 2..d/k+1,
// kept while their depth is still at least k.
std::vector<Address> forbidden_ancestors(const Tree& tree, int d, int k,
                                         const Address& v);

} // namespace edc
