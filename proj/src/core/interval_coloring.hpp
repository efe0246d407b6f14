#pragma once

#include <cstdint>
#include <ostream>

#include "core/coloring.hpp"
#include "core/limits.hpp"
#include "core/packed.hpp"
#include "core/rational.hpp"
#include "core/tree.hpp"

namespace edc {

// Proper coloring of the band distance graph of a tree truncation: vertices
// u, v are adjacent when d <= dist(u, v) <= floor(c*d), for even d >= 2 and
// rational c > 1.
//
// The coloring is a lift of a greedy edge coloring.  With
//   ell = floor(c*d/2) - d/2   and   cap = floor(c*d),
// tree edges are colored in breadth-first order of their child endpoint;
// the edge into v (parent u at depth p) avoids the colors of
//   (i) every already-colored edge whose parent endpoint lies within
//       distance ell of u's min(ell, p)-th ancestor w,
//  (ii) the already-colored edges of u's own root path, up to cap of them,
// and, when cap is odd (cap = 2*(d/2 + ell) + 1),
// (iii) every already-colored edge whose parent endpoint lies within
//       distance ell of w's parent.
// Rule (iii) exists because pairs at distance exactly cap, odd, lift to a
// pair of edges whose parent endpoints sit at distance ell + 1 apart via a
// path that climbs above w; the ball around w's parent contains exactly
// that extra shell.  Without it those extreme pairs can collide.
// A vertex at depth t >= d/2 then takes the color of the edge at child
// depth t - d/2 + 1 on its root path; shallower vertices take color 0.
//
// Only child levels 1 .. depth_cap - d/2 + 1 are materialized: no vertex of
// the truncation reads a deeper edge.
class LiftedColoring final : public TreeColoring {
public:
    LiftedColoring(const Tree& tree, int d, const Rational& c,
                   const Limits& lim = {});

    int d() const { return d_; }
    int cap() const { return cap_; }
    int ell() const { return ell_; }
    const Rational& c() const { return c_; }

    // Deepest materialized edge level (0 when no edges are colored).
    int edge_levels() const { return edge_levels_; }

    // Color of the edge whose child endpoint is (child_depth, child_rank);
    // child_depth must be in [1, edge_levels()].
    std::uint32_t edge_color(int child_depth, std::uint64_t child_rank) const;

    std::uint32_t color_at(int depth, std::uint64_t rank) const override;
    int anchor_depth(int depth) const override;

    // Emits "parent,child,color" rows for all materialized edge levels.
    void write_edge_csv(std::ostream& out) const;

private:
    int d_ = 0;
    Rational c_;
    int cap_ = 0;
    int ell_ = 0;
    int edge_levels_ = 0;
    // edges_[t] holds one color per child rank at child level t (index 0
    // unused).
    std::vector<PackedColors> edges_;
};

} // namespace edc
