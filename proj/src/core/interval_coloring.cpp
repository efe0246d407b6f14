#include "core/interval_coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"
#include "core/saturate.hpp"

namespace edc {

LiftedColoring::LiftedColoring(const Tree& tree, int d, const Rational& c,
                               const Limits& lim)
    : TreeColoring(tree, "interval-greedy d=" + std::to_string(d) +
                             " c=" + c.str()),
      d_(d),
      c_(c) {
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument(
            "interval coloring requires an even distance d >= 2, got d=" +
            std::to_string(d));
    if (!(Rational{1, 1} < c))
        throw std::invalid_argument(
            "interval coloring requires c > 1, got c=" + c.str());
    if (tree.depth_cap() < d / 2)
        throw std::invalid_argument(
            "interval coloring needs depth_cap >= d/2: no vertex reaches "
            "the first lifted level");
    const std::int64_t cap_wide = (c * Rational{d, 1}).floor();
    if (cap_wide > 1'000'000'000)
        throw TooLargeError("band cap floor(c*d) is too large: " +
                            std::to_string(cap_wide));
    cap_ = static_cast<int>(cap_wide);
    ell_ = static_cast<int>((c * Rational{d, 2}).floor()) - d / 2;
    palette_ = 1;

    const int q = tree.q();
    const int depth_cap = tree.depth_cap();
    if (depth_cap < d / 2) {
        edge_levels_ = 0; // nothing to lift: all vertices are in the root
                          // region, the band graph is edgeless
        return;
    }
    edge_levels_ = depth_cap - d / 2 + 1;

    // Bound on the forbidden-set size per edge: at most cap path edges plus
    // the child edges of the radius-ell ball(s); one ball has at most
    // sum_{j=0}^{ell} q*(q-1)^j child edges, and odd caps add a second,
    // heavily overlapping ball.  Greedy colors therefore never exceed
    // 2*ball_edges + cap + arity.
    std::int64_t ball_edges = 0;
    for (int j = 0; j <= ell_; ++j)
        ball_edges = sat_add(ball_edges, sat_mul(q, sat_pow(q - 1, j)));
    const std::int64_t max_color =
        sat_add(sat_add(sat_mul(2, ball_edges), cap_), q + 1);
    if (max_color > 100'000'000)
        throw TooLargeError(
            "interval coloring palette bound exceeds 100000000 colors; "
            "c or d is too large for this q");

    std::int64_t entries = 0;
    std::int64_t work = 0;
    const std::int64_t per_parent = sat_add(
        max_color, 2 * static_cast<std::int64_t>(ell_ + 2) * (ell_ + 2));
    for (int t = 1; t <= edge_levels_; ++t)
        entries =
            sat_add(entries, static_cast<std::int64_t>(tree.level_size(t)));
    for (int t = 0; t < edge_levels_; ++t)
        work = sat_add(
            work, sat_mul(static_cast<std::int64_t>(tree.level_size(t)),
                          per_parent));
    if (entries > lim.color_entries)
        throw TooLargeError(
            "interval coloring would store " + std::to_string(entries) +
            " edge colors; limit is " + std::to_string(lim.color_entries));
    if (work > lim.scan_work)
        throw TooLargeError(
            "interval coloring would need about " + std::to_string(work) +
            " greedy steps; limit is " + std::to_string(lim.scan_work));

    edges_.resize(static_cast<std::size_t>(edge_levels_) + 1);
    for (int t = 1; t <= edge_levels_; ++t)
        edges_[static_cast<std::size_t>(t)] =
            PackedColors(tree.level_size(t),
                         static_cast<std::uint32_t>(max_color));

    std::vector<std::uint32_t> marks(
        static_cast<std::size_t>(max_color) + 2, 0);
    std::uint32_t stamp = 0;
    const std::uint64_t w = static_cast<std::uint64_t>(q - 1);

    for (int t = 1; t <= edge_levels_; ++t) {
        const int pu = t - 1; // parent level
        const std::uint64_t np = tree.level_size(pu);
        const int arity = tree.child_count(pu);
        auto& row = edges_[static_cast<std::size_t>(t)];

        for (std::uint64_t rp = 0; rp < np; ++rp) {
            ++stamp;

            // Marks the already-colored child edges of the ball vertices
            // (dx, [lo, hi)).  "Already colored" means child level < t, or
            // child level == t with a parent of smaller rank.
            auto mark_children = [&](int dx, std::uint64_t lo,
                                     std::uint64_t hi) {
                if (dx > pu)
                    return;
                if (dx == pu)
                    hi = std::min(hi, rp);
                if (lo >= hi)
                    return;
                std::uint64_t clo, chi;
                if (dx == 0) {
                    clo = 0;
                    chi = tree.level_size(1);
                } else {
                    clo = lo * w;
                    chi = hi * w;
                }
                const auto& rowc = edges_[static_cast<std::size_t>(dx) + 1];
                for (std::uint64_t i = clo; i < chi; ++i)
                    marks[rowc.get(i)] = stamp;
            };

            // Rule (ii): the root-path edges of u, nearest first.
            {
                int dd = pu;
                std::uint64_t rr = rp;
                const int jmax = std::min(cap_, pu);
                for (int j = 1; j <= jmax; ++j) {
                    marks[edges_[static_cast<std::size_t>(dd)].get(rr)] =
                        stamp;
                    rr = tree.ancestor_rank(dd, rr, dd - 1);
                    --dd;
                }
            }

            // Marks the child edges of every vertex within distance ell of
            // the center (cd, cr): the center's subtree slices, then an apex
            // walk up the root path with the return branch excluded.
            auto mark_ball = [&](int cd, std::uint64_t cr) {
                for (int s = 0; s <= ell_; ++s) {
                    const Tree::RankRange rg = tree.descendant_range(cd, cr,
                                                                     s);
                    mark_children(cd + s, rg.lo, rg.hi);
                }
                int ad = cd;
                std::uint64_t ar = cr;
                for (int j = 1; j <= std::min(ell_, cd); ++j) {
                    const int ret_d = ad;        // child of the new apex that
                    const std::uint64_t ret_r = ar; // leads back down
                    ar = tree.ancestor_rank(ad, ar, ad - 1);
                    --ad;
                    mark_children(ad, ar, ar + 1);
                    for (int s = 1; s <= ell_ - j; ++s) {
                        const Tree::RankRange full =
                            tree.descendant_range(ad, ar, s);
                        const Tree::RankRange excl =
                            tree.descendant_range(ret_d, ret_r, s - 1);
                        mark_children(ad + s, full.lo, excl.lo);
                        mark_children(ad + s, excl.hi, full.hi);
                    }
                }
            };

            // Rule (i): child edges of the radius-ell ball around u's
            // min(ell, depth(u))-th ancestor w.
            const int m = std::min(ell_, pu);
            const int wd = pu - m;
            const std::uint64_t rw = tree.ancestor_rank(pu, rp, wd);
            mark_ball(wd, rw);

            // Rule (iii): odd caps admit band pairs at distance exactly cap
            // whose lifted edges have parent endpoints ell + 1 apart, via a
            // path climbing above w; the ball around w's parent holds that
            // extra shell.  (Missed pairs need w strictly below the root.)
            if (cap_ % 2 == 1 && wd >= 1)
                mark_ball(wd - 1, tree.ancestor_rank(wd, rw, wd - 1));

            // Assign the arity smallest non-forbidden colors, in child
            // order.  This matches coloring the sibling edges one at a time:
            // they share the forbidden set above and must differ pairwise.
            std::uint32_t c_next = 1;
            const std::uint64_t base = (pu == 0) ? 0 : rp * w;
            for (int b = 0; b < arity; ++b) {
                while (marks[c_next] == stamp)
                    ++c_next;
                row.set(base + static_cast<std::uint64_t>(b), c_next);
                if (c_next + 1 > palette_)
                    palette_ = c_next + 1;
                ++c_next;
            }
        }
    }
}

std::uint32_t LiftedColoring::edge_color(int child_depth,
                                         std::uint64_t child_rank) const {
    if (child_depth < 1 || child_depth > edge_levels_)
        throw std::invalid_argument("no colored edge level " +
                                    std::to_string(child_depth));
    return edges_[static_cast<std::size_t>(child_depth)].get(child_rank);
}

std::uint32_t LiftedColoring::color_at(int depth, std::uint64_t rank) const {
    if (depth < d_ / 2)
        return 0;
    const int e = depth - d_ / 2 + 1;
    return edges_[static_cast<std::size_t>(e)].get(
        tree_.ancestor_rank(depth, rank, e));
}

int LiftedColoring::anchor_depth(int depth) const {
    return depth < d_ / 2 ? 0 : depth - d_ / 2 + 1;
}

void LiftedColoring::write_edge_csv(std::ostream& out) const {
    out << "# edge_coloring: " << provenance_ << "\n";
    out << "# q: " << tree_.q() << "\n";
    out << "# root_arity: " << tree_.root_arity() << "\n";
    out << "# depth_cap: " << tree_.depth_cap() << "\n";
    out << "# edge_levels: " << edge_levels_ << "\n";
    out << "# palette_size: " << palette_ << "\n";
    out << "parent,child,color\n";
    for (int t = 1; t <= edge_levels_; ++t) {
        const std::uint64_t n = tree_.level_size(t);
        for (std::uint64_t rc = 0; rc < n; ++rc) {
            const Address child = tree_.address_at(t, rc);
            out << child.ancestor(1).str() << ',' << child.str() << ','
                << edges_[static_cast<std::size_t>(t)].get(rc) << '\n';
        }
    }
}

} // namespace edc
