#include "core/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/saturate.hpp"

namespace edc {

namespace {

// Valid "up-leg" lengths i when pairing a vertex at depth t with partners at
// distance j: the partner hangs m = j - i below the depth-(t-i) ancestor,
// needs m <= i (count each pair from its deeper endpoint), i <= t, and the
// partner must fit in the truncation: m <= D - (t - i).
struct SplitBounds {
    int lo;
    int hi;
};

SplitBounds split_bounds(int t, int j, int depth_cap) {
    int lo = std::max(1, (j + 1) / 2);
    const int need = j - (depth_cap - t);
    if (need > 0)
        lo = std::max(lo, (need + 1) / 2);
    return {lo, std::min(t, j)};
}

} // namespace

void VerifyReport::write_csv(std::ostream& out) const {
    out << "# mode: " << (full ? "full" : "sampled") << "\n";
    if (cap >= 1)
        out << "# band: " << d << ".." << cap << "\n";
    out << "# pairs_checked: " << pairs_checked << "\n";
    out << "# violations: " << violations << "\n";
    if (!full) {
        out << "# samples: " << samples << "\n";
        out << "# seed: " << seed << "\n";
    }
    out << "x,y,distance,color\n";
    for (const auto& v : examples)
        out << v.x << ',' << v.y << ',' << v.distance << ',' << v.color
            << '\n';
}

VerifyReport verify_tree(const TreeColoring& col, int d, int cap,
                         const Limits& lim) {
    if (d < 1 || cap < d)
        throw std::invalid_argument(
            "need 1 <= d <= cap, got d=" + std::to_string(d) +
            " cap=" + std::to_string(cap));
    const Tree& tree = col.tree();
    const int depth_cap = tree.depth_cap();

    // Estimate the scan cost before touching anything big.  Candidate
    // partners are scanned one color-constant run at a time, so the cost of
    // one (t, j, i) split is about (range width / run length) + O(1).
    std::int64_t est = 0;
    for (int t = 0; t <= depth_cap; ++t) {
        std::int64_t per_vertex = 0;
        for (int j = d; j <= cap; ++j) {
            const SplitBounds b = split_bounds(t, j, depth_cap);
            for (int i = b.lo; i <= b.hi; ++i) {
                const int m = j - i;
                if (m == 0) {
                    per_vertex = sat_add(per_vertex, 1);
                    continue;
                }
                const int h = t - i;
                const int ty = h + m;
                const std::int64_t width =
                    (h == 0) ? static_cast<std::int64_t>(tree.level_size(ty))
                             : static_cast<std::int64_t>(tree.branch_pow(m));
                const int a = col.anchor_depth(ty);
                const std::int64_t run =
                    (a <= 0) ? width
                             : static_cast<std::int64_t>(
                                   tree.branch_pow(ty - a));
                const std::int64_t runs =
                    (run > 0 ? width / run : width) + 2;
                per_vertex = sat_add(per_vertex, sat_add(runs, 2));
            }
        }
        est = sat_add(est, sat_mul(static_cast<std::int64_t>(
                                       tree.level_size(t)),
                                   per_vertex));
    }
    if (est > lim.scan_work)
        throw TooLargeError(
            "full verification would need about " + std::to_string(est) +
            " scan steps; limit is " + std::to_string(lim.scan_work) +
            "; use sampled verification instead");

    VerifyReport rep;
    rep.full = true;
    rep.d = d;
    rep.cap = cap;

    auto note = [&](std::uint64_t count, int xt, std::uint64_t xr, int yt,
                    std::uint64_t yr, int j, std::uint32_t c) {
        rep.violations += count;
        if (rep.examples.size() < VerifyReport::kMaxExamples)
            rep.examples.push_back({tree.address_at(xt, xr).str(),
                                    tree.address_at(yt, yr).str(), j, c});
    };

    // Scans partner ranks [lo, hi) at level ty against the color cx of the
    // source vertex (xt, xr), one color-constant run at a time.
    auto scan = [&](int ty, std::uint64_t lo, std::uint64_t hi,
                    std::uint32_t cx, int xt, std::uint64_t xr, int j) {
        if (lo >= hi)
            return;
        rep.pairs_checked += hi - lo;
        const int a = col.anchor_depth(ty);
        if (a <= 0) {
            if (col.color_at(ty, lo) == cx)
                note(hi - lo, xt, xr, ty, lo, j, cx);
            return;
        }
        const std::uint64_t run = tree.branch_pow(ty - a);
        std::uint64_t pos = lo;
        while (pos < hi) {
            const std::uint64_t end =
                std::min(hi, (pos / run + 1) * run);
            if (col.color_at(ty, pos) == cx)
                note(end - pos, xt, xr, ty, pos, j, cx);
            pos = end;
        }
    };

    for (int t = 0; t <= depth_cap; ++t) {
        const std::uint64_t n = tree.level_size(t);
        for (std::uint64_t r = 0; r < n; ++r) {
            const std::uint32_t cx = col.color_at(t, r);
            for (int j = d; j <= cap; ++j) {
                const SplitBounds b = split_bounds(t, j, depth_cap);
                for (int i = b.lo; i <= b.hi; ++i) {
                    const int m = j - i;
                    const int h = t - i;
                    const std::uint64_t ra = tree.ancestor_rank(t, r, h);
                    if (m == 0) {
                        ++rep.pairs_checked;
                        if (col.color_at(h, ra) == cx)
                            note(1, t, r, h, ra, j, cx);
                        continue;
                    }
                    // Partners at distance j = i + m: descendants of the
                    // depth-h ancestor, m levels down, excluding the branch
                    // that leads back to the source.
                    const std::uint64_t rc =
                        tree.ancestor_rank(t, r, h + 1);
                    const Tree::RankRange full =
                        tree.descendant_range(h, ra, m);
                    const Tree::RankRange excl =
                        tree.descendant_range(h + 1, rc, m - 1);
                    if (i == m) {
                        // Same-level partners: keep only larger ranks so
                        // each unordered pair is counted once.
                        scan(t, excl.hi, full.hi, cx, t, r, j);
                    } else {
                        scan(h + m, full.lo, excl.lo, cx, t, r, j);
                        scan(h + m, excl.hi, full.hi, cx, t, r, j);
                    }
                }
            }
        }
    }
    return rep;
}

VerifyReport verify_tree_sampled(const TreeColoring& col, int d, int cap,
                                 std::uint64_t samples, std::uint64_t seed) {
    if (d < 1 || cap < d)
        throw std::invalid_argument(
            "need 1 <= d <= cap, got d=" + std::to_string(d) +
            " cap=" + std::to_string(cap));
    const Tree& tree = col.tree();
    const int depth_cap = tree.depth_cap();
    const int q = tree.q();

    VerifyReport rep;
    rep.full = false;
    rep.d = d;
    rep.cap = cap;
    rep.samples = samples;
    rep.seed = seed;

    auto note = [&](int xt, std::uint64_t xr, int yt, std::uint64_t yr,
                    int j, std::uint32_t c) {
        ++rep.violations;
        if (rep.examples.size() < VerifyReport::kMaxExamples)
            rep.examples.push_back({tree.address_at(xt, xr).str(),
                                    tree.address_at(yt, yr).str(), j, c});
    };

    Rng rng(seed);
    const std::uint64_t total = tree.vertex_count();
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            const std::uint64_t idx = rng.bounded(total);
            int t = 0;
            while (idx >= tree.level_offset(t) + tree.level_size(t))
                ++t;
            const std::uint64_t r = idx - tree.level_offset(t);
            const int j =
                d + static_cast<int>(rng.bounded(
                        static_cast<std::uint64_t>(cap - d + 1)));
            const SplitBounds b = split_bounds(t, j, depth_cap);
            if (b.lo > b.hi)
                continue; // no partner at distance j from here; redraw
            const int i =
                b.lo + static_cast<int>(rng.bounded(
                           static_cast<std::uint64_t>(b.hi - b.lo + 1)));
            const int m = j - i;
            const int h = t - i;
            const std::uint64_t ra = tree.ancestor_rank(t, r, h);
            int yt;
            std::uint64_t yr;
            if (m == 0) {
                yt = h;
                yr = ra;
            } else {
                // First step down from the split ancestor must avoid the
                // branch back toward the source; later steps are free.
                const std::uint64_t rc = tree.ancestor_rank(t, r, h + 1);
                const std::uint64_t first =
                    (h == 0) ? 0
                             : ra * static_cast<std::uint64_t>(q - 1);
                const std::uint64_t back = rc - first;
                const int deg = tree.child_count(h);
                std::uint64_t bsel = rng.bounded(
                    static_cast<std::uint64_t>(deg - 1));
                if (bsel >= back)
                    ++bsel;
                yr = first + bsel;
                for (int step = 2; step <= m; ++step)
                    yr = yr * static_cast<std::uint64_t>(q - 1) +
                         rng.bounded(static_cast<std::uint64_t>(q - 1));
                yt = h + m;
            }
            ++rep.pairs_checked;
            const std::uint32_t cx = col.color_at(t, r);
            if (col.color_at(yt, yr) == cx)
                note(t, r, yt, yr, j, cx);
            break;
        }
    }
    return rep;
}

VerifyReport verify_on_graph(const std::vector<std::uint32_t>& colors,
                             const FiniteGraph& g) {
    if (static_cast<std::int64_t>(colors.size()) != g.n)
        throw std::invalid_argument(
            "color vector has " + std::to_string(colors.size()) +
            " entries; graph has " + std::to_string(g.n) + " vertices");
    VerifyReport rep;
    rep.full = true;
    rep.pairs_checked = g.edges.size();
    for (const auto& e : g.edges) {
        if (colors[static_cast<std::size_t>(e.first)] ==
            colors[static_cast<std::size_t>(e.second)]) {
            ++rep.violations;
            if (rep.examples.size() < VerifyReport::kMaxExamples)
                rep.examples.push_back(
                    {g.labels[static_cast<std::size_t>(e.first)],
                     g.labels[static_cast<std::size_t>(e.second)], -1,
                     colors[static_cast<std::size_t>(e.first)]});
        }
    }
    return rep;
}

} // namespace edc
