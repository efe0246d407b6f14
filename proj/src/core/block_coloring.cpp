#include "core/block_coloring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"
#include "core/saturate.hpp"

namespace edc {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void validate(const Tree& tree, int d, int k) {
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument(
            "block coloring requires an even distance d >= 2, got d=" +
            std::to_string(d));
    if (k < 1 || k > d / 2)
        throw std::invalid_argument(
            "block length k must satisfy 1 <= k <= d/2, got k=" +
            std::to_string(k) + " for d=" + std::to_string(d));
    (void)tree;
}

} // namespace

int choose_block_length(int q, int d) {
    if (q < 3)
        throw std::invalid_argument("q must be at least 3");
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument(
            "block length selection requires an even distance d >= 2");
    const double lq = std::log(static_cast<double>(q - 1));
    const double target =
        (std::log(static_cast<double>(d)) -
         std::log(std::log(static_cast<double>(d))) + std::log(lq)) /
        lq;
    int k = static_cast<int>(std::floor(target + 1e-9));
    if (k < 1)
        k = 1;
    while (k > 1 && sat_mul(k, sat_pow(q - 1, k - 1)) >
                        static_cast<std::int64_t>(d))
        --k;
    return k;
}

BlockColoring::BlockColoring(const Tree& tree, int d, int k, const Limits& lim)
    : TreeColoring(tree, "block-greedy d=" + std::to_string(d) +
                             " k=" + std::to_string(k)),
      d_(d),
      k_(k) {
    validate(tree, d, k);
    const int q = tree.q();
    const int depth_cap = tree.depth_cap();
    root_region_ = d / 2 - 1;
    palette_ = 1; // color 0 always appears (the root)

    if (depth_cap < d / 2) {
        top_ = 0; // whole truncation is in the root region
        return;
    }

    // Deepest anchor level any vertex of the truncation inherits from.
    top_ = k * ceil_div(depth_cap - d / 2 + 1, k);
    anchors_.assign(static_cast<std::size_t>(top_) + 1, {});

    // Greedy color values never exceed (#forbidden colors + 1).  The
    // forbidden set is at most (block size - 1) same-block anchors plus the
    // size of one shifted-level cohort plus d/k forbidden ancestors.  Blocks
    // and cohorts rooted at the tree's root span all root subtrees, so both
    // counts are sized with the root's arity q, not q-1: the unique level-k
    // block has q*(q-1)^(k-1) members when the root has q children.
    const std::int64_t max_color = sat_add(
        sat_add(sat_mul(q, sat_pow(q - 1, k - 1)),
                sat_mul(q, sat_pow(q - 1, std::max(k / 2 - 1, 0)))),
        d / k + 2);
    if (max_color > 100'000'000)
        throw TooLargeError(
            "block coloring palette bound exceeds 100000000 colors; "
            "choose a smaller block length");

    std::int64_t entries = 0;
    std::int64_t work = 0;
    const std::int64_t per_vertex =
        sat_add(sat_mul(2, max_color), static_cast<std::int64_t>(d / k + 2));
    for (int t = k; t <= top_; t += k) {
        const std::int64_t n =
            static_cast<std::int64_t>(tree.level_size(t));
        entries = sat_add(entries, n);
        work = sat_add(work, sat_mul(n, per_vertex));
    }
    if (entries > lim.color_entries)
        throw TooLargeError(
            "block coloring would store " + std::to_string(entries) +
            " anchor colors; limit is " + std::to_string(lim.color_entries));
    if (work > lim.scan_work)
        throw TooLargeError(
            "block coloring would need about " + std::to_string(work) +
            " greedy steps; limit is " + std::to_string(lim.scan_work));

    // stamp/marks implement a reusable "is this color forbidden?" set.
    std::vector<std::uint32_t> marks(
        static_cast<std::size_t>(max_color) + 2, 0);
    std::uint32_t stamp = 0;
    const int m2 = k / 2;

    for (int t = k; t <= top_; t += k) {
        const std::uint64_t n = tree.level_size(t);
        auto& level = anchors_[static_cast<std::size_t>(t)];
        level.assign(n, 0);
        const int h = t - k; // depth of the k-th ancestor (block root)

        // Part (iii): forbidden ancestor depths for this level.
        std::vector<int> anc_depths;
        for (int i = 2; i <= d / k + 1; ++i) {
            const int s = t - i * k;
            if (s < k)
                break;
            anc_depths.push_back(s);
        }

        for (std::uint64_t r = 0; r < n; ++r) {
            ++stamp;
            auto forbid = [&](std::uint32_t c) { marks[c] = stamp; };

            // Part (i): earlier-colored anchors of v's own block, i.e. the
            // level-t descendants of v's k-th ancestor with smaller rank.
            const Tree::RankRange block = tree.descendant_range(
                h, tree.ancestor_rank(t, r, h), k);
            for (std::uint64_t x = block.lo; x < r; ++x)
                forbid(level[x]);

            // Part (ii): the whole distance-m2 cohort of the (k+m2)-th
            // ancestor, one anchor level up.  Skipped at the first anchor
            // level, where that level would be the root.
            if (h >= 1) {
                const int up = std::min(m2, h);
                const int w_depth = h - up;
                const Tree::RankRange rel = tree.descendant_range(
                    w_depth, tree.ancestor_rank(t, r, w_depth), up);
                const auto& above = anchors_[static_cast<std::size_t>(h)];
                for (std::uint64_t x = rel.lo; x < rel.hi; ++x)
                    forbid(above[x]);
            }

            // Part (iii): deeper forbidden ancestors.
            for (int s : anc_depths)
                forbid(anchors_[static_cast<std::size_t>(s)]
                               [tree.ancestor_rank(t, r, s)]);

            std::uint32_t c = 1;
            while (marks[c] == stamp)
                ++c;
            level[r] = c;
            if (c + 1 > palette_)
                palette_ = c + 1;
        }
    }
}

int BlockColoring::owner_depth(int depth) const {
    return k_ * ceil_div(depth - d_ / 2 + 1, k_);
}

std::uint32_t BlockColoring::color_at(int depth, std::uint64_t rank) const {
    if (depth <= root_region_)
        return 0;
    const int o = owner_depth(depth);
    return anchors_[static_cast<std::size_t>(o)]
                   [tree_.ancestor_rank(depth, rank, o)];
}

int BlockColoring::anchor_depth(int depth) const {
    return depth <= root_region_ ? 0 : owner_depth(depth);
}

std::uint32_t BlockColoring::anchor_color(int depth,
                                          std::uint64_t rank) const {
    if (depth < 1 || depth > top_ ||
        anchors_[static_cast<std::size_t>(depth)].empty())
        throw std::invalid_argument("not a materialized anchor level: " +
                                    std::to_string(depth));
    return anchors_[static_cast<std::size_t>(depth)][rank];
}

std::vector<Address> anchor_conflicts(const Tree& tree, int d, int k,
                                      const Address& v) {
    validate(tree, d, k);
    const int t = v.depth();
    if (t < k || t % k != 0)
        throw std::invalid_argument(
            "vertex is not at a positive anchor depth: " + v.str());
    std::vector<Address> out;
    const std::uint64_t r = tree.rank_of(v);
    const int h = t - k;

    const Tree::RankRange block =
        tree.descendant_range(h, tree.ancestor_rank(t, r, h), k);
    for (std::uint64_t x = block.lo; x < block.hi; ++x)
        if (x != r)
            out.push_back(tree.address_at(t, x));

    if (h >= 1) {
        const int up = std::min(k / 2, h);
        const int w_depth = h - up;
        const Tree::RankRange rel = tree.descendant_range(
            w_depth, tree.ancestor_rank(t, r, w_depth), up);
        for (std::uint64_t x = rel.lo; x < rel.hi; ++x)
            out.push_back(tree.address_at(h, x));
    }
    return out;
}

std::vector<Address> forbidden_ancestors(const Tree& tree, int d, int k,
                                         const Address& v) {
    validate(tree, d, k);
    const int t = v.depth();
    if (t < k || t % k != 0)
        throw std::invalid_argument(
            "vertex is not at a positive anchor depth: " + v.str());
    std::vector<Address> out;
    for (int i = 2; i <= d / k + 1; ++i) {
        const int s = t - i * k;
        if (s < k)
            break;
        out.push_back(v.ancestor(static_cast<std::size_t>(i) * k));
    }
    return out;
}

} // namespace edc
