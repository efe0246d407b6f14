#include <algorithm>
#include <stdexcept>
#include <vector>

#include "core/block_coloring.hpp"
#include "core/saturate.hpp"
#include "core/tree.hpp"
#include "core/verify.hpp"
#include "doctest.h"

using edc::BlockColoring;
using edc::Tree;

namespace {

// The closed-form palette bound; valid whenever k*(q-1)^(k-1) <= d (always
// true for automatically chosen block lengths).
std::int64_t formula_bound(int q, int d, int k) {
    return edc::sat_pow(q - 1, k) + edc::sat_pow(q - 1, k / 2) +
           (d + k - 1) / k + 1;
}

// Worst-case greedy color count on arity-q truncations, where the unique
// root block has q*(q-1)^(k-1) members: one more than the largest possible
// forbidden set, plus color 0.
std::int64_t root_aware_bound(int q, int d, int k) {
    return edc::sat_mul(q, edc::sat_pow(q - 1, k - 1)) +
           edc::sat_mul(q, edc::sat_pow(q - 1, std::max(k / 2 - 1, 0))) +
           d / k + 4;
}

} // namespace

TEST_CASE("block length selection, frozen values") {
    for (int d : {2, 4, 6, 8, 10, 12})
        CHECK(edc::choose_block_length(3, d) == 1);
    CHECK(edc::choose_block_length(3, 100) == 3);
    CHECK(edc::choose_block_length(3, 1024) == 6);
    CHECK(edc::choose_block_length(4, 8) == 1);
    CHECK(edc::choose_block_length(5, 20) == 1);
    // the selection always stays in the provable regime
    for (int q : {3, 4, 5})
        for (int d = 2; d <= 40; d += 2) {
            const int k = edc::choose_block_length(q, d);
            CHECK(k >= 1);
            CHECK(k * edc::sat_pow(q - 1, k - 1) <= d);
        }
}

TEST_CASE("block length selection validates input") {
    CHECK_THROWS_AS(edc::choose_block_length(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(edc::choose_block_length(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(edc::choose_block_length(3, 0), std::invalid_argument);
}

TEST_CASE("root region is color 0, deeper vertices are not") {
    const Tree t(3, 3, 8);
    const BlockColoring col(t, 4, 1);
    for (int depth = 0; depth <= 1; ++depth) // d/2 - 1 = 1
        for (std::uint64_t r = 0; r < t.level_size(depth); ++r)
            CHECK(col.color_at(depth, r) == 0);
    for (std::uint64_t r = 0; r < t.level_size(2); ++r)
        CHECK(col.color_at(2, r) >= 1);
}

TEST_CASE("colors are constant on anchor-aligned rank blocks") {
    const Tree t(3, 3, 8);
    const BlockColoring col(t, 4, 2);
    for (int depth = 2; depth <= 8; ++depth) {
        const int a = col.anchor_depth(depth);
        REQUIRE(a >= 1);
        REQUIRE(a <= depth);
        for (std::uint64_t r = 0; r < t.level_size(depth); ++r)
            CHECK(col.color_at(depth, r) ==
                  col.anchor_color(a, t.ancestor_rank(depth, r, a)));
    }
}

TEST_CASE("exact-distance properness, exhaustive grid") {
    struct Point {
        int q, d, k, depth;
    };
    const std::vector<Point> grid = {
        {3, 2, 1, 4},  {3, 4, 1, 8},  {3, 4, 2, 8},  {3, 6, 1, 12},
        {3, 6, 2, 12}, {3, 6, 3, 12}, {4, 4, 1, 8},  {4, 4, 2, 8},
        {5, 4, 1, 6},  {5, 4, 2, 6},  {3, 8, 4, 12},
    };
    for (const Point& p : grid) {
        CAPTURE(p.q);
        CAPTURE(p.d);
        CAPTURE(p.k);
        const Tree t(p.q, p.q, p.depth);
        const BlockColoring col(t, p.d, p.k);
        const edc::VerifyReport rep = edc::verify_tree(col, p.d, p.d);
        CHECK(rep.full);
        CHECK(rep.violations == 0);
        CHECK(rep.pairs_checked > 0);
        CHECK(col.palette_size() <=
              static_cast<std::uint32_t>(root_aware_bound(p.q, p.d, p.k)));
        if (static_cast<std::int64_t>(p.k) *
                edc::sat_pow(p.q - 1, p.k - 1) <=
            p.d)
            CHECK(col.palette_size() <=
                  static_cast<std::uint32_t>(
                      formula_bound(p.q, p.d, p.k)));
    }
}

TEST_CASE("properness also holds on root-arity q-1 truncations") {
    const Tree t(3, 2, 10);
    const BlockColoring col(t, 4, 1);
    const edc::VerifyReport rep = edc::verify_tree(col, 4, 4);
    CHECK(rep.violations == 0);
}

TEST_CASE("frozen palettes at block length 1 hit d+q+1") {
    for (int d : {2, 4, 6, 8}) {
        const Tree t(3, 3, std::min(2 * d, 20));
        const BlockColoring col(t, d, 1);
        CHECK(col.palette_size() == static_cast<std::uint32_t>(d + 4));
    }
}

TEST_CASE("root block needs q*(q-1)^(k-1) colors at large block lengths") {
    // Regression for a crash: the first anchor level's block is rooted at
    // the root, whose arity is q, so it has 96 members here - more than the
    // 64 of deeper blocks. The greedy must survive that and stay proper.
    const Tree t(3, 3, 12);
    const BlockColoring col(t, 12, 6);
    CHECK(col.palette_size() == 97); // 96 root-block colors + color 0
    const edc::VerifyReport rep =
        edc::verify_tree_sampled(col, 12, 12, 20000, 42);
    CHECK(rep.violations == 0);
}

TEST_CASE("construction is deterministic") {
    const Tree t(3, 3, 8);
    const BlockColoring a(t, 4, 2);
    const BlockColoring b(t, 4, 2);
    REQUIRE(a.palette_size() == b.palette_size());
    for (int depth = 0; depth <= 8; ++depth)
        for (std::uint64_t r = 0; r < t.level_size(depth); ++r)
            REQUIRE(a.color_at(depth, r) == b.color_at(depth, r));
}

TEST_CASE("truncations inside the root region are all color 0") {
    const Tree t(3, 3, 1); // depth 1 < d/2 = 2
    const BlockColoring col(t, 4, 1);
    CHECK(col.top_anchor_level() == 0);
    CHECK(col.palette_size() == 1);
    for (std::uint64_t r = 0; r < t.level_size(1); ++r)
        CHECK(col.color_at(1, r) == 0);
}

TEST_CASE("anchor conflict helpers") {
    const Tree t(3, 3, 8);
    const edc::Address v = edc::Address::parse("0.1");
    const auto conflicts = edc::anchor_conflicts(t, 4, 2, v);
    CHECK(!conflicts.empty());
    for (const auto& w : conflicts) {
        CHECK(w != v);
        CHECK(w.depth() % 2 == 0); // anchor depths are multiples of k
        CHECK(w.depth() >= 2);
    }
    const edc::Address deep = edc::Address::parse("0.1.0.1.0.0");
    const auto anc = edc::forbidden_ancestors(t, 4, 2, deep);
    for (const auto& w : anc) {
        CHECK(w.depth() >= 2);
        CHECK((deep.depth() - w.depth()) % 2 == 0);
        CHECK(deep.ancestor(deep.depth() - w.depth()) == w);
    }
}

TEST_CASE("block coloring validates parameters") {
    const Tree t(3, 3, 8);
    CHECK_THROWS_AS(BlockColoring(t, 3, 1), std::invalid_argument); // odd d
    CHECK_THROWS_AS(BlockColoring(t, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(BlockColoring(t, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(BlockColoring(t, 4, 3), std::invalid_argument); // k > d/2
}

TEST_CASE("block coloring honors the entry limit") {
    edc::Limits lim;
    lim.color_entries = 10;
    const Tree t(3, 3, 10);
    CHECK_THROWS_AS(BlockColoring(t, 4, 1, lim), edc::TooLargeError);
}
