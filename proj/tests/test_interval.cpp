#include <sstream>
#include <stdexcept>
#include <string>

#include "core/graph.hpp"
#include "core/interval_coloring.hpp"
#include "core/rational.hpp"
#include "core/tree.hpp"
#include "core/verify.hpp"
#include "doctest.h"

using edc::LiftedColoring;
using edc::Rational;
using edc::Tree;

TEST_CASE("band parameters") {
    const LiftedColoring a(Tree(3, 3, 5), 2, Rational(3, 2));
    CHECK(a.cap() == 3);  // floor(3/2 * 2)
    CHECK(a.ell() == 0);  // floor(3/2 * 1) - 1
    const LiftedColoring b(Tree(3, 3, 7), 4, Rational(3, 2));
    CHECK(b.cap() == 6);
    CHECK(b.ell() == 1);
    CHECK(b.edge_levels() == 7 - 2 + 1);
}

TEST_CASE("frozen palette sizes") {
    struct Point {
        int q, d, depth;
        Rational c;
        std::uint32_t palette;
    };
    const Point grid[] = {
        {3, 2, 5, Rational(3, 2), 7},
        {3, 4, 10, Rational(3, 2), 13},
        {4, 4, 10, Rational(3, 2), 20},
        {3, 6, 15, Rational(3, 2), 19},
        {4, 6, 15, Rational(3, 2), 31},
    };
    for (const Point& p : grid) {
        CAPTURE(p.q);
        CAPTURE(p.d);
        const LiftedColoring col(Tree(p.q, p.q, p.depth), p.d, p.c);
        CHECK(col.palette_size() == p.palette);
    }
}

TEST_CASE("band properness, exhaustive, small") {
    const Tree t(3, 3, 5);
    const LiftedColoring col(t, 2, Rational(3, 2));
    const edc::VerifyReport rep = edc::verify_tree(col, 2, 3);
    CHECK(rep.full);
    CHECK(rep.violations == 0);
    CHECK(rep.pairs_checked == 318);
    // cross-check the pair count against an explicit band power graph
    const edc::FiniteGraph base = edc::build_tree_graph(t);
    const edc::FiniteGraph band = edc::band_power(base, 2, 3);
    CHECK(rep.pairs_checked == band.edge_count());
}

TEST_CASE("band properness, exhaustive, ell = 1") {
    const Tree t(3, 3, 7);
    const LiftedColoring col(t, 4, Rational(3, 2));
    const edc::VerifyReport rep = edc::verify_tree(col, 4, 6);
    CHECK(rep.violations == 0);
    const edc::FiniteGraph band =
        edc::band_power(edc::build_tree_graph(t), 4, 6);
    CHECK(rep.pairs_checked == band.edge_count());
}

TEST_CASE("band properness at an odd cap, exhaustive") {
    // Regression: pairs at odd distance cap lift to edges whose parents sit
    // ell + 1 apart, which only the parent-shell rule covers.
    const Tree t(3, 3, 15);
    const LiftedColoring col(t, 6, Rational(3, 2)); // cap 9, odd
    const edc::VerifyReport rep = edc::verify_tree(col, 6, 9);
    CHECK(rep.full);
    CHECK(rep.violations == 0);
    CHECK(rep.pairs_checked == 4127328);
}

TEST_CASE("band properness, sampled, larger arity") {
    const Tree t(4, 4, 12);
    const LiftedColoring col(t, 6, Rational(3, 2));
    const edc::VerifyReport rep =
        edc::verify_tree_sampled(col, 6, 9, 100000, 5);
    CHECK_FALSE(rep.full);
    CHECK(rep.violations == 0);
    CHECK(rep.pairs_checked > 90000);
}

TEST_CASE("equal rationals give identical colorings") {
    const Tree t(3, 3, 8);
    const LiftedColoring a(t, 4, Rational(3, 2));
    const LiftedColoring b(t, 4, Rational(6, 4));
    REQUIRE(a.palette_size() == b.palette_size());
    for (int depth = 0; depth <= 8; ++depth)
        for (std::uint64_t r = 0; r < t.level_size(depth); ++r)
            REQUIRE(a.color_at(depth, r) == b.color_at(depth, r));
}

TEST_CASE("vertex colors are lifted edge colors") {
    const Tree t(3, 3, 9);
    const LiftedColoring col(t, 4, Rational(3, 2));
    for (int depth = 0; depth < 2; ++depth)
        for (std::uint64_t r = 0; r < t.level_size(depth); ++r)
            CHECK(col.color_at(depth, r) == 0);
    for (int depth = 2; depth <= 9; ++depth) {
        const int e = depth - 2 + 1;
        for (std::uint64_t r = 0; r < t.level_size(depth); ++r)
            CHECK(col.color_at(depth, r) ==
                  col.edge_color(e, t.ancestor_rank(depth, r, e)));
    }
}

TEST_CASE("edge color access is range-checked") {
    const Tree t(3, 3, 5);
    const LiftedColoring col(t, 2, Rational(3, 2));
    CHECK(col.edge_levels() == 5);
    CHECK_THROWS_AS(col.edge_color(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(col.edge_color(6, 0), std::invalid_argument);
}

TEST_CASE("edge csv lists every materialized edge") {
    const Tree t(3, 3, 3);
    const LiftedColoring col(t, 2, Rational(3, 2));
    std::ostringstream out;
    col.write_edge_csv(out);
    const std::string text = out.str();
    CHECK(text.find("parent,child,color") != std::string::npos);
    std::istringstream in(text);
    std::string line;
    std::size_t rows = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        ++rows;
    }
    // edges at child depths 1..3 of the arity-3 truncation: 3 + 6 + 12
    CHECK(rows == 21);
}

TEST_CASE("construction is deterministic") {
    const Tree t(3, 3, 10);
    const LiftedColoring a(t, 4, Rational(3, 2));
    const LiftedColoring b(t, 4, Rational(3, 2));
    REQUIRE(a.palette_size() == b.palette_size());
    for (int e = 1; e <= a.edge_levels(); ++e)
        for (std::uint64_t r = 0; r < t.level_size(e); ++r)
            REQUIRE(a.edge_color(e, r) == b.edge_color(e, r));
}

TEST_CASE("band coloring validates parameters") {
    const Tree t(3, 3, 10);
    CHECK_THROWS_AS(LiftedColoring(t, 3, Rational(3, 2)),
                    std::invalid_argument); // odd d
    CHECK_THROWS_AS(LiftedColoring(t, 4, Rational(1, 1)),
                    std::invalid_argument); // c must exceed 1
    CHECK_THROWS_AS(LiftedColoring(t, 4, Rational(1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(LiftedColoring(Tree(3, 3, 1), 4, Rational(3, 2)),
                    std::invalid_argument); // truncation below first level
    CHECK_THROWS_AS(
        LiftedColoring(t, 4, Rational(1'000'000'000, 1)),
        edc::TooLargeError); // cap overflows any reasonable palette
}
