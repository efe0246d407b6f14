#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "core/tree.hpp"
#include "doctest.h"

using edc::FiniteGraph;
using edc::Tree;

namespace {

// Unordered pairs at matrix distance in [lo, hi], canonical order.
std::set<std::pair<std::int32_t, std::int32_t>> pairs_at(
    const edc::DistanceMatrix& m, int lo, int hi) {
    std::set<std::pair<std::int32_t, std::int32_t>> out;
    for (std::int64_t i = 0; i < m.n; ++i)
        for (std::int64_t j = i + 1; j < m.n; ++j)
            if (m.at(i, j) >= lo && m.at(i, j) <= hi)
                out.insert({static_cast<std::int32_t>(i),
                            static_cast<std::int32_t>(j)});
    return out;
}

std::set<std::pair<std::int32_t, std::int32_t>> edge_set(
    const FiniteGraph& g) {
    return {g.edges.begin(), g.edges.end()};
}

} // namespace

TEST_CASE("materialized tree counts") {
    const FiniteGraph g = edc::build_tree_graph(Tree(3, 2, 2));
    CHECK(g.n == 7);
    CHECK(g.edge_count() == 6);
    CHECK(g.labels[0] == "r");
    CHECK(g.parent[0] == -1);
    // every non-root vertex has its parent earlier in breadth-first order
    for (std::int64_t v = 1; v < g.n; ++v)
        CHECK(g.parent[static_cast<std::size_t>(v)] < v);
    CHECK(std::count(g.tree_edge.begin(), g.tree_edge.end(), true) == 6);
}

TEST_CASE("comb family counts") {
    for (int d : {1, 4, 6}) {
        const FiniteGraph g = edc::build_comb_graph(d);
        CHECK(g.n == (d + 1) * (d + 2) / 2);
        CHECK(g.edge_count() == g.n - 1); // a tree
    }
    CHECK(edc::build_comb_graph(4).n == 15);
    CHECK(edc::build_comb_graph(6).n == 28);
}

TEST_CASE("sibling closure adds one edge per 2-child parent") {
    // depth-3 complete binary tree: 7 internal vertices with 2 children
    const FiniteGraph base = edc::build_tree_graph(Tree(3, 2, 3));
    const FiniteGraph u = edc::sibling_closure(base);
    CHECK(u.n == 15);
    CHECK(u.edge_count() == 21); // 14 tree + 7 sibling
    CHECK(std::count(u.tree_edge.begin(), u.tree_edge.end(), true) == 14);

    // comb of length 5: spine vertices v_1..v_4 have two children each
    const FiniteGraph q = edc::sibling_closure(edc::build_comb_graph(5));
    CHECK(q.n == 21);
    CHECK(q.edge_count() == 24); // 20 tree + 4 sibling
}

TEST_CASE("exact power of the depth-2 binary tree, frozen") {
    const FiniteGraph base = edc::build_tree_graph(Tree(3, 2, 2));
    const FiniteGraph p = edc::exact_power(base, 2);
    CHECK(p.n == 7);
    // Enumerated by hand: root against the 4 leaves, the two sibling
    // children, and the sibling-leaf pair in each of the two subtrees.
    CHECK(p.edge_count() == 7);
}

TEST_CASE("powers agree with the distance-matrix oracle") {
    for (int q : {3, 4}) {
        for (int arity : {q, q - 1}) {
            const FiniteGraph g = edc::build_tree_graph(Tree(q, arity, 4));
            const edc::DistanceMatrix m = edc::all_pairs_distances(g);
            for (int d = 1; d <= 4; ++d) {
                const FiniteGraph p = edc::exact_power(g, d);
                CHECK(edge_set(p) == pairs_at(m, d, d));
            }
            const FiniteGraph b = edc::band_power(g, 2, 5);
            CHECK(edge_set(b) == pairs_at(m, 2, 5));
            // a band collapsed to one distance equals the exact power
            CHECK(edge_set(edc::band_power(g, 3, 3)) ==
                  edge_set(edc::exact_power(g, 3)));
        }
    }
}

TEST_CASE("odd powers of trees are bipartite by depth parity") {
    const FiniteGraph g = edc::build_tree_graph(Tree(3, 3, 5));
    for (int d : {3, 5}) {
        const FiniteGraph p = edc::exact_power(g, d);
        for (const auto& [u, v] : p.edges) {
            const int du =
                edc::Address::parse(p.labels[static_cast<std::size_t>(u)])
                    .depth();
            const int dv =
                edc::Address::parse(p.labels[static_cast<std::size_t>(v)])
                    .depth();
            REQUIRE((du + dv) % 2 == 1);
        }
    }
}

TEST_CASE("dimacs round trip") {
    FiniteGraph g = edc::build_tree_graph(Tree(3, 3, 3));
    g = edc::exact_power(g, 2);
    const std::string text = edc::to_dimacs(g);
    const FiniteGraph back = edc::from_dimacs(text);
    CHECK(back.n == g.n);
    CHECK(edge_set(back) == edge_set(g));
    // serialization is stable
    CHECK(edc::to_dimacs(back) == text);
}

TEST_CASE("dimacs reader rejects malformed input") {
    CHECK_THROWS_AS(edc::from_dimacs("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(edc::from_dimacs("p edge 2 1\ne 1 3\n"),
                    std::invalid_argument); // endpoint out of range
    CHECK_THROWS_AS(edc::from_dimacs("p edge -1 0\n"), std::invalid_argument);
}

TEST_CASE("edge csv lists every edge once") {
    const FiniteGraph g = edc::build_tree_graph(Tree(3, 2, 2));
    const std::string csv = edc::to_edge_csv(g);
    CHECK(std::count(csv.begin(), csv.end(), '\n') >= g.edge_count());
}

TEST_CASE("adjacency degrees sum to twice the edge count") {
    const FiniteGraph g =
        edc::sibling_closure(edc::build_tree_graph(Tree(3, 2, 4)));
    const auto adj = g.adjacency();
    std::int64_t total = 0;
    for (const auto& row : adj)
        total += static_cast<std::int64_t>(row.size());
    CHECK(total == 2 * g.edge_count());
}

namespace {

bool is_ancestor(const FiniteGraph& g, std::int64_t anc, std::int64_t v) {
    for (std::int32_t cur = g.parent[static_cast<std::size_t>(v)]; cur >= 0;
         cur = g.parent[static_cast<std::size_t>(cur)])
        if (cur == anc)
            return true;
    return false;
}

} // namespace

TEST_CASE("sibling closure shortens exactly the incomparable pairs by one") {
    // Adding edges between children of a common parent leaves
    // ancestor-descendant distances unchanged (every edge still moves depth
    // by at most one) and shortens every other pair by exactly one (a single
    // lateral step below the meeting vertex).
    for (int d : {3, 5}) {
        std::vector<FiniteGraph> bases;
        bases.push_back(edc::build_tree_graph(Tree(3, 2, d)));
        bases.push_back(edc::build_comb_graph(d));
        for (const FiniteGraph& base : bases) {
            const FiniteGraph closed = edc::sibling_closure(base);
            const edc::DistanceMatrix mt = edc::all_pairs_distances(base);
            const edc::DistanceMatrix mu = edc::all_pairs_distances(closed);
            for (std::int64_t i = 0; i < base.n; ++i)
                for (std::int64_t j = i + 1; j < base.n; ++j) {
                    const bool vertical =
                        is_ancestor(base, i, j) || is_ancestor(base, j, i);
                    if (vertical)
                        REQUIRE(mu.at(i, j) == mt.at(i, j));
                    else
                        REQUIRE(mu.at(i, j) == mt.at(i, j) - 1);
                }
        }
        // Consequence for the depth-d truncation only: a non-root pair at
        // tree distance d cannot be vertical (the descendant would sit
        // below the depth cap), so it lands at distance d-1 in the closure.
        // The comb is excluded: its pendant paths reach depth 2i, so
        // vertical distance-d pairs exist there and keep distance d.
        const FiniteGraph base = edc::build_tree_graph(Tree(3, 2, d));
        const FiniteGraph closed = edc::sibling_closure(base);
        const edc::DistanceMatrix mt = edc::all_pairs_distances(base);
        const edc::DistanceMatrix mu = edc::all_pairs_distances(closed);
        for (std::int64_t i = 1; i < base.n; ++i)
            for (std::int64_t j = i + 1; j < base.n; ++j)
                if (mt.at(i, j) == d)
                    REQUIRE(mu.at(i, j) == d - 1);
    }
}

TEST_CASE("graph size limits are enforced") {
    edc::Limits lim;
    lim.graph_vertices = 10;
    CHECK_THROWS_AS(edc::build_tree_graph(Tree(3, 3, 5), lim),
                    edc::TooLargeError);
    lim = edc::Limits{};
    lim.distance_vertices = 5;
    const FiniteGraph g = edc::build_tree_graph(Tree(3, 3, 3));
    CHECK_THROWS_AS(edc::all_pairs_distances(g, lim), edc::TooLargeError);
    CHECK_THROWS_AS(edc::exact_power(g, 2, lim), edc::TooLargeError);
}
