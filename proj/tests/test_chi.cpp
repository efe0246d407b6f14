#include <algorithm>
#include <set>
#include <vector>

#include "core/chi.hpp"
#include "core/graph.hpp"
#include "core/tree.hpp"
#include "core/verify.hpp"
#include "doctest.h"

using edc::ChiBudget;
using edc::ChiResult;
using edc::FiniteGraph;

namespace {

FiniteGraph make(std::int64_t n,
                 std::vector<std::pair<std::int32_t, std::int32_t>> edges) {
    FiniteGraph g;
    g.n = n;
    for (std::int64_t i = 0; i < n; ++i)
        g.labels.push_back("v" + std::to_string(i));
    g.edges = std::move(edges);
    g.canonicalize();
    return g;
}

FiniteGraph cycle(std::int32_t n) {
    std::vector<std::pair<std::int32_t, std::int32_t>> e;
    for (std::int32_t i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return make(n, std::move(e));
}

FiniteGraph petersen() {
    std::vector<std::pair<std::int32_t, std::int32_t>> e;
    for (std::int32_t i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);         // outer cycle
        e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        e.emplace_back(i, 5 + i);               // spokes
    }
    return make(10, std::move(e));
}

void check_result(const FiniteGraph& g, const ChiResult& r) {
    REQUIRE(r.coloring.size() == static_cast<std::size_t>(g.n));
    CHECK(edc::verify_on_graph(r.coloring, g).violations == 0);
    std::set<std::uint32_t> used(r.coloring.begin(), r.coloring.end());
    CHECK(used.size() == static_cast<std::size_t>(r.chi));
    CHECK(*std::max_element(r.coloring.begin(), r.coloring.end()) ==
          static_cast<std::uint32_t>(r.chi - 1));
}

} // namespace

TEST_CASE("chromatic numbers of reference graphs") {
    const FiniteGraph k4 =
        make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    ChiResult r = edc::chi_exact(k4);
    CHECK(r.chi == 4);
    CHECK(r.clique_lb == 4);
    CHECK_FALSE(r.timed_out);
    check_result(k4, r);

    r = edc::chi_exact(cycle(5));
    CHECK(r.chi == 3);
    check_result(cycle(5), r);

    r = edc::chi_exact(cycle(6));
    CHECK(r.chi == 2);
    check_result(cycle(6), r);

    const FiniteGraph empty5 = make(5, {});
    r = edc::chi_exact(empty5);
    CHECK(r.chi == 1);
    check_result(empty5, r);

    const FiniteGraph one = make(1, {});
    CHECK(edc::chi_exact(one).chi == 1);

    const FiniteGraph p = petersen();
    r = edc::chi_exact(p);
    CHECK(r.chi == 3);
    CHECK(r.clique_lb == 2); // triangle-free
    check_result(p, r);
}

TEST_CASE("the exact 2-power of the binary depth-2 truncation") {
    const edc::Tree t(3, 2, 2);
    const FiniteGraph g = edc::build_tree_graph(t);
    const FiniteGraph p2 = edc::exact_power(g, 2);
    CHECK(p2.n == 7);
    CHECK(p2.edge_count() == 7);
    const ChiResult r = edc::chi_exact(p2);
    CHECK(r.chi == 3);
    check_result(p2, r);
}

TEST_CASE("relabeling does not change the chromatic number") {
    // same abstract graph as C5, listed in a scrambled vertex order
    const FiniteGraph a = cycle(5);
    const FiniteGraph b =
        make(5, {{2, 4}, {4, 1}, {1, 3}, {3, 0}, {0, 2}});
    CHECK(edc::chi_exact(a).chi == edc::chi_exact(b).chi);
}

TEST_CASE("exhausted budgets still return valid bounds") {
    ChiBudget tiny;
    tiny.max_nodes = 1;
    const FiniteGraph p = petersen();
    const ChiResult r = edc::chi_exact(p, tiny);
    CHECK(r.timed_out);
    CHECK(r.chi == r.dsatur_ub);
    CHECK(r.clique_lb <= 3);
    CHECK(r.chi >= 3); // a proper coloring can't beat the true value
    check_result(p, r);
}

TEST_CASE("dsatur alone is proper") {
    const FiniteGraph p = petersen();
    const std::vector<std::uint32_t> colors = edc::dsatur(p);
    CHECK(edc::verify_on_graph(colors, p).violations == 0);
}

TEST_CASE("greedy cliques are cliques") {
    for (const FiniteGraph& g : {petersen(), cycle(6),
                                 make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2},
                                          {1, 3}, {2, 3}})}) {
        const std::vector<std::int32_t> c = edc::greedy_clique(g);
        CHECK(!c.empty());
        const auto adj = g.adjacency();
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                CHECK(std::find(adj[static_cast<std::size_t>(c[i])].begin(),
                                adj[static_cast<std::size_t>(c[i])].end(),
                                c[j]) !=
                      adj[static_cast<std::size_t>(c[i])].end());
    }
}

TEST_CASE("solver is deterministic") {
    const FiniteGraph p = petersen();
    const ChiResult a = edc::chi_exact(p);
    const ChiResult b = edc::chi_exact(p);
    CHECK(a.chi == b.chi);
    CHECK(a.nodes == b.nodes);
    CHECK(a.coloring == b.coloring);
    CHECK(a.clique == b.clique);
}
