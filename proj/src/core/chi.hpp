#pragma once

#include <cstdint>
#include <vector>

#include "core/graph.hpp"

namespace edc {

// Node/time budget for the exact solver.  When exceeded, the search stops
// and the result carries bounds only (timed_out = true).
struct ChiBudget {
    std::uint64_t max_nodes = 10'000'000;
    double max_seconds = 60.0;
};

struct ChiResult {
    // Exact chromatic number when !timed_out; otherwise the best proper
    // upper bound found (clique_lb remains a valid lower bound).
    int chi = 0;
    int clique_lb = 0;
    int dsatur_ub = 0;
    std::vector<std::uint32_t> coloring; // proper, uses exactly chi colors
    std::vector<std::int32_t> clique;    // the greedy clique behind clique_lb
    std::uint64_t nodes = 0;
    bool timed_out = false;
};

// Maximal clique grown greedily along the reverse of a degeneracy order
// (repeatedly peel the minimum-degree vertex, smallest index on ties).
// Deterministic; returns at least one vertex on nonempty graphs.
std::vector<std::int32_t> greedy_clique(const FiniteGraph& g);

// DSATUR greedy coloring: repeatedly color the vertex with the most
// distinctly-colored neighbors (ties: larger degree, then smaller index)
// with the smallest free color.  Deterministic; colors are 0-based.
std::vector<std::uint32_t> dsatur(const FiniteGraph& g);

// Exact chromatic number by branch-and-bound between the greedy-clique
// lower bound and the DSATUR upper bound.  Branches on the most saturated
// uncolored vertex; breaks color symmetry by pre-coloring the clique and
// allowing at most one previously-unused color per step.
ChiResult chi_exact(const FiniteGraph& g, const ChiBudget& budget = {});

} // namespace edc
