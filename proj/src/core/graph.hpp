#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/limits.hpp"
#include "core/tree.hpp"

namespace edc {

// A small materialized graph. Edges are stored canonically (u < v, sorted
// ascending) so that exports are byte-stable.
struct FiniteGraph {
    std::int64_t n = 0;
    std::vector<std::string> labels;
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    // Rooted graphs carry the parent of each vertex (-1 for the root);
    // empty for graphs with no distinguished tree structure (powers).
    std::vector<std::int32_t> parent;
    // Aligned with `edges` when the graph is a tree plus extra edges:
    // marks the original tree (spanning) edges. Empty when not applicable.
    std::vector<bool> tree_edge;
    std::string family;

    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges.size()); }
    std::vector<std::vector<std::int32_t>> adjacency() const;
    void canonicalize();
};

struct DistanceMatrix {
    std::int64_t n = 0;
    std::vector<std::int32_t> dist; // row-major n*n, -1 = unreachable
    std::int32_t at(std::int64_t i, std::int64_t j) const { return dist[static_cast<std::size_t>(i * n + j)]; }
};

// Materializes a tree truncation; vertices in breadth-first order, labels are
// address strings.
FiniteGraph build_tree_graph(const Tree& t, const Limits& lim = {});

// The comb family: a spine v_0..v_d plus, for each 1 <= i <= d, a pendant
// path on i edges ending at v_i. Rooted at v_0. (d+1)(d+2)/2 vertices.
FiniteGraph build_comb_graph(int d, const Limits& lim = {});

// Adds an edge between every two children of a common parent; the input tree
// edges stay flagged as spanning-tree edges. Requires a rooted input.
FiniteGraph sibling_closure(const FiniteGraph& g);

std::vector<std::int32_t> bfs_distances(const FiniteGraph& g, std::int32_t source);
std::vector<std::int32_t> bfs_distances(const std::vector<std::vector<std::int32_t>>& adj, std::int32_t source);

DistanceMatrix all_pairs_distances(const FiniteGraph& g, const Limits& lim = {});

// Graph on the same vertices joining pairs at distance in [d, cap].
FiniteGraph band_power(const FiniteGraph& g, int d, int cap, const Limits& lim = {});
// Pairs at distance exactly d.
FiniteGraph exact_power(const FiniteGraph& g, int d, const Limits& lim = {});

std::string to_dimacs(const FiniteGraph& g);
FiniteGraph from_dimacs(const std::string& text);
std::string to_edge_csv(const FiniteGraph& g);

} // namespace edc
