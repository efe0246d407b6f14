#include "core/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "core/errors.hpp"

namespace edc {

std::vector<std::vector<std::int32_t>> FiniteGraph::adjacency() const {
    std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : adj)
        std::sort(nb.begin(), nb.end());
    return adj;
}

void FiniteGraph::canonicalize() {
    for (auto& [u, v] : edges)
        if (u > v)
            std::swap(u, v);
    if (tree_edge.empty()) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return;
    }
    if (tree_edge.size() != edges.size())
        throw std::invalid_argument("tree-edge flags out of sync with edge list");
    std::vector<std::pair<std::pair<std::int32_t, std::int32_t>, bool>> tagged;
    tagged.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        tagged.emplace_back(edges[i], tree_edge[i]);
    std::sort(tagged.begin(), tagged.end());
    tagged.erase(std::unique(tagged.begin(), tagged.end()), tagged.end());
    edges.clear();
    tree_edge.clear();
    for (const auto& [e, flag] : tagged) {
        edges.push_back(e);
        tree_edge.push_back(flag);
    }
}

FiniteGraph build_tree_graph(const Tree& t, const Limits& lim) {
    std::uint64_t count = t.vertex_count();
    if (count > static_cast<std::uint64_t>(lim.graph_vertices))
        throw TooLargeError("tree truncation has " + std::to_string(count) + " vertices; limit is " +
                            std::to_string(lim.graph_vertices));
    FiniteGraph g;
    g.n = static_cast<std::int64_t>(count);
    g.labels.reserve(count);
    g.parent.assign(count, -1);
    g.family = std::string(t.root_arity() == t.q() ? "tq" : "tqd") + " q=" + std::to_string(t.q()) +
               " depth=" + std::to_string(t.depth_cap());
    for (int depth = 0; depth <= t.depth_cap(); ++depth) {
        for (std::uint64_t rank = 0; rank < t.level_size(depth); ++rank) {
            Address a = t.address_at(depth, rank);
            g.labels.push_back(a.str());
            if (depth > 0) {
                std::int32_t self = static_cast<std::int32_t>(t.bfs_index(a));
                std::int32_t up = static_cast<std::int32_t>(
                    t.level_offset(depth - 1) + t.ancestor_rank(depth, rank, depth - 1));
                g.parent[static_cast<std::size_t>(self)] = up;
                g.edges.emplace_back(up, self);
            }
        }
    }
    g.tree_edge.assign(g.edges.size(), true);
    g.canonicalize();
    return g;
}

FiniteGraph build_comb_graph(int d, const Limits& lim) {
    if (d < 1)
        throw std::invalid_argument("comb depth must be at least 1");
    std::int64_t count = static_cast<std::int64_t>(d + 1) * (d + 2) / 2;
    if (count > lim.graph_vertices)
        throw TooLargeError("comb graph has " + std::to_string(count) + " vertices; limit is " +
                            std::to_string(lim.graph_vertices));
    FiniteGraph g;
    g.n = count;
    g.labels.reserve(static_cast<std::size_t>(count));
    g.parent.assign(static_cast<std::size_t>(count), -1);
    g.family = "p3 depth=" + std::to_string(d);
    for (int i = 0; i <= d; ++i) {
        g.labels.push_back("v" + std::to_string(i));
        if (i > 0) {
            g.parent[static_cast<std::size_t>(i)] = i - 1;
            g.edges.emplace_back(i - 1, i);
        }
    }
    // Pendant path on i edges ending at v_i: v_i - p1 - p2 - ... - p_i.
    std::int32_t next = d + 1;
    for (int i = 1; i <= d; ++i) {
        std::int32_t up = i;
        for (int j = 1; j <= i; ++j) {
            g.labels.push_back("v" + std::to_string(i) + ".p" + std::to_string(j));
            g.parent[static_cast<std::size_t>(next)] = up;
            g.edges.emplace_back(up, next);
            up = next;
            ++next;
        }
    }
    g.tree_edge.assign(g.edges.size(), true);
    g.canonicalize();
    return g;
}

FiniteGraph sibling_closure(const FiniteGraph& g) {
    if (g.parent.empty() || static_cast<std::int64_t>(g.parent.size()) != g.n)
        throw std::invalid_argument("sibling closure needs a rooted tree with parent structure");
    FiniteGraph out = g;
    if (out.tree_edge.size() != out.edges.size())
        out.tree_edge.assign(out.edges.size(), true);
    std::vector<std::vector<std::int32_t>> kids(static_cast<std::size_t>(g.n));
    for (std::int32_t v = 0; v < g.n; ++v) {
        std::int32_t p = g.parent[static_cast<std::size_t>(v)];
        if (p >= 0)
            kids[static_cast<std::size_t>(p)].push_back(v);
    }
    for (const auto& group : kids)
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                out.edges.emplace_back(group[i], group[j]);
                out.tree_edge.push_back(false);
            }
    if (g.family.rfind("tqd q=3", 0) == 0)
        out.family = "u3" + g.family.substr(7);
    else if (g.family.rfind("p3", 0) == 0)
        out.family = "q3" + g.family.substr(2);
    else
        out.family = "sibling-closure of " + g.family;
    out.canonicalize();
    return out;
}

std::vector<std::int32_t> bfs_distances(const std::vector<std::vector<std::int32_t>>& adj, std::int32_t source) {
    std::vector<std::int32_t> dist(adj.size(), -1);
    std::deque<std::int32_t> queue;
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        std::int32_t u = queue.front();
        queue.pop_front();
        for (std::int32_t v : adj[static_cast<std::size_t>(u)])
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

std::vector<std::int32_t> bfs_distances(const FiniteGraph& g, std::int32_t source) {
    return bfs_distances(g.adjacency(), source);
}

DistanceMatrix all_pairs_distances(const FiniteGraph& g, const Limits& lim) {
    if (g.n > lim.distance_vertices)
        throw TooLargeError("all-pairs distances on " + std::to_string(g.n) + " vertices; limit is " +
                            std::to_string(lim.distance_vertices));
    DistanceMatrix m;
    m.n = g.n;
    m.dist.resize(static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n));
    auto adj = g.adjacency();
    for (std::int32_t s = 0; s < g.n; ++s) {
        auto row = bfs_distances(adj, s);
        std::copy(row.begin(), row.end(), m.dist.begin() + static_cast<std::int64_t>(s) * g.n);
    }
    return m;
}

FiniteGraph band_power(const FiniteGraph& g, int d, int cap, const Limits& lim) {
    if (d < 1 || cap < d)
        throw std::invalid_argument("band power needs 1 <= d <= cap");
    if (g.n > lim.distance_vertices)
        throw TooLargeError("band power on " + std::to_string(g.n) + " vertices; limit is " +
                            std::to_string(lim.distance_vertices));
    FiniteGraph out;
    out.n = g.n;
    out.labels = g.labels;
    if (d == cap)
        out.family = g.family + " | exact-power d=" + std::to_string(d);
    else
        out.family = g.family + " | band-power d=" + std::to_string(d) + " cap=" + std::to_string(cap);
    auto adj = g.adjacency();
    for (std::int32_t s = 0; s < g.n; ++s) {
        auto row = bfs_distances(adj, s);
        for (std::int32_t v = s + 1; v < g.n; ++v)
            if (row[static_cast<std::size_t>(v)] >= d && row[static_cast<std::size_t>(v)] <= cap)
                out.edges.emplace_back(s, v);
    }
    out.canonicalize();
    return out;
}

FiniteGraph exact_power(const FiniteGraph& g, int d, const Limits& lim) {
    return band_power(g, d, d, lim);
}

std::string to_dimacs(const FiniteGraph& g) {
    std::ostringstream out;
    out << "c family: " << g.family << "\n";
    for (std::int64_t i = 0; i < g.n; ++i)
        out << "c label " << (i + 1) << " " << g.labels[static_cast<std::size_t>(i)] << "\n";
    out << "p edge " << g.n << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges)
        out << "e " << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

FiniteGraph from_dimacs(const std::string& text) {
    FiniteGraph g;
    g.n = -1;
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<std::int64_t, std::string>> labels;
    std::int64_t declared_edges = -1;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "c") {
            std::string word;
            ls >> word;
            if (word == "family:") {
                std::string rest;
                std::getline(ls, rest);
                if (!rest.empty() && rest.front() == ' ')
                    rest.erase(rest.begin());
                g.family = rest;
            } else if (word == "label") {
                std::int64_t id = 0;
                std::string label;
                if (ls >> id >> label)
                    labels.emplace_back(id, label);
            }
        } else if (kind == "p") {
            std::string fmt;
            std::int64_t n = 0, m = 0;
            if (!(ls >> fmt >> n >> m) || fmt != "edge")
                throw std::invalid_argument("malformed dimacs problem line: " + line);
            g.n = n;
            declared_edges = m;
        } else if (kind == "e") {
            std::int64_t u = 0, v = 0;
            if (!(ls >> u >> v))
                throw std::invalid_argument("malformed dimacs edge line: " + line);
            if (g.n < 0)
                throw std::invalid_argument("dimacs edge before problem line");
            if (u < 1 || u > g.n || v < 1 || v > g.n || u == v)
                throw std::invalid_argument("dimacs edge endpoint out of range: " + line);
            g.edges.emplace_back(static_cast<std::int32_t>(u - 1), static_cast<std::int32_t>(v - 1));
        }
    }
    if (g.n < 0)
        throw std::invalid_argument("dimacs input has no problem line");
    if (declared_edges >= 0 && declared_edges != g.edge_count())
        throw std::invalid_argument("dimacs edge count mismatch: declared " + std::to_string(declared_edges) +
                                    ", found " + std::to_string(g.edge_count()));
    g.labels.assign(static_cast<std::size_t>(g.n), "");
    for (const auto& [id, label] : labels)
        if (id >= 1 && id <= g.n)
            g.labels[static_cast<std::size_t>(id - 1)] = label;
    for (std::int64_t i = 0; i < g.n; ++i)
        if (g.labels[static_cast<std::size_t>(i)].empty())
            g.labels[static_cast<std::size_t>(i)] = std::to_string(i + 1);
    g.canonicalize();
    return g;
}

std::string to_edge_csv(const FiniteGraph& g) {
    std::ostringstream out;
    out << "# family: " << g.family << "\n";
    out << "# vertices: " << g.n << "\n";
    out << "# edges: " << g.edge_count() << "\n";
    out << "source,target\n";
    for (const auto& [u, v] : g.edges)
        out << g.labels[static_cast<std::size_t>(u)] << "," << g.labels[static_cast<std::size_t>(v)] << "\n";
    return out.str();
}

} // namespace edc
