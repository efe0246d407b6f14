#include "core/chi.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"

namespace edc {

namespace {

// Fixed-size bitset over vertex/color indices.
class Bits {
public:
    explicit Bits(int n = 0) : words_((n + 63) / 64, 0) {}
    bool get(int i) const {
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        words_[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63);
    }
    void clear(int i) {
        words_[static_cast<std::size_t>(i) >> 6] &= ~(1ULL << (i & 63));
    }

private:
    std::vector<std::uint64_t> words_;
};

std::vector<Bits> adjacency_bits(const FiniteGraph& g) {
    std::vector<Bits> adj(static_cast<std::size_t>(g.n),
                          Bits(static_cast<int>(g.n)));
    for (const auto& e : g.edges) {
        adj[static_cast<std::size_t>(e.first)].set(e.second);
        adj[static_cast<std::size_t>(e.second)].set(e.first);
    }
    return adj;
}

void check_size(const FiniteGraph& g) {
    if (g.n > 20000)
        throw TooLargeError("chromatic-number routines are limited to 20000 "
                            "vertices; graph has " +
                            std::to_string(g.n));
}

} // namespace

std::vector<std::int32_t> greedy_clique(const FiniteGraph& g) {
    check_size(g);
    const int n = static_cast<int>(g.n);
    if (n == 0)
        return {};
    const auto adjl = g.adjacency();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        deg[static_cast<std::size_t>(v)] =
            static_cast<int>(adjl[static_cast<std::size_t>(v)].size());

    // Degeneracy order: repeatedly peel the minimum-degree vertex.
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[static_cast<std::size_t>(v)] &&
                (best < 0 || deg[static_cast<std::size_t>(v)] <
                                 deg[static_cast<std::size_t>(best)]))
                best = v;
        removed[static_cast<std::size_t>(best)] = true;
        order.push_back(best);
        for (std::int32_t u : adjl[static_cast<std::size_t>(best)])
            if (!removed[static_cast<std::size_t>(u)])
                --deg[static_cast<std::size_t>(u)];
    }

    // Grow a clique along the reverse order.
    const auto adj = adjacency_bits(g);
    std::vector<std::int32_t> clique;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        bool ok = true;
        for (std::int32_t u : clique)
            if (!adj[static_cast<std::size_t>(v)].get(u)) {
                ok = false;
                break;
            }
        if (ok)
            clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

std::vector<std::uint32_t> dsatur(const FiniteGraph& g) {
    check_size(g);
    const int n = static_cast<int>(g.n);
    std::vector<std::uint32_t> color(static_cast<std::size_t>(n), 0);
    if (n == 0)
        return color;
    const auto adjl = g.adjacency();
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    std::vector<int> sat(static_cast<std::size_t>(n), 0);
    // neighbor_colors[v] marks colors seen among v's colored neighbors.
    std::vector<Bits> neighbor_colors(static_cast<std::size_t>(n),
                                      Bits(n + 1));

    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (done[static_cast<std::size_t>(u)])
                continue;
            if (v < 0)
                v = u;
            else {
                const int su = sat[static_cast<std::size_t>(u)];
                const int sv = sat[static_cast<std::size_t>(v)];
                const auto du = adjl[static_cast<std::size_t>(u)].size();
                const auto dv = adjl[static_cast<std::size_t>(v)].size();
                if (su > sv || (su == sv && du > dv))
                    v = u;
            }
        }
        std::uint32_t c = 0;
        while (neighbor_colors[static_cast<std::size_t>(v)].get(
            static_cast<int>(c)))
            ++c;
        color[static_cast<std::size_t>(v)] = c;
        done[static_cast<std::size_t>(v)] = true;
        for (std::int32_t u : adjl[static_cast<std::size_t>(v)]) {
            if (done[static_cast<std::size_t>(u)])
                continue;
            if (!neighbor_colors[static_cast<std::size_t>(u)].get(
                    static_cast<int>(c))) {
                neighbor_colors[static_cast<std::size_t>(u)].set(
                    static_cast<int>(c));
                ++sat[static_cast<std::size_t>(u)];
            }
        }
    }
    return color;
}

namespace {

struct BnB {
    int n;
    const std::vector<std::vector<std::int32_t>>& adjl;
    std::vector<int> color;          // -1 = uncolored
    std::vector<std::vector<int>>
        forbid_count;                // [v][c]: colored neighbors using c
    std::vector<int> sat;            // distinct neighbor colors
    int colored = 0;
    int max_used = -1;               // highest color in use on the stack
    int best;                        // best complete coloring size so far
    std::vector<std::uint32_t> best_coloring;
    int target_lb;
    std::uint64_t nodes = 0;
    bool stop = false;
    bool timed_out = false;
    const ChiBudget& budget;
    std::chrono::steady_clock::time_point t0;

    BnB(const FiniteGraph& g,
        const std::vector<std::vector<std::int32_t>>& a, int ub, int lb,
        const ChiBudget& b)
        : n(static_cast<int>(g.n)),
          adjl(a),
          color(static_cast<std::size_t>(g.n), -1),
          forbid_count(static_cast<std::size_t>(g.n),
                       std::vector<int>(static_cast<std::size_t>(ub + 1), 0)),
          sat(static_cast<std::size_t>(g.n), 0),
          best(ub),
          target_lb(lb),
          budget(b),
          t0(std::chrono::steady_clock::now()) {}

    void assign(int v, int c) {
        color[static_cast<std::size_t>(v)] = c;
        ++colored;
        for (std::int32_t u : adjl[static_cast<std::size_t>(v)]) {
            if (color[static_cast<std::size_t>(u)] >= 0)
                continue;
            if (forbid_count[static_cast<std::size_t>(u)]
                            [static_cast<std::size_t>(c)]++ == 0)
                ++sat[static_cast<std::size_t>(u)];
        }
    }

    void unassign(int v, int c) {
        color[static_cast<std::size_t>(v)] = -1;
        --colored;
        for (std::int32_t u : adjl[static_cast<std::size_t>(v)]) {
            if (color[static_cast<std::size_t>(u)] >= 0)
                continue;
            if (--forbid_count[static_cast<std::size_t>(u)]
                              [static_cast<std::size_t>(c)] == 0)
                --sat[static_cast<std::size_t>(u)];
        }
    }

    bool out_of_budget() {
        if (nodes >= budget.max_nodes)
            return true;
        if ((nodes & 4095) == 0) {
            const double el =
                std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
            if (el > budget.max_seconds)
                return true;
        }
        return false;
    }

    int select() const {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (color[static_cast<std::size_t>(u)] >= 0)
                continue;
            if (v < 0)
                v = u;
            else {
                const int su = sat[static_cast<std::size_t>(u)];
                const int sv = sat[static_cast<std::size_t>(v)];
                const auto du = adjl[static_cast<std::size_t>(u)].size();
                const auto dv = adjl[static_cast<std::size_t>(v)].size();
                if (su > sv || (su == sv && du > dv))
                    v = u;
            }
        }
        return v;
    }

    void record_best() {
        best = max_used + 1;
        best_coloring.assign(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            best_coloring[static_cast<std::size_t>(v)] =
                static_cast<std::uint32_t>(color[static_cast<std::size_t>(v)]);
        if (best <= target_lb)
            stop = true; // matched the clique bound: provably optimal
    }

    void dfs() {
        if (stop)
            return;
        if (colored == n) {
            record_best();
            return;
        }
        const int v = select();
        // Colors to try: existing ones plus at most one fresh color, and
        // only strictly below best-1 total colors.
        const int limit = std::min(max_used + 1, best - 2);
        for (int c = 0; c <= limit; ++c) {
            if (forbid_count[static_cast<std::size_t>(v)]
                            [static_cast<std::size_t>(c)] > 0)
                continue;
            ++nodes;
            if (out_of_budget()) {
                stop = true;
                timed_out = true;
                return;
            }
            const int prev_max = max_used;
            max_used = std::max(max_used, c);
            assign(v, c);
            dfs();
            unassign(v, c);
            max_used = prev_max;
            if (stop)
                return;
        }
    }
};

} // namespace

ChiResult chi_exact(const FiniteGraph& g, const ChiBudget& budget) {
    check_size(g);
    ChiResult res;
    const int n = static_cast<int>(g.n);
    if (n == 0) {
        res.chi = 0;
        return res;
    }
    res.clique = greedy_clique(g);
    res.clique_lb = static_cast<int>(res.clique.size());
    const auto ds = dsatur(g);
    std::uint32_t used = 0;
    for (std::uint32_t c : ds)
        used = std::max(used, c + 1);
    res.dsatur_ub = static_cast<int>(used);
    res.coloring = ds;
    res.chi = res.dsatur_ub;
    if (res.clique_lb == res.dsatur_ub)
        return res; // bounds already meet

    const auto adjl = g.adjacency();
    BnB bnb(g, adjl, res.dsatur_ub, res.clique_lb, budget);
    // Symmetry breaking: the clique's vertices need pairwise-distinct
    // colors, so fix them up front.
    for (std::size_t i = 0; i < res.clique.size(); ++i) {
        bnb.assign(res.clique[i], static_cast<int>(i));
        bnb.max_used = static_cast<int>(i);
    }
    bnb.dfs();
    res.nodes = bnb.nodes;
    res.timed_out = bnb.timed_out;
    if (!bnb.best_coloring.empty()) {
        res.chi = bnb.best;
        res.coloring = bnb.best_coloring;
    }
    return res;
}

} // namespace edc
