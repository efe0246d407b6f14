#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "core/coloring.hpp"
#include "core/graph.hpp"
#include "core/limits.hpp"

namespace edc {

// One conflicting pair: x and y share `color` and are at the recorded
// distance (-1 when the check ran over an explicit graph's edges, where the
// distance band is not known).
struct Violation {
    std::string x;
    std::string y;
    int distance = 0;
    std::uint32_t color = 0;
};

struct VerifyReport {
    static constexpr std::size_t kMaxExamples = 100;

    bool full = true; // exhaustive enumeration vs random sampling
    int d = 0;
    int cap = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t violations = 0;
    std::uint64_t samples = 0; // sampled mode: pairs requested
    std::uint64_t seed = 0;    // sampled mode only
    std::vector<Violation> examples;

    bool ok() const { return violations == 0; }
    void write_csv(std::ostream& out) const;
};

// Exhaustively checks that `col` gives distinct colors to every unordered
// pair of tree vertices at distance in [d, cap].  Each qualifying pair is
// counted exactly once in pairs_checked.  The scan walks, for every vertex x
// and every split of the distance at an ancestor of x, the contiguous rank
// ranges of candidate partners, advancing one color-constant run at a time
// (see TreeColoring::anchor_depth).  Throws TooLargeError when the estimated
// scan work exceeds lim.scan_work.
VerifyReport verify_tree(const TreeColoring& col, int d, int cap,
                         const Limits& lim = {});

// Randomized spot-check of the same property: each sample draws a vertex, a
// distance j in [d, cap], and a valid split, then walks down a uniformly
// random branch avoiding the return path, so the sampled partner is at
// distance exactly j.  Draws that admit no valid split are re-drawn up to 64
// times and skipped after that, so vertices near the root contribute
// slightly fewer pairs.
VerifyReport verify_tree_sampled(const TreeColoring& col, int d, int cap,
                                 std::uint64_t samples, std::uint64_t seed);

// Checks a per-vertex color vector against an explicit graph: endpoints of
// every edge must differ.  colors must have exactly g.n entries, indexed
// like g's vertices.
VerifyReport verify_on_graph(const std::vector<std::uint32_t>& colors,
                             const FiniteGraph& g);

} // namespace edc
