#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace edc {

// One closed-form bound on a chromatic number of a distance graph.
//   kind:   "lower" or "upper".
//   family: which base graph the bound constrains --
//           "tq"  full q-regular truncation (root has q children),
//           "tqd" complete (q-1)-ary tree of depth d,
//           "p3"  the comb (spine plus pendant paths, q=3),
//           "u3"  tqd plus sibling edges (q=3),
//           "q3"  the comb plus sibling edges (q=3).
//   exact:  the value is an exact integer/rational, not a real estimate.
struct BoundRow {
    std::string name;
    std::string kind;
    std::string family;
    double value = 0.0;
    bool exact = false;
    std::string formula;
};

// All closed-form bounds on chi(., d) for exact distance d.  Entries are
// parity-specific: even d gets the clique/level-set/walk-energy/comb lower
// bounds and the block-greedy/layered upper bounds; odd d gets the
// depth-parity value 2 for the tree plus the shifted-distance lower bounds
// and the chordal upper bound for the sibling-closed families (q=3).
std::vector<BoundRow> bounds_exact(int q, int d);

// Bounds on chi(tq, [d, floor(c*d)]) for the band graph, even d, c > 1:
// the clique lower bound, the level-product upper bound, and the greedy
// edge-coloring upper bound.
std::vector<BoundRow> bounds_interval(int q, int d, const Rational& c);

// Cross-checks every lower bound against every comparable upper bound
// (same family, or a lower bound for an induced subfamily of "tq" against a
// "tq" upper bound).  Returns one message per failed comparison.
std::vector<std::string> check_bound_consistency(
    const std::vector<BoundRow>& rows);

// Emits the rows as CSV after "# key: value" header lines.
void write_bounds_csv(
    std::ostream& out, const std::vector<BoundRow>& rows,
    const std::vector<std::pair<std::string, std::string>>& header);

} // namespace edc
