#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "core/rational.hpp"
#include "core/tree.hpp"

namespace edc {

// A set of tree vertices with all pairwise distances verified to lie in
// [lo, hi].  Construction functions check every pair before returning and
// throw VerifyError on any miss, so a returned witness is always valid.
struct CliqueWitness {
    std::vector<Address> members;
    int lo = 0;
    int hi = 0;
    std::string family;

    void write_csv(std::ostream& out) const;
};

// q vertices of the full q-regular truncation (root arity q) that are
// pairwise at distance exactly d, for even d: one vertex per root branch,
// descending d/2 - 1 further steps along branch 0.  Requires
// depth_cap >= d/2.
CliqueWitness exact_clique_witness(const Tree& tree, int d);

// With t = floor(c*d/2) - floor(d/2): the q*(q-1)^t vertices obtained by
// extending every depth-(t+1) vertex with d/2 - 1 zero branches.  Pairwise
// distances lie in [d, 2*floor(c*d/2)], inside the band [d, floor(c*d)].
// Requires root arity q, even d, c > 1, depth_cap >= floor(c*d/2).
CliqueWitness interval_clique_witness(const Tree& tree, int d,
                                      const Rational& c);

} // namespace edc
