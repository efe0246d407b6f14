#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "core/coloring.hpp"
#include "core/limits.hpp"

namespace edc {

// Monte Carlo profile of the walk energy on the complete (q-1)-ary tree of
// depth d (the subtree of the full truncation spanned by branch indices
// < q-1; ranks coincide, so a coloring of the full tree restricts to it
// directly).
//
// For a fixed color c, a walk v_0 (root), v_1, ..., each step a uniformly
// random child, and A_k = { depth(u) : u in subtree(v_k), color(u) = c }:
// the level-conflict graph G_k has vertex set A_k restricted to even depths
// in (d/2, d], with distinct i, j adjacent iff (i + j - d)/2 < k, and
//   E_k = sum over i in V(G_k) of (q-1)^deg(i).
// The profile reports, per k in [0, d/2], the sample mean and standard
// error of E_k, plus the mean and standard error of the per-walk difference
// E_k - E_{k+1} (a proper exact-distance-d coloring makes that difference
// nonnegative in expectation).
struct EnergyProfile {
    int q = 0;
    int d = 0;
    std::uint32_t color = 0;
    std::uint64_t class_size = 0; // vertices of that color in the subtree
    bool empty_class = false;     // class_size == 0: all energies are zero
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<double> mean;     // index k = 0..d/2
    std::vector<double> sem;      // standard error of mean[k]
    std::vector<double> diff_mean; // index k = 0..d/2-1: E_k - E_{k+1}
    std::vector<double> diff_sem;

    void write_csv(std::ostream& out) const;
};

// Most frequent color over the (q-1)-ary depth-d subtree under `col`
// (smallest color on ties).  Requires col.tree().depth_cap() >= d.
std::uint32_t most_frequent_color(const TreeColoring& col, int d);

// Runs `samples` seeded walks and aggregates the energies.  E_0 depends
// only on the root, so it is identical across seeds.  Requires even
// d >= 2 and col.tree().depth_cap() >= d; the subtree must be small enough
// to scan (its vertex count is checked against lim.scan_work).
EnergyProfile energy_profile(const TreeColoring& col, int d,
                             std::uint32_t color, std::uint64_t samples,
                             std::uint64_t seed, const Limits& lim = {});

} // namespace edc
