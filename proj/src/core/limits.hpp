#pragma once

#include <cstdint>

namespace edc {

// Size limits for operations that materialize or scan large objects.
// Every limit can be overridden by the caller; the defaults keep accidental
// exponential blow-ups from taking the process down.
struct Limits {
    // Max vertex count for materialized graphs (tree truncations, powers).
    std::int64_t graph_vertices = 2'000'000;
    // Max vertex count for all-pairs distance computations.
    std::int64_t distance_vertices = 20'000;
    // Max number of stored color entries for implicit tree colorings
    // (anchor colors for the block construction, edge colors for the
    // interval construction).
    std::int64_t color_entries = 600'000'000;
    // Max estimated scan work (color-run comparisons and greedy marking
    // steps) for full verification passes and coloring construction;
    // larger verification jobs must use sampled mode.
    std::int64_t scan_work = 20'000'000'000;
};

} // namespace edc
