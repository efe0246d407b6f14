/* edc: exact-distance and distance-band colorings of regular trees.
 *
 * C API over the core library.  All functions return a status code
 * (EDC_OK = 0 on success); on failure, edc_last_error() returns a
 * human-readable message for the calling thread's most recent error.
 *
 * Ownership: every edc_* pointer produced by this API is released with the
 * matching edc_*_free function; strings returned through char** out
 * parameters are released with edc_string_free.  Output parameters are
 * written only on EDC_OK.  Handles are not thread-safe; distinct handles
 * may be used from distinct threads.
 */
#ifndef EDC_H
#define EDC_H

#include <stdint.h>

#if defined(_WIN32)
#define EDC_API __declspec(dllexport)
#else
#define EDC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* ---- status codes ---- */
enum {
    EDC_OK = 0,
    EDC_EINVAL = 1,   /* invalid argument / malformed input */
    EDC_ETOOBIG = 2,  /* object or workload exceeds configured limits */
    EDC_EVERIFY = 3,  /* self-verification failed */
    EDC_ENOMEM = 4,   /* allocation failure */
    EDC_EINTERNAL = 5 /* unexpected internal error */
};

typedef struct edc_ctx edc_ctx;
typedef struct edc_graph edc_graph;
typedef struct edc_coloring edc_coloring;
typedef struct edc_report edc_report;
typedef struct edc_chi_result edc_chi_result;

/* Library version, e.g. "0.1.0". Static storage; do not free. */
EDC_API const char* edc_version(void);

/* Message for the calling thread's most recent failed call.  Static
 * thread-local storage; valid until the next failing call on the thread. */
EDC_API const char* edc_last_error(void);

/* Releases a string returned through a char** out parameter. */
EDC_API void edc_string_free(char* s);

/* ---- context: size/work limits ---- */
EDC_API edc_ctx* edc_ctx_new(void);
EDC_API void edc_ctx_free(edc_ctx* ctx);

/* Limits, by name:
 *   "graph_vertices"    max vertices for explicit graph construction
 *   "distance_vertices" max vertices for all-pairs/power computations
 *   "color_entries"     max stored color entries per coloring
 *   "scan_work"         max elementary steps for greedy builds and full
 *                        verification
 */
EDC_API int edc_ctx_set_limit(edc_ctx* ctx, const char* name, int64_t value);

/* ---- explicit graphs ---- */

/* Truncated regular tree: every internal vertex has q-1 children; the root
 * has root_arity children (root_arity must be q or q-1). */
EDC_API int edc_graph_tree(edc_ctx* ctx, int q, int root_arity, int depth,
                           edc_graph** out);

/* Comb: spine v_0..v_d with a pendant path of i edges below v_i. */
EDC_API int edc_graph_comb(edc_ctx* ctx, int d, edc_graph** out);

/* Adds an edge between every two vertices sharing a parent; original tree
 * edges keep a spanning-tree flag in exports.  base must be a rooted graph
 * produced by edc_graph_tree or edc_graph_comb. */
EDC_API int edc_graph_sibling_closure(edc_ctx* ctx, const edc_graph* base,
                                      edc_graph** out);

/* Distance power: vertices of base, edges between pairs with
 * d <= dist <= cap (cap == d gives the exact power). */
EDC_API int edc_graph_power(edc_ctx* ctx, const edc_graph* base, int d,
                            int cap, edc_graph** out);

EDC_API int edc_graph_counts(const edc_graph* g, int64_t* vertices,
                             int64_t* edges);
EDC_API int edc_graph_to_dimacs(const edc_graph* g, char** out);
EDC_API int edc_graph_from_dimacs(edc_ctx* ctx, const char* text,
                                  edc_graph** out);
EDC_API int edc_graph_to_edge_csv(const edc_graph* g, char** out);
EDC_API void edc_graph_free(edc_graph* g);

/* ---- tree colorings (positional; the tree itself stays implicit) ---- */

/* Block-greedy coloring proper for exact distance d (even d >= 2) on the
 * tree truncation with the given shape.  k is the block length
 * (1 <= k <= d/2); pass k <= 0 to select it automatically. */
EDC_API int edc_color_blocks(edc_ctx* ctx, int q, int root_arity, int depth,
                             int d, int k, edc_coloring** out);

/* The block length edc_color_blocks picks for (q, d) when k <= 0. */
EDC_API int edc_choose_block_length(int q, int d, int* out);

/* Lifted greedy edge coloring proper for the distance band
 * [d, floor(c*d)] (even d >= 2, rational c > 1 as "p" or "p/r"). */
EDC_API int edc_color_interval(edc_ctx* ctx, int q, int root_arity,
                               int depth, int d, const char* c,
                               edc_coloring** out);

/* Depth-parity coloring (2 colors), proper for every odd exact distance. */
EDC_API int edc_color_parity(edc_ctx* ctx, int q, int root_arity, int depth,
                             edc_coloring** out);

EDC_API int edc_coloring_palette(const edc_coloring* col, uint32_t* out);

/* Color of one vertex, by address ("r" for the root, else dot-separated
 * branch indices like "2.0.1"). */
EDC_API int edc_coloring_color_of(const edc_coloring* col,
                                  const char* address, uint32_t* out);

/* Full "address,color" CSV (breadth-first); fails with EDC_ETOOBIG when the
 * truncation exceeds the context's graph_vertices limit. */
EDC_API int edc_coloring_csv(const edc_coloring* col, char** out);

/* For interval colorings only: the underlying "parent,child,color" edge
 * CSV.  EDC_EINVAL for other coloring kinds. */
EDC_API int edc_coloring_edge_csv(const edc_coloring* col, char** out);

EDC_API void edc_coloring_free(edc_coloring* col);

/* ---- verification ---- */

/* Checks that col separates every vertex pair at distance in [d, cap].
 * full != 0: exhaustive scan (EDC_ETOOBIG when beyond the scan_work
 * limit); full == 0: `samples` random pairs from `seed`.  The report is
 * returned even when violations exist; inspect edc_report_counts. */
EDC_API int edc_verify_tree(edc_ctx* ctx, const edc_coloring* col, int d,
                            int cap, int full, uint64_t samples,
                            uint64_t seed, edc_report** out);

/* Checks a "label,color" CSV (as produced by this library) against an
 * explicit graph: adjacent vertices must differ.  Every graph vertex needs
 * exactly one row; comment lines starting with '#' and one header row are
 * allowed. */
EDC_API int edc_verify_csv_on_graph(edc_ctx* ctx, const edc_graph* g,
                                    const char* coloring_csv,
                                    edc_report** out);

EDC_API int edc_report_counts(const edc_report* rep, uint64_t* pairs_checked,
                              uint64_t* violations);
EDC_API int edc_report_csv(const edc_report* rep, char** out);
EDC_API void edc_report_free(edc_report* rep);

/* ---- closed-form bounds and clique witnesses ---- */

/* CSV of all closed-form bounds on the exact-distance chromatic number at
 * (q, d); the parity of d selects which rows apply. */
EDC_API int edc_bounds_exact_csv(edc_ctx* ctx, int q, int d, char** out);

/* CSV of the band [d, floor(c*d)] bounds at (q, d, c). */
EDC_API int edc_bounds_interval_csv(edc_ctx* ctx, int q, int d,
                                    const char* c, char** out);

/* Pairwise-distance-d vertex set of size q (even d).  The witness is
 * verified before being returned; EDC_EVERIFY on any miss. */
EDC_API int edc_witness_exact_csv(edc_ctx* ctx, int q, int d, char** out);

/* Vertex set of size q*(q-1)^(floor(c*d/2)-floor(d/2)) with pairwise
 * distances in [d, floor(c*d)], verified. */
EDC_API int edc_witness_interval_csv(edc_ctx* ctx, int q, int d,
                                     const char* c, char** out);

/* ---- walk-energy profile ---- */

/* Monte Carlo energy profile of `col` restricted to the (q-1)-ary subtree
 * of depth d, for one color class (pass color < 0 to use the most frequent
 * color).  CSV rows: k, mean, sem, diff_mean, diff_sem. */
EDC_API int edc_energy_csv(edc_ctx* ctx, const edc_coloring* col, int d,
                           int64_t color, uint64_t samples, uint64_t seed,
                           char** out);

/* ---- exact chromatic number ---- */

/* Branch-and-bound chi with a greedy-clique lower bound and DSATUR upper
 * bound.  Pass max_nodes = 0 or max_seconds <= 0 for the defaults (1e7
 * nodes / 60 s).  On budget exhaustion the result flags timed_out and chi
 * is the best proper upper bound found. */
EDC_API int edc_chi_solve(edc_ctx* ctx, const edc_graph* g,
                          uint64_t max_nodes, double max_seconds,
                          edc_chi_result** out);

EDC_API int edc_chi_values(const edc_chi_result* r, int* chi, int* clique_lb,
                           int* dsatur_ub, uint64_t* nodes, int* timed_out);

/* The witness coloring as "vertex,color" CSV (labels from the graph). */
EDC_API int edc_chi_coloring_csv(const edc_chi_result* r, char** out);

/* The greedy clique as one vertex label per line after a header. */
EDC_API int edc_chi_clique_csv(const edc_chi_result* r, char** out);

EDC_API void edc_chi_result_free(edc_chi_result* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EDC_H */
