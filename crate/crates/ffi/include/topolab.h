#ifndef TOPOLAB_H
#define TOPOLAB_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TopolabStatus {
  TOPOLAB_STATUS_OK = 0,
  TOPOLAB_STATUS_NULL_POINTER = 1,
  TOPOLAB_STATUS_INVALID_PARAMETER = 2,
  TOPOLAB_STATUS_PARSE_ERROR = 3,
  TOPOLAB_STATUS_IO_ERROR = 4,
  TOPOLAB_STATUS_GENERATOR_STALLED = 5,
  TOPOLAB_STATUS_INSUFFICIENT_RANGE = 6,
  TOPOLAB_STATUS_INVALID_UTF8 = 7,
  TOPOLAB_STATUS_PANIC = 8,
} TopolabStatus;

typedef enum TopolabAttackStrategy {
  TOPOLAB_ATTACK_STRATEGY_TARGETED_STATIC = 0,
  TOPOLAB_ATTACK_STRATEGY_TARGETED_ADAPTIVE = 1,
  TOPOLAB_ATTACK_STRATEGY_RANDOM = 2,
} TopolabAttackStrategy;

/**
 * Opaque graph handle.
 */
typedef struct TopolabGraph TopolabGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *topolab_last_error_message(void);

/**
 * Builds a graph from `len` pairs `(us[i], vs[i])` on `n_nodes` nodes.
 * Self-loops and duplicate pairs are dropped.
 */
enum TopolabStatus topolab_graph_from_edges(size_t n_nodes,
                                            const uint32_t *us,
                                            const uint32_t *vs,
                                            size_t len,
                                            struct TopolabGraph **out);

/**
 * Reads a whitespace-separated edge-list file. Node labels are kept and
 * available through `topolab_graph_label`.
 */
enum TopolabStatus topolab_graph_read_edge_list(const char *path, struct TopolabGraph **out);

/**
 * Writes the graph as an edge list, using stored labels when present.
 */
enum TopolabStatus topolab_graph_write_edge_list(const struct TopolabGraph *graph,
                                                 const char *path);

/**
 * Fitness-weighted preferential attachment on the default 8-node star seed
 * with uniform fitness.
 */
enum TopolabStatus topolab_generate_fba(size_t n_target,
                                        size_t m,
                                        uint64_t seed,
                                        struct TopolabGraph **out);

/**
 * Interactive growth on the default 8-node star seed.
 */
enum TopolabStatus topolab_generate_ig(size_t n_target,
                                       double p_one_host,
                                       uint64_t seed,
                                       struct TopolabGraph **out);

/**
 * Releases a handle. NULL is ignored.
 */
void topolab_graph_free(struct TopolabGraph *graph);

/**
 * Node count, or 0 for NULL.
 */
size_t topolab_graph_node_count(const struct TopolabGraph *graph);

/**
 * Link count, or 0 for NULL.
 */
size_t topolab_graph_edge_count(const struct TopolabGraph *graph);

/**
 * Copies every node's degree into `out[0..len]`; `len` must equal the node count.
 */
enum TopolabStatus topolab_graph_degrees(const struct TopolabGraph *graph, size_t *out, size_t len);

/**
 * External label of node `id` for graphs read from a file, else NULL.
 * Valid for the lifetime of the handle.
 */
const char *topolab_graph_label(const struct TopolabGraph *graph, uint32_t id);

/**
 * Least-squares power-law exponent of the degree CCDF over `k >= kmin`.
 */
enum TopolabStatus topolab_power_law_exponent(const struct TopolabGraph *graph,
                                              size_t kmin,
                                              double *gamma_out);

/**
 * Rich-club connectivity φ(r) for each of `len` rank fractions.
 */
enum TopolabStatus topolab_rich_club(const struct TopolabGraph *graph,
                                     const double *r_values,
                                     size_t len,
                                     double *phi_out);

/**
 * Per-node triangle coefficients; `len` must equal the node count.
 */
enum TopolabStatus topolab_triangle_coefficients(const struct TopolabGraph *graph,
                                                 uint64_t *out,
                                                 size_t len);

/**
 * Maximum and mean triangle coefficient.
 */
enum TopolabStatus topolab_triangle_summary(const struct TopolabGraph *graph,
                                            uint64_t *max_out,
                                            double *mean_out);

/**
 * Largest component after excluding the `len` node ids in `excluded`.
 */
enum TopolabStatus topolab_largest_component(const struct TopolabGraph *graph,
                                             const uint32_t *excluded,
                                             size_t len,
                                             size_t *size_out);

/**
 * Giant-component fraction `s` for each removal fraction in `fractions`.
 * `seed` is only used by the random strategy.
 */
enum TopolabStatus topolab_attack_curve(const struct TopolabGraph *graph,
                                        enum TopolabAttackStrategy strategy,
                                        uint64_t seed,
                                        const double *fractions,
                                        size_t len,
                                        double *s_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TOPOLAB_H */
