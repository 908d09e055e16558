#ifndef GRAPHQEC_H
#define GRAPHQEC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define GQEC_OK 0

/**
 * k = 0: the code has no logical qubit, so no distance.
 */
#define GQEC_NO_LOGICAL 60

#define GQEC_NULL_ARGUMENT 61

#define GQEC_BAD_UTF8 62

#define GQEC_PANIC 99

/**
 * A graphical code together with its pairing convention.
 */
typedef struct GqecCode GqecCode;

/**
 * A validated quantized graph.
 */
typedef struct GqecGraph GqecGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *gqec_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void gqec_string_free(char *s);

/**
 * Parses a graph from its JSON file format.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
int32_t gqec_graph_from_json(const char *json, struct GqecGraph **out);

/**
 * # Safety
 * `g` must come from `gqec_graph_from_json` and not be freed twice.
 */
void gqec_graph_free(struct GqecGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle.
 */
size_t gqec_graph_vertex_count(const struct GqecGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle.
 */
size_t gqec_graph_edge_count(const struct GqecGraph *g);

/**
 * Builds the code whose stabilizers are the given cycles. Cycle i is
 * `edges[offsets[i] .. offsets[i + 1]]`, so `offsets` has
 * `cycle_count + 1` entries.
 *
 * # Safety
 * The arrays must hold the stated number of elements.
 */
int32_t gqec_code_from_cycles(const struct GqecGraph *g,
                              const size_t *edges,
                              const size_t *offsets,
                              size_t cycle_count,
                              struct GqecCode **out);

/**
 * Builds a named family instance. `param` is ignored by families
 * without a size parameter; pass 0 there.
 *
 * # Safety
 * `name` must be nul-terminated and `out` valid.
 */
int32_t gqec_family(const char *name, size_t param, struct GqecCode **out);

/**
 * # Safety
 * `c` must come from this library and not be freed twice.
 */
void gqec_code_free(struct GqecCode *c);

/**
 * Number of physical qubits.
 *
 * # Safety
 * `c` must be a live code handle.
 */
size_t gqec_code_n(const struct GqecCode *c);

/**
 * Number of logical qubits.
 *
 * # Safety
 * `c` must be a live code handle.
 */
size_t gqec_code_k(const struct GqecCode *c);

/**
 * Sets the pairing letters, e.g. "ZYX".
 *
 * # Safety
 * `c` must be a live code handle and `letters` nul-terminated.
 */
int32_t gqec_code_set_convention(struct GqecCode *c, const char *letters);

/**
 * Graphical distance, searching up to `budget`.
 *
 * # Safety
 * `c` must be a live code handle and `out` valid.
 */
int32_t gqec_code_distance(const struct GqecCode *c, size_t budget, size_t *out);

/**
 * Stabilizer generators as a newline-separated list of signed Pauli
 * words. Free the result with `gqec_string_free`.
 *
 * # Safety
 * `c` must be a live code handle and `out` valid.
 */
int32_t gqec_code_stabilizers(const struct GqecCode *c, char **out);

/**
 * JSON code report. Free the result with `gqec_string_free`.
 *
 * # Safety
 * `c` must be a live code handle and `out` valid.
 */
int32_t gqec_code_report_json(const struct GqecCode *c, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRAPHQEC_H */
