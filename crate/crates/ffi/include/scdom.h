#ifndef SCDOM_H
#define SCDOM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum ScdomStatus {
  SCDOM_STATUS_OK = 0,
  SCDOM_STATUS_NULL_POINTER = 1,
  SCDOM_STATUS_PARSE_ERROR = 2,
  SCDOM_STATUS_DOMAIN_ERROR = 3,
  SCDOM_STATUS_REFUSED = 4,
  SCDOM_STATUS_IO_ERROR = 5,
  SCDOM_STATUS_INVALID_ARGUMENT = 6,
  SCDOM_STATUS_PANIC = 7,
} ScdomStatus;

typedef enum ScdomFamily {
  SCDOM_FAMILY_COMPLETE = 0,
  SCDOM_FAMILY_SUBDIVIDED_WHEEL = 1,
  SCDOM_FAMILY_BOOK = 2,
  SCDOM_FAMILY_LADDER = 3,
  SCDOM_FAMILY_STAR = 4,
} ScdomFamily;

typedef enum ScdomVariant {
  SCDOM_VARIANT_DS = 0,
  SCDOM_VARIANT_CDS = 1,
  SCDOM_VARIANT_TDS = 2,
  SCDOM_VARIANT_SDS = 3,
  SCDOM_VARIANT_SCDS = 4,
  SCDOM_VARIANT_STDS = 5,
} ScdomVariant;

typedef enum ScdomMethod {
  SCDOM_METHOD_AUTO = 0,
  SCDOM_METHOD_EXACT_SEARCH = 1,
  SCDOM_METHOD_BLOCK_FORMULA = 2,
  SCDOM_METHOD_THRESHOLD_FORMULA = 3,
  SCDOM_METHOD_TRIVIAL_COMPLETE = 4,
} ScdomMethod;

typedef enum ScdomReduction {
  SCDOM_REDUCTION_DM_TO_SCDM = 0,
  SCDOM_REDUCTION_DM_TO_STDM = 1,
  SCDOM_REDUCTION_SCDM_TO_SCDB = 2,
  SCDOM_REDUCTION_STDM_TO_STDB = 3,
  SCDOM_REDUCTION_DM_SPLIT_TO_SCDM_SPLIT = 4,
  SCDOM_REDUCTION_DM_SPLIT_TO_STDM_SPLIT = 5,
} ScdomReduction;

/**
 * Opaque graph handle.
 */
typedef struct ScdomGraph ScdomGraph;

/**
 * Opaque solve result.
 */
typedef struct ScdomReport ScdomReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null if none.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *scdom_last_error_message(void);

/**
 * Parse NUL-terminated edge-list text.
 *
 * # Safety
 * `text` must be a valid C string; `out` must be writable.
 */
enum ScdomStatus scdom_graph_from_edge_list(const char *text, struct ScdomGraph **out);

/**
 * Build a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`2 * edge_count` entries).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or may be null
 * when `edge_count` is 0); `out` must be writable.
 */
enum ScdomStatus scdom_graph_from_edges(size_t n,
                                        const size_t *edges,
                                        size_t edge_count,
                                        struct ScdomGraph **out);

/**
 * Generate a family member in its canonical labeling.
 *
 * # Safety
 * `out` must be writable.
 */
enum ScdomStatus scdom_family_generate(enum ScdomFamily kind, size_t n, struct ScdomGraph **out);

/**
 * Closed-form secure connected domination number of a family member.
 *
 * # Safety
 * `out_value` must be writable.
 */
enum ScdomStatus scdom_family_value(enum ScdomFamily kind, size_t n, size_t *out_value);

/**
 * # Safety
 * `graph` must come from this library and not be used afterwards. Null is
 * ignored.
 */
void scdom_graph_free(struct ScdomGraph *graph);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t scdom_graph_vertex_count(const struct ScdomGraph *graph);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t scdom_graph_edge_count(const struct ScdomGraph *graph);

/**
 * Canonical edge-list text. Release with [`scdom_string_free`].
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum ScdomStatus scdom_graph_to_edge_list(const struct ScdomGraph *graph, char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards. Null is
 * ignored.
 */
void scdom_string_free(char *s);

/**
 * Whether the `len` vertices at `set` form a set of the given variant.
 * Out-of-range ids are an invalid argument.
 *
 * # Safety
 * `graph` must be a live handle; `set` must point to `len` values (or may
 * be null when `len` is 0); `out_valid` must be writable.
 */
enum ScdomStatus scdom_verify(const struct ScdomGraph *graph,
                              enum ScdomVariant kind,
                              const size_t *set,
                              size_t len,
                              bool *out_valid);

/**
 * Optimum for `kind` with a minimum witness. `method` selects the
 * algorithm; block and threshold formulas compute `SCDS` only. `max_n`
 * caps exact search (0 means the default of 20).
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum ScdomStatus scdom_solve(const struct ScdomGraph *graph,
                             enum ScdomVariant kind,
                             enum ScdomMethod method,
                             size_t max_n,
                             struct ScdomReport **out);

/**
 * # Safety
 * `report` must be null or a live handle.
 */
size_t scdom_report_value(const struct ScdomReport *report);

/**
 * Method that produced the report.
 *
 * # Safety
 * `report` must be a live handle.
 */
enum ScdomMethod scdom_report_method(const struct ScdomReport *report);

/**
 * Copy the witness (ascending ids) into `buffer`. `*out_len` receives the
 * witness size; a buffer smaller than that is an invalid argument and
 * nothing is copied.
 *
 * # Safety
 * `report` must be a live handle; `buffer` must have room for `capacity`
 * values (or may be null when `capacity` is 0); `out_len` must be writable.
 */
enum ScdomStatus scdom_report_witness(const struct ScdomReport *report,
                                      size_t *buffer,
                                      size_t capacity,
                                      size_t *out_len);

/**
 * # Safety
 * `report` must come from this library and not be used afterwards. Null is
 * ignored.
 */
void scdom_report_free(struct ScdomReport *report);

/**
 * Apply a hardness gadget. Split kinds recognize a split partition of the
 * input. The shifted parameter goes to `out_parameter`.
 *
 * # Safety
 * `graph` must be a live handle; `out` and `out_parameter` must be
 * writable.
 */
enum ScdomStatus scdom_reduce(const struct ScdomGraph *graph,
                              enum ScdomReduction kind,
                              size_t parameter,
                              struct ScdomGraph **out,
                              size_t *out_parameter);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCDOM_H */
