#ifndef QUADCYCLE_H
#define QUADCYCLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QcStatus {
  QC_STATUS_OK = 0,
  QC_STATUS_NULL_POINTER = 1,
  QC_STATUS_INVALID_ARGUMENT = 2,
  QC_STATUS_INADMISSIBLE = 3,
  QC_STATUS_PARSE = 4,
  QC_STATUS_OUT_OF_RANGE = 5,
  QC_STATUS_UTF8 = 6,
  QC_STATUS_INTERNAL = 7,
} QcStatus;

typedef enum QcVerdict {
  QC_VERDICT_PASS = 0,
  QC_VERDICT_FAIL = 1,
  QC_VERDICT_INDETERMINATE = 2,
} QcVerdict;

/*
 Opaque decomposition handle.
 */
typedef struct QcDecomposition QcDecomposition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Static description of a status code.
 */
const char *qc_status_message(enum QcStatus status);

/*
 4-cycle system of order `n` (`n = 1 mod 8`, `n >= 49`).
 */
enum QcStatus qc_build_k4cs(size_t n, struct QcDecomposition **out);

/*
 Cocktail party decomposition of even order `n >= 50`.
 */
enum QcStatus qc_build_cocktail(size_t n, struct QcDecomposition **out);

/*
 Cocktail party decomposition of order `8h + 2t`.
 */
enum QcStatus qc_build_cocktail_with(size_t h, size_t t, struct QcDecomposition **out);

/*
 Anchored seed; `t = 0` gives the K9 seed.
 */
enum QcStatus qc_build_seed(size_t t, struct QcDecomposition **out);

/*
 Exclusively alt-colourable decomposition with `len` parts of sizes
 `4 * ells[i]`.
 */
enum QcStatus qc_build_exclusively_alt(const size_t *ells,
                                       size_t len,
                                       struct QcDecomposition **out);

/*
 Parses the text format (NUL-terminated UTF-8).
 */
enum QcStatus qc_parse(const char *text, struct QcDecomposition **out);

/*
 Writes the text format; free the result with `qc_string_free`.
 */
enum QcStatus qc_to_text(const struct QcDecomposition *d, char **out);

void qc_string_free(char *s);

void qc_decomposition_free(struct QcDecomposition *d);

/*
 Vertex count, or 0 for a null handle.
 */
size_t qc_vertex_count(const struct QcDecomposition *d);

/*
 Cycle count, or 0 for a null handle.
 */
size_t qc_cycle_count(const struct QcDecomposition *d);

/*
 Copies cycle `index` (canonical form) into `out[0..4]`.
 */
enum QcStatus qc_get_cycle(const struct QcDecomposition *d, size_t index, size_t *out);

/*
 Sets `*out` to whether every host edge lies in exactly one cycle.
 */
enum QcStatus qc_exact_cover(const struct QcDecomposition *d, bool *out);

/*
 Unique 2-colourability certificate; `node_limit = 0` uses the default.
 */
enum QcStatus qc_uniquely_2colourable(const struct QcDecomposition *d,
                                      uint64_t node_limit,
                                      enum QcVerdict *out);

/*
 Counts proper 2-colourings; `*complete` is false if the node limit was
 reached first. `node_limit = 0` uses the default.
 */
enum QcStatus qc_count_colourings(const struct QcDecomposition *d,
                                  uint64_t node_limit,
                                  uint64_t *count,
                                  bool *complete);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUADCYCLE_H */
