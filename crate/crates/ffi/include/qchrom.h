#ifndef QCHROM_H
#define QCHROM_H

#pragma once

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. The first four match the command-line exit codes.
 */
typedef enum QcStatus {
  QC_STATUS_OK = 0,
  /**
   * A verification ran and found violations.
   */
  QC_STATUS_FAIL = 1,
  /**
   * Malformed input or arguments.
   */
  QC_STATUS_INVALID_INPUT = 2,
  /**
   * A search budget ran out before an answer was found.
   */
  QC_STATUS_INCONCLUSIVE = 3,
  QC_STATUS_NULL_POINTER = 4,
  /**
   * A Rust panic was caught at the boundary.
   */
  QC_STATUS_INTERNAL = 5,
} QcStatus;

typedef enum QcFamily {
  /**
   * `arg` = n.
   */
  QC_FAMILY_COMPLETE = 0,
  /**
   * `arg` = n.
   */
  QC_FAMILY_CYCLE = 1,
  /**
   * `arg` = n (even).
   */
  QC_FAMILY_HADAMARD = 2,
  /**
   * `arg` = p (prime).
   */
  QC_FAMILY_ROOTS_OF_UNITY = 3,
  /**
   * `arg` ignored.
   */
  QC_FAMILY_DIM4 = 4,
  /**
   * `arg` ignored.
   */
  QC_FAMILY_G18 = 5,
} QcFamily;

typedef enum QcParameter {
  QC_PARAMETER_CHROMATIC = 0,
  QC_PARAMETER_CLIQUE = 1,
  QC_PARAMETER_INDEPENDENCE = 2,
} QcParameter;

typedef enum QcLift {
  /**
   * Unit-modulus vectors, Fourier lift.
   */
  QC_LIFT_FOURIER = 0,
  /**
   * Real vectors of dimension at most 8, orthogonal-design lift.
   */
  QC_LIFT_ORTHOGONAL_DESIGN = 1,
} QcLift;

/**
 * Opaque certificate handle; keeps the graph it certifies.
 */
typedef struct QcCertificate QcCertificate;

/**
 * Opaque graph handle.
 */
typedef struct QcGraph QcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failed call on this thread. The pointer stays
 * valid until the next `qc_*` call on the same thread.
 */
const char *qc_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from a `char **` out-parameter of this library and not be freed twice.
 */
void qc_string_free(char *s);

/**
 * Parses a graph in DIMACS or JSON format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum QcStatus qc_graph_parse(const char *text, struct QcGraph **out_graph);

/**
 * Builds a graph from one of the named families.
 *
 * # Safety
 * `out_graph` must be writable.
 */
enum QcStatus qc_graph_generate(enum QcFamily family, uint32_t arg, struct QcGraph **out_graph);

/**
 * Samples `G(n, p)` deterministically from `seed`.
 *
 * # Safety
 * `out_graph` must be writable.
 */
enum QcStatus qc_graph_gnp(size_t n, double p, uint64_t seed, struct QcGraph **out_graph);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t qc_graph_vertex_count(const struct QcGraph *g);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t qc_graph_edge_count(const struct QcGraph *g);

/**
 * Serializes a graph as DIMACS (`json == false`) or JSON.
 *
 * # Safety
 * `g` must be a live graph handle; `out_text` must be writable.
 */
enum QcStatus qc_graph_write(const struct QcGraph *g, bool json, char **out_text);

/**
 * # Safety
 * `g` must be null or a handle from this library that is not used afterwards.
 */
void qc_graph_free(struct QcGraph *g);

/**
 * Exact chromatic number, clique number or independence number.
 * A `budget` of 0 selects the default node budget.
 *
 * # Safety
 * `g` must be a live graph handle; `out_value` must be writable.
 */
enum QcStatus qc_solve(const struct QcGraph *g,
                       enum QcParameter parameter,
                       uint64_t budget,
                       size_t *out_value);

/**
 * Checks a classical colouring (`n` entries, 0-indexed colours below `c`).
 * Returns `Ok` when proper and `Fail` otherwise.
 *
 * # Safety
 * `g` must be a live graph handle; `colours` must point to `n` values.
 */
enum QcStatus qc_verify_colouring(const struct QcGraph *g,
                                  const size_t *colours,
                                  size_t n,
                                  size_t c);

/**
 * Parses a certificate JSON document (the graph is embedded in it).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out_cert` must be writable.
 */
enum QcStatus qc_certificate_parse(const char *text, struct QcCertificate **out_cert);

/**
 * # Safety
 * `cert` must be a live certificate handle; `out_text` must be writable.
 */
enum QcStatus qc_certificate_write(const struct QcCertificate *cert, char **out_text);

/**
 * Rank-1 certificate from a proper classical colouring.
 *
 * # Safety
 * As for [`qc_verify_colouring`]; `out_cert` must be writable.
 */
enum QcStatus qc_certificate_classical(const struct QcGraph *g,
                                       const size_t *colours,
                                       size_t n,
                                       size_t c,
                                       struct QcCertificate **out_cert);

/**
 * Lifts an orthogonal representation given as vector JSON.
 *
 * # Safety
 * `g` must be a live graph handle, `vectors_json` a NUL-terminated string
 * and `out_cert` writable.
 */
enum QcStatus qc_certificate_lift(const struct QcGraph *g,
                                  enum QcLift lift,
                                  const char *vectors_json,
                                  struct QcCertificate **out_cert);

/**
 * Number of colours of a certificate, or 0 for a null handle.
 *
 * # Safety
 * `cert` must be null or a live certificate handle.
 */
size_t qc_certificate_colours(const struct QcCertificate *cert);

/**
 * Verifies a certificate at tolerance `tol` against its embedded graph.
 * Returns `Ok` on pass and `Fail` on violations; `out_worst` (optional)
 * receives the largest residual.
 *
 * # Safety
 * `cert` must be a live certificate handle; `out_worst` null or writable.
 */
enum QcStatus qc_certificate_verify(const struct QcCertificate *cert,
                                    double tol,
                                    double *out_worst);

/**
 * # Safety
 * `cert` must be null or a handle from this library that is not used afterwards.
 */
void qc_certificate_free(struct QcCertificate *cert);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QCHROM_H */
