/*
 * Copyright 2026 The ergcert Authors
 * SPDX-License-Identifier: Apache-2.0
 */

/*
 * C interface to the ergcert library: finite fields, cyclotomic numbers,
 * the Cayley graphs Cay(Z_l + Z_2^m + F_q, S(pi)), and certificates of
 * edge-regularity, clique spreads and non-strong-regularity.
 *
 * All objects are opaque handles released with their _destroy function.
 * Every fallible call returns an ergc_status; on failure a message is
 * available from ergc_last_error() on the calling thread. Strings handed
 * out through char** parameters are owned by the caller and released with
 * ergc_string_free().
 */

#ifndef ERGCERT_ERGCERT_H
#define ERGCERT_ERGCERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ERGCERT_BUILDING)
#    define ERGC_API __declspec(dllexport)
#  else
#    define ERGC_API __declspec(dllimport)
#  endif
#else
#  define ERGC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ergc_status {
  ERGC_OK = 0,
  ERGC_E_INVALID_ARGUMENT = 1,
  ERGC_E_NOT_PRIME = 2,
  ERGC_E_EXPONENT_ZERO = 3,
  ERGC_E_NOT_PRIME_POWER = 4,
  ERGC_E_FIELD_TOO_LARGE = 5,
  ERGC_E_ZERO_HAS_NO_LOG = 6,
  ERGC_E_INDEX_OUT_OF_RANGE = 7,
  ERGC_E_BAD_CONGRUENCE = 8,
  ERGC_E_WRONG_N = 9,
  ERGC_E_NOT_COPRIME = 10,
  ERGC_E_ZERO_VECTOR = 11,
  ERGC_E_NOT_A_BIJECTION = 12,
  ERGC_E_ASYMMETRIC = 13,
  ERGC_E_SAME_VERTEX = 14,
  ERGC_E_EMPTY_GRAPH = 15,
  ERGC_E_NOT_EDGE_REGULAR = 16,
  ERGC_E_NOT_A_CLIQUE = 17,
  ERGC_E_NO_OUTSIDE_VERTICES = 18,
  ERGC_E_HYPOTHESIS_VIOLATED = 19,
  ERGC_E_NOT_A_PARTITION = 20,
  ERGC_E_IO = 21,
  ERGC_E_PARSE = 22,
  ERGC_E_INTERNAL = 99
} ergc_status;

typedef enum ergc_variant {
  ERGC_VARIANT_NONE = 0,
  ERGC_VARIANT_PSI1 = 1,
  ERGC_VARIANT_PSI2 = 2
} ergc_variant;

typedef enum ergc_format {
  ERGC_FORMAT_DIMACS = 0,
  ERGC_FORMAT_EDGES = 1
} ergc_format;

typedef enum ergc_srg_scan {
  ERGC_SCAN_AUTO = 0,
  ERGC_SCAN_EXHAUSTIVE = 1,
  ERGC_SCAN_FROM_VERTEX_ZERO = 2
} ergc_srg_scan;

/* Search flags. */
#define ERGC_SEARCH_REPORT 0x1u         /* also emit one "scan" line per field */
#define ERGC_SEARCH_ALL_GENERATORS 0x2u /* m = 3: every class relabelling of rho */

typedef struct ergc_field ergc_field;
typedef struct ergc_cyclo ergc_cyclo;
typedef struct ergc_params ergc_params;
typedef struct ergc_graph ergc_graph;
typedef struct ergc_certificate ergc_certificate;

ERGC_API const char* ergc_version(void);
ERGC_API const char* ergc_status_string(ergc_status status);
/* Message of the last failed call on this thread; never NULL. */
ERGC_API const char* ergc_last_error(void);
ERGC_API void ergc_string_free(char* s);

/* ---- fields ----------------------------------------------------------- */

/* GF(p^a) with deterministic modulus and primitive element. */
ERGC_API ergc_status ergc_field_create(uint32_t p, uint32_t a, ergc_field** out);
ERGC_API ergc_status ergc_field_create_order(uint64_t q, ergc_field** out);
ERGC_API void ergc_field_destroy(ergc_field* field);

/* Elements are packed integers sum_i c_i p^i over the coefficient vector. */
ERGC_API uint32_t ergc_field_order(const ergc_field* field);
ERGC_API uint32_t ergc_field_rho(const ergc_field* field);
ERGC_API ergc_status ergc_field_dlog(const ergc_field* field, uint32_t x, uint32_t* out);
ERGC_API ergc_status ergc_field_mul(const ergc_field* field, uint32_t x, uint32_t y, uint32_t* out);

/* ---- cyclotomy -------------------------------------------------------- */

ERGC_API ergc_status ergc_cyclo_create(const ergc_field* field, uint32_t n, ergc_cyclo** out);
ERGC_API void ergc_cyclo_destroy(ergc_cyclo* ctx);
ERGC_API ergc_status ergc_cyclo_class_index(const ergc_cyclo* ctx, uint32_t x, uint32_t* out);
ERGC_API ergc_status ergc_cyclo_number(const ergc_cyclo* ctx, uint32_t a, uint32_t b, uint64_t* out);
/* n lines of n space-separated integers, row a, column b. */
ERGC_API ergc_status ergc_cyclo_table_text(const ergc_cyclo* ctx, char** out);

/* ---- number theory and searches --------------------------------------- */

ERGC_API ergc_status ergc_multiplicative_order(uint64_t x, uint64_t modulus, uint64_t* out);
ERGC_API ergc_status ergc_corollary_orders(uint64_t p, uint64_t* n, uint64_t* e);
/* One line per hit, ascending q; m is 2 or 3. */
ERGC_API ergc_status ergc_search_text(uint32_t m, uint64_t q_max, unsigned flags, char** out);

/* ---- construction ----------------------------------------------------- */

/*
 * Zero means "unset" for every integer field. Give q, or p and a.
 * When l is unset it is derived from c so that the graph is edge-regular
 * (l = (c+1)/2 for m = 2, l = (3c+1)/4 for m = 3 with a variant).
 * pi lists the images of the nonzero vectors 1, 2, ..., 2^m - 1; when
 * absent, m = 3 takes the variant's table and other m the identity.
 */
typedef struct ergc_params_spec {
  uint32_t m;
  uint32_t l;
  uint64_t q;
  uint32_t p;
  uint32_t a;
  const uint32_t* pi;
  size_t pi_len;
  ergc_variant variant;
} ergc_params_spec;

/* Validates everything before any construction: prime power, bijection,
 * q = 1 (mod 2(2^m - 1)), variant only with m = 3. */
ERGC_API ergc_status ergc_params_create(const ergc_params_spec* spec, ergc_params** out);
ERGC_API void ergc_params_destroy(ergc_params* params);
ERGC_API uint32_t ergc_params_l(const ergc_params* params);
ERGC_API uint64_t ergc_params_order(const ergc_params* params);
/* Vertex index of (z, v, f); v is the bit-vector as an integer, f a packed
 * field element. */
ERGC_API ergc_status ergc_params_encode(const ergc_params* params, uint32_t z, uint32_t v,
                                        uint32_t f, uint32_t* out);

ERGC_API ergc_status ergc_graph_build(const ergc_params* params, ergc_graph** out);
ERGC_API void ergc_graph_destroy(ergc_graph* graph);
ERGC_API uint64_t ergc_graph_order(const ergc_graph* graph);
ERGC_API uint64_t ergc_graph_edge_count(const ergc_graph* graph);
ERGC_API ergc_status ergc_graph_degree(const ergc_graph* graph, uint32_t v, uint32_t* out);
ERGC_API ergc_status ergc_graph_common_neighbours(const ergc_graph* graph, uint32_t u, uint32_t v,
                                                  uint32_t* out);
ERGC_API ergc_status ergc_graph_export_text(const ergc_graph* graph, ergc_format format, char** out);
ERGC_API ergc_status ergc_graph_export_file(const ergc_graph* graph, ergc_format format,
                                            const char* path);

/* ---- certification ---------------------------------------------------- */

ERGC_API ergc_status ergc_certify(const ergc_params* params, const ergc_graph* graph,
                                  ergc_srg_scan scan, ergc_certificate** out);
ERGC_API void ergc_certificate_destroy(ergc_certificate* cert);
ERGC_API int ergc_certificate_passed(const ergc_certificate* cert);
/* Name of the first failing check, or NULL when passing. */
ERGC_API const char* ergc_certificate_first_failure(const ergc_certificate* cert);
ERGC_API ergc_status ergc_certificate_json(const ergc_certificate* cert, char** out);

#ifdef __cplusplus
}
#endif

#endif
