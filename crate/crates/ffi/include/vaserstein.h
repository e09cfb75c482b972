#ifndef VASERSTEIN_H
#define VASERSTEIN_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Outcome of a call.
 */
typedef enum VsStatus {
  VS_STATUS_OK = 0,
  VS_STATUS_NULL_POINTER = 1,
  VS_STATUS_INVALID_UTF8 = 2,
  /*
   Malformed or inconsistent input.
   */
  VS_STATUS_INPUT = 3,
  /*
   The row generates a proper ideal.
   */
  VS_STATUS_NOT_UNIMODULAR = 4,
  /*
   An identity or certificate failed to verify.
   */
  VS_STATUS_VERIFICATION = 5,
  /*
   The Groebner reduction budget ran out.
   */
  VS_STATUS_BUDGET = 6,
  /*
   A numeric computation could not conclude.
   */
  VS_STATUS_NUMERIC = 7,
  /*
   A panic was caught at the boundary.
   */
  VS_STATUS_INTERNAL = 8,
} VsStatus;

/*
 Opaque presented ring.
 */
typedef struct VsRing VsRing;

/*
 Opaque certified unimodular row.
 */
typedef struct VsRow VsRow;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version as a static NUL-terminated string.
 */
const char *vs_version(void);

/*
 Message for the last failure on this thread; never NULL.
 */
const char *vs_last_error(void);

/*
 # Safety
 `s` must come from this library and not be freed twice.
 */
void vs_string_free(char *s);

/*
 Build a ring from `{"vars": [...], "relations": [...], "order": "degrevlex"}`.

 # Safety
 `json` must be a NUL-terminated string; `out` must be writable.
 */
enum VsStatus vs_ring_new(const char *json, struct VsRing **out);

/*
 # Safety
 `ring` must come from [`vs_ring_new`] or be NULL.
 */
void vs_ring_free(struct VsRing *ring);

/*
 Normal form of `poly` in `ring`.

 # Safety
 Pointers must be valid; `*out` is freed with [`vs_string_free`].
 */
enum VsStatus vs_ring_normal_form(const struct VsRing *ring, const char *poly, char **out);

/*
 A certified row from `len` entries. With `certificate` NULL a
 certificate is computed; otherwise it is checked.

 # Safety
 `entries` (and `certificate` if non-NULL) must hold `len` strings.
 */
enum VsStatus vs_row_new(const struct VsRing *ring,
                         const char *const *entries,
                         const char *const *certificate,
                         size_t len,
                         struct VsRow **out);

/*
 # Safety
 `row` must come from this library or be NULL.
 */
void vs_row_free(struct VsRow *row);

/*
 Number of entries; 0 for NULL.

 # Safety
 `row` must be a valid handle or NULL.
 */
size_t vs_row_len(const struct VsRow *row);

/*
 `{"row": [...], "certificate": [...]}`.

 # Safety
 Pointers must be valid; `*out` is freed with [`vs_string_free`].
 */
enum VsStatus vs_row_json(const struct VsRow *row, char **out);

/*
 The row moved by `E_ij(lambda)`, as a new handle.

 # Safety
 Pointers must be valid.
 */
enum VsStatus vs_row_apply_move(const struct VsRow *row,
                                size_t i,
                                size_t j,
                                const char *lambda,
                                struct VsRow **out);

/*
 `{"matrix": [[...]], "pfaffian": "1"}` for a row of length 3.

 # Safety
 Pointers must be valid; `*out` is freed with [`vs_string_free`].
 */
enum VsStatus vs_vaserstein_symbol(const struct VsRow *row, char **out);

/*
 Pfaffian of an alternating matrix given as a JSON array of rows.

 # Safety
 Pointers must be valid; `*out` is freed with [`vs_string_free`].
 */
enum VsStatus vs_pfaffian(const struct VsRing *ring, const char *entries_json, char **out);

/*
 Apply `f`, `H`, `alpha` or `alpha-symmetric` to a row of length 4.
 `f` yields `{"image": [...]}`, the others a row with certificate.

 # Safety
 Pointers must be valid; `*out` is freed with [`vs_string_free`].
 */
enum VsStatus vs_map_apply(const struct VsRow *row, const char *name, char **out);

/*
 `h`: the row of the first four variables of `ring`, certified by itself.

 # Safety
 Pointers must be valid.
 */
enum VsStatus vs_map_h(const struct VsRing *ring, struct VsRow **out);

/*
 Hopf invariant of the map `{"vars": [4 names], "components": [3 polys]}`
 from the fibres over `v1` and `v2` (3 doubles each).

 # Safety
 `v1`, `v2` must point to 3 doubles; out-pointers must be writable.
 */
enum VsStatus vs_hopf_invariant(const char *map_json,
                                const double *v1,
                                const double *v2,
                                size_t grid,
                                int64_t *out_linking,
                                double *out_residual);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VASERSTEIN_H */
