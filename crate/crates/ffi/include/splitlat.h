#ifndef SPLITLAT_H
#define SPLITLAT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SplitlatStatus {
  SPLITLAT_STATUS_OK = 0,
  SPLITLAT_STATUS_NULL_POINTER = 1,
  SPLITLAT_STATUS_INVALID_ARGUMENT = 2,
  SPLITLAT_STATUS_PARSE = 3,
  SPLITLAT_STATUS_TOO_MANY_IDEALS = 4,
  SPLITLAT_STATUS_BUFFER_TOO_SMALL = 5,
  SPLITLAT_STATUS_PANIC = 6,
} SplitlatStatus;

/*
 The lattice of order ideals of a poset.
 */
typedef struct SplitlatLattice SplitlatLattice;

/*
 A vertex-colored poset, possibly carrying a chain function.
 */
typedef struct SplitlatPoset SplitlatPoset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or null. Valid until
 the next failing call on the same thread.
 */
const char *splitlat_last_error(void);

/*
 Builds the semistandard poset of `algebra` ("a1a1", "a2", "c2", "g2")
 with highest weight `(a, b)`. `order` is "ba" or "ab".

 # Safety
 String arguments must be null or NUL-terminated; `out` must be writable.
 */
enum SplitlatStatus splitlat_poset_build(const char *algebra,
                                         uint32_t a,
                                         uint32_t b,
                                         const char *order,
                                         struct SplitlatPoset **out);

/*
 Reads a vertex-colored poset document.

 # Safety
 `json` must be null or NUL-terminated; `out` must be writable.
 */
enum SplitlatStatus splitlat_poset_from_json(const char *json, struct SplitlatPoset **out);

/*
 Number of vertices, or 0 for a null handle.

 # Safety
 `p` must be null or a live poset handle.
 */
size_t splitlat_poset_len(const struct SplitlatPoset *p);

/*
 Serializes the poset; release the string with [`splitlat_string_free`].

 # Safety
 `p` must be a live poset handle; `out` must be writable.
 */
enum SplitlatStatus splitlat_poset_to_json(const struct SplitlatPoset *p, char **out);

/*
 # Safety
 `p` must be null or a handle not yet freed.
 */
void splitlat_poset_free(struct SplitlatPoset *p);

/*
 Enumerates the order ideals of `p`, failing with `TooManyIdeals` past
 `max_ideals`.

 # Safety
 `p` must be a live poset handle; `out` must be writable.
 */
enum SplitlatStatus splitlat_lattice_enumerate(const struct SplitlatPoset *p,
                                               size_t max_ideals,
                                               struct SplitlatLattice **out);

/*
 Number of lattice elements, or 0 for a null handle.

 # Safety
 `l` must be null or a live lattice handle.
 */
size_t splitlat_lattice_len(const struct SplitlatLattice *l);

/*
 Weight of element `index` in fundamental-weight coordinates.

 # Safety
 `l` must be a live lattice handle; `a` and `b` must be writable.
 */
enum SplitlatStatus splitlat_lattice_weight(const struct SplitlatLattice *l,
                                            size_t index,
                                            int64_t *a,
                                            int64_t *b);

/*
 Writes the rank generating function coefficients into `buf`. The
 required length is always stored in `len`; if `cap` is smaller the call
 fails with `BufferTooSmall` and `buf` may be null.

 # Safety
 `l` must be a live lattice handle; `buf` must hold `cap` values.
 */
enum SplitlatStatus splitlat_lattice_rgf(const struct SplitlatLattice *l,
                                         int64_t *buf,
                                         size_t cap,
                                         size_t *len);

/*
 Weight generating function as text, e.g. `1*x^-1*y^1 + 1*x^1*y^0`.

 # Safety
 `l` must be a live lattice handle; `out` must be writable.
 */
enum SplitlatStatus splitlat_lattice_character(const struct SplitlatLattice *l, char **out);

/*
 Sets `ok` to whether the lattice's weight generating function is the Weyl
 character of `algebra` at `(a, b)`.

 # Safety
 `l` must be a live lattice handle; `algebra` NUL-terminated; `ok` writable.
 */
enum SplitlatStatus splitlat_lattice_verify_character(const struct SplitlatLattice *l,
                                                      const char *algebra,
                                                      uint32_t a,
                                                      uint32_t b,
                                                      bool *ok);

/*
 # Safety
 `l` must be null or a handle not yet freed.
 */
void splitlat_lattice_free(struct SplitlatLattice *l);

/*
 # Safety
 `s` must be null or a string returned by this library and not yet freed.
 */
void splitlat_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPLITLAT_H */
