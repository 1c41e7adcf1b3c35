/* C interface to the gwcount curve-counting library. */

#ifndef GWCOUNT_H
#define GWCOUNT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes mirroring the CLI exit codes, plus FFI-specific inputs.
typedef enum GwStatus {
  // Success.
  GW_OK = 0,
  // Invalid input: unknown surface, malformed class, bad argument.
  GW_ERR_VALIDATION = 1,
  // Internal consistency failure; never expected on a correct build.
  GW_ERR_INCONSISTENCY = 2,
  // A required pointer argument was NULL.
  GW_ERR_NULL_ARG = 3,
  // A string argument was not valid UTF-8.
  GW_ERR_UTF8 = 4,
} GwStatus;

// Opaque session handle: one surface plus its memo table.
typedef struct GwSession GwSession;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates a session for a surface spec ("p2", "p2xK", "quadric"). On
// success writes the handle to `out`; the caller frees it with
// [`gw_session_free`].
//
// # Safety
// `surface` must be a NUL-terminated string and `out` a valid pointer.
enum GwStatus gw_session_new(const char *surface, struct GwSession **out);

// Frees a session handle. NULL is a no-op.
//
// # Safety
// `session` must be a handle from [`gw_session_new`], freed at most once.
void gw_session_free(struct GwSession *session);

// The message of the last failed call on this session, or NULL when the
// last call succeeded. Valid until the next call on the session.
//
// # Safety
// `session` must be a live handle from [`gw_session_new`].
const char *gw_session_last_error(const struct GwSession *session);

// Computes the genus-0 count of a class (e.g. "3;1,1,1" or "2,2") and
// writes it to `out` as a decimal string.
//
// # Safety
// `session` must be a live handle; `class` a NUL-terminated string; `out` a
// valid pointer. The result string is released with [`gw_string_free`].
enum GwStatus gw_n0(struct GwSession *session, const char *class_, char **out);

// Computes the genus-1 fixed-j report of a class for an automorphism order
// (2 generic, 4 at j=1728, 6 at j=0) and writes it to `out` as a JSON
// object with keys class, delta, genus, n0, CR, RT1, aut, n1j.
//
// # Safety
// Same contract as [`gw_n0`].
enum GwStatus gw_genus1_json(struct GwSession *session,
                             const char *class_,
                             int64_t aut,
                             char **out);

// Frees a string returned by this library. NULL is a no-op.
//
// # Safety
// `s` must come from a gwcount function, freed at most once.
void gw_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* GWCOUNT_H */
