#ifndef CI_IDEAL_LAB_H
#define CI_IDEAL_LAB_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CiStatus {
  CI_STATUS_OK = 0,
  // Malformed text, out-of-range parameters or an unknown name.
  CI_STATUS_INVALID_ARGUMENT = 1,
  CI_STATUS_NULL_POINTER = 2,
  // A resource cap stopped the computation.
  CI_STATUS_BUDGET = 3,
  // The inputs fall outside the hypotheses of the requested construction.
  CI_STATUS_HYPOTHESIS = 4,
  // An internal panic was caught.
  CI_STATUS_INTERNAL = 5,
} CiStatus;

// A reduced lexicographic Gröbner basis.
typedef struct CiGroebner CiGroebner;

typedef struct CiIdeal CiIdeal;

typedef struct CiPolynomial CiPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version, a static string (do not free).
const char *ci_version(void);

// Copy of the calling thread's last error message, or null when the last
// call succeeded. Free with `ci_string_free`.
char *ci_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void ci_string_free(char *s);

// Parses `x_1_1_1*x_2_2_1 - x_1_2_1*x_2_1_1` style text.
//
// # Safety
// `src` must be a NUL-terminated string; `out` a writable pointer slot.
enum CiStatus ci_polynomial_parse(const char *src, struct CiPolynomial **out_poly);

// Canonical text of a polynomial, or null for a null handle.
//
// # Safety
// `poly` must be null or a live handle.
char *ci_polynomial_to_string(const struct CiPolynomial *poly);

// # Safety
// `poly` must be null or a live handle; it is invalid afterwards.
void ci_polynomial_free(struct CiPolynomial *poly);

// Builds a named generator list on the `d x (k1*k2)` grid matrix.
//
// `kind` is one of `ic`, `empty`, `fs`, `fjs`, `next`, `hypergraph`;
// `zeros` is `"r,c;r,c"` (null or empty for the empty set).
//
// # Safety
// String arguments must be null or NUL-terminated; `out` writable.
enum CiStatus ci_ideal_new(const char *kind,
                           size_t d,
                           size_t k1,
                           size_t k2,
                           size_t t,
                           const char *zeros,
                           struct CiIdeal **out_ideal);

// An ad-hoc ideal from `n` polynomial handles (copied; zeros and repeats
// dropped). The grid parameters only label the result.
//
// # Safety
// `polys` must point to `n` live handles; `out` writable.
enum CiStatus ci_ideal_from_polynomials(const struct CiPolynomial *const *polys,
                                        size_t n,
                                        size_t d,
                                        size_t k1,
                                        size_t k2,
                                        size_t t,
                                        struct CiIdeal **out_ideal);

// Number of generators; 0 for a null handle.
//
// # Safety
// `ideal` must be null or a live handle.
size_t ci_ideal_len(const struct CiIdeal *ideal);

// A fresh copy of generator `index`, or null when out of range.
//
// # Safety
// `ideal` must be null or a live handle.
struct CiPolynomial *ci_ideal_generator(const struct CiIdeal *ideal, size_t index);

// # Safety
// `ideal` must be null or a live handle; it is invalid afterwards.
void ci_ideal_free(struct CiIdeal *ideal);

// Buchberger's criterion on the generators as given (lexicographic order).
// `budget` uses the CLI syntax; null means the environment default.
//
// # Safety
// `ideal` live; `budget` null or NUL-terminated; both out pointers writable.
enum CiStatus ci_ideal_verify_gb(const struct CiIdeal *ideal,
                                 const char *budget,
                                 bool *is_groebner,
                                 bool *leading_squarefree);

// Reduced lexicographic Gröbner basis of an ideal.
//
// # Safety
// `ideal` live; `budget` null or NUL-terminated; `out` writable.
enum CiStatus ci_groebner_compute(const struct CiIdeal *ideal,
                                  const char *budget,
                                  struct CiGroebner **out_basis);

// Number of basis elements; 0 for a null handle.
//
// # Safety
// `basis` must be null or a live handle.
size_t ci_groebner_len(const struct CiGroebner *basis);

// A fresh copy of basis element `index`, or null when out of range.
//
// # Safety
// `basis` must be null or a live handle.
struct CiPolynomial *ci_groebner_element(const struct CiGroebner *basis, size_t index);

// Ideal membership of `poly`.
//
// # Safety
// Handles live; `member` writable.
enum CiStatus ci_groebner_contains(const struct CiGroebner *basis,
                                   const struct CiPolynomial *poly,
                                   bool *member);

// Remainder of `poly` on division by the basis.
//
// # Safety
// Handles live; `out` writable.
enum CiStatus ci_groebner_normal_form(const struct CiGroebner *basis,
                                      const struct CiPolynomial *poly,
                                      struct CiPolynomial **out_poly);

// # Safety
// `basis` must be null or a live handle; it is invalid afterwards.
void ci_groebner_free(struct CiGroebner *basis);

// Runs one command-line invocation in process. `argv[0]` is the program
// name. Returns the exit code (0 pass, 1 fail, 2 budget, 3 usage) or -1 on
// a null argument or internal panic. The captured streams are written to
// `out_stdout` / `out_stderr` when those are non-null.
//
// # Safety
// `argv` must hold `argc` NUL-terminated strings; out pointers null or
// writable.
int ci_run(int argc, const char *const *argv, char **out_stdout, char **out_stderr);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CI_IDEAL_LAB_H */
