#ifndef SCHURPRIMES_H
#define SCHURPRIMES_H

/* C interface to the schurprimes shared library.
 *
 * All functions are reentrant and touch no global state. Results come back
 * either through scalar out-parameters or as heap-allocated JSON strings the
 * caller releases with sp_string_free(). On failure, *out_error (when the
 * pointer is non-NULL) receives a JSON object {"code", "message", ...}
 * describing the fault, also released with sp_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SP_API __declspec(dllexport)
#else
#define SP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sp_status {
  SP_OK = 0,
  SP_E_BAD_ARGUMENT = 1,
  SP_E_PARSE = 2,
  SP_E_NOT_SMOOTH = 3,
  SP_E_OVERFLOW = 4,
  SP_E_CAP_EXCEEDED = 5,
  SP_E_HORIZON_EXHAUSTED = 6,
  SP_E_NOT_A_TRIPLE = 7,
  SP_E_NOT_PRIMITIVE = 8,
  SP_E_SUM_MISMATCH = 9,
  SP_E_MANTISSA_MISMATCH = 10,
  SP_E_VERIFY_FAILED = 11,
  SP_E_INTERNAL = 12
} sp_status;

typedef enum sp_triple_mode {
  SP_MODE_STRONG = 0, /* a + b = c with a <= b */
  SP_MODE_WEAK = 1    /* a + b = c with a <  b */
} sp_triple_mode;

typedef struct sp_basis sp_basis;       /* ordered finite prime basis */
typedef struct sp_coloring sp_coloring; /* total coloring of [1, n] */

SP_API const char* sp_version(void);
SP_API const char* sp_status_name(sp_status status);
SP_API void sp_string_free(char* s);

/* ---- prime basis ------------------------------------------------------ */

SP_API sp_status sp_basis_create(const uint64_t* primes, size_t count,
                                 sp_basis** out_basis, char** out_error);
SP_API void sp_basis_free(sp_basis* basis);
SP_API size_t sp_basis_size(const sp_basis* basis);
SP_API uint64_t sp_basis_prime(const sp_basis* basis, size_t index);

/* ---- colorings --------------------------------------------------------- */

SP_API sp_status sp_coloring_create(uint32_t t, const int32_t* colors,
                                    size_t n, sp_coloring** out_coloring,
                                    char** out_error);
/* Accepts the {"t", "n", "colors"} document. */
SP_API sp_status sp_coloring_parse(const char* json, sp_coloring** out_coloring,
                                   char** out_error);
SP_API void sp_coloring_free(sp_coloring* coloring);
SP_API uint32_t sp_coloring_palette(const sp_coloring* coloring);
SP_API uint64_t sp_coloring_length(const sp_coloring* coloring);
/* Color of integer x (1-based); -1 when x is out of range. */
SP_API int32_t sp_coloring_color(const sp_coloring* coloring, uint64_t x);

/* ---- operations (JSON documents out) ----------------------------------- */

/* Exact Schur number with witness and refutation bound. cap = 0 selects the
 * built-in default (63). SP_E_CAP_EXCEEDED when [1, cap] is still colorable. */
SP_API sp_status sp_schur_number(uint32_t colors, sp_triple_mode mode,
                                 uint64_t cap, char** out_json,
                                 char** out_error);

/* Lexicographically smallest monochromatic triple of the coloring, or a
 * document with "triple": null. */
SP_API sp_status sp_find_triple(const sp_coloring* coloring,
                                sp_triple_mode mode, char** out_json,
                                char** out_error);

/* rule: "const", "parity", or "mod<k>" (e.g. "mod3"). cap = 0 selects the
 * certified default for (colors, mode) and fails with SP_E_PARSE when no
 * certified cap exists for that combination. */
SP_API sp_status sp_select_triple(const char* rule, uint32_t colors,
                                  sp_triple_mode mode, uint64_t cap,
                                  char** out_json, char** out_error);

/* Fourth-power/mantissa decomposition of m over the basis. A non-smooth m is
 * an expected outcome, not an error: the call returns SP_OK with a document
 * {"smooth": false, "cofactor": ...} naming the non-smooth remainder. */
SP_API sp_status sp_decompose(const sp_basis* basis, uint64_t m,
                              char** out_json, char** out_error);

/* Smallest non-basis-smooth integer (a prime outside the basis). Either
 * out-parameter may be NULL. */
SP_API sp_status sp_euclid_witness(const sp_basis* basis,
                                   uint64_t* out_witness, char** out_json,
                                   char** out_error);

/* Exhaustive monochromatic same-mantissa triple sweep over smooth numbers. */
SP_API sp_status sp_sweep_triples(const sp_basis* basis, uint64_t bound,
                                  sp_triple_mode mode, char** out_json,
                                  char** out_error);

/* Exhaustive z^4 - y^4 = x^2 refutation sweep for z <= z_max. */
SP_API sp_status sp_sweep_quartic(uint64_t z_max, char** out_json,
                                  char** out_error);

/* Full demonstrator: Euclid witness plus weak-mode mantissa sweep. */
SP_API sp_status sp_proof_demo(const sp_basis* basis, uint64_t bound,
                               char** out_json, char** out_error);

/* Re-checks any document emitted by the operations above. SP_OK: verified.
 * SP_E_VERIFY_FAILED: out_report names the first violated invariant. */
SP_API sp_status sp_verify_document(const char* json, char** out_report,
                                    char** out_error);

#ifdef __cplusplus
}
#endif

#endif /* SCHURPRIMES_H */
