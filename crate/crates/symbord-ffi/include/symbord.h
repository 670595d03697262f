/*
 * C interface to the symbord library.
 *
 * Conventions:
 *   - Every function returns a SymbStatus; results travel through
 *     out-parameters.
 *   - Strings are NUL-terminated UTF-8. Strings returned by the library
 *     must be released with symb_string_free; strings passed in are
 *     borrowed for the duration of the call.
 *   - Order relations are opaque SymbOrder handles created by
 *     symb_order_build and released with symb_order_free.
 *   - No call panics across the boundary; internal failures surface as
 *     SYMB_STATUS_INTERNAL.
 *
 * Bipartitions are written "lambda|mu" with dot-separated parts and "-"
 * for the empty partition, for example "3.2|-" or "-|2.2.1".
 */

#ifndef SYMBORD_H
#define SYMBORD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum SymbStatus {
  SYMB_STATUS_OK = 0,
  SYMB_STATUS_NULL_POINTER = 1,
  SYMB_STATUS_INVALID_UTF8 = 2,
  SYMB_STATUS_INVALID_INPUT = 3,
  SYMB_STATUS_INTERNAL = 4,
} SymbStatus;

/* An order relation on the bipartitions of one rank. Opaque. */
typedef struct SymbOrder SymbOrder;

/* Releases a string returned by this library. Null is a no-op. */
void symb_string_free(char *ptr);

/* a-invariant of a bipartition at weight (a, b), written to *out. */
SymbStatus symb_a_invariant(uint64_t a, uint64_t b, const char *bipartition,
                            int64_t *out);

/* omega invariant of a bipartition at weight (a, b), written to *out. */
SymbStatus symb_omega(uint64_t a, uint64_t b, const char *bipartition,
                      int64_t *out);

/*
 * Symbol of a bipartition at weight (a, b) as a JSON string, written to
 * *out. A negative level selects the smallest level that holds both
 * rows. Free the string with symb_string_free.
 */
SymbStatus symb_symbol_json(uint64_t a, uint64_t b, const char *bipartition,
                            int64_t level, char **out);

/*
 * Builds an order relation on the bipartitions of rank n and writes a
 * handle to *out. kind is one of "ab", "L", "dominance", "pi"; the
 * recursive kind "L" refuses ranks above bound. Release the handle with
 * symb_order_free.
 */
SymbStatus symb_order_build(uint64_t a, uint64_t b, uint64_t n,
                            const char *kind, uint64_t bound,
                            SymbOrder **out);

/* Releases an order handle. Null is a no-op. */
void symb_order_free(SymbOrder *order);

/* Number of labels in the ground set, written to *out. */
SymbStatus symb_order_len(const SymbOrder *order, uint64_t *out);

/* Number of related pairs, written to *out. */
SymbStatus symb_order_pair_count(const SymbOrder *order, uint64_t *out);

/*
 * Writes 1 to *out when low <= high in the relation, 0 otherwise.
 * Unknown labels are rejected with SYMB_STATUS_INVALID_INPUT.
 */
SymbStatus symb_order_holds(const SymbOrder *order, const char *low,
                            const char *high, int *out);

/*
 * Renders the relation as a JSON string (ground labels plus index
 * pairs), written to *out. Free the string with symb_string_free.
 */
SymbStatus symb_order_json(const SymbOrder *order, char **out);

/*
 * Runs one named verification check and writes its JSON report to *out.
 * The report's "passed" field carries the verdict; the status code only
 * reports usage problems. Free the string with symb_string_free.
 */
SymbStatus symb_verify_check(const char *name, char **out);

#ifdef __cplusplus
}
#endif

#endif /* SYMBORD_H */
