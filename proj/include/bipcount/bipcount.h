/* C interface to the bipcount library.
 *
 * Exact results are returned through opaque bipc_number handles (integer or
 * rational) that the caller releases with bipc_number_free. Every function
 * returns a bipc_status; on failure bipc_last_error() describes the problem
 * for the calling thread.
 */
#ifndef BIPCOUNT_BIPCOUNT_H
#define BIPCOUNT_BIPCOUNT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(BIPC_BUILDING_LIBRARY)
#    define BIPC_API __declspec(dllexport)
#  else
#    define BIPC_API __declspec(dllimport)
#  endif
#else
#  define BIPC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bipc_status {
  BIPC_OK = 0,
  BIPC_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad partition, degree mismatch */
  BIPC_ERR_REGIME = 2,           /* bound requested with n >= r */
  BIPC_ERR_CAP_EXCEEDED = 3,     /* oracle instance too large */
  BIPC_ERR_OUT_OF_RANGE = 4,     /* index past the end of a table */
  BIPC_ERR_INTERNAL = 5
} bipc_status;

typedef enum bipc_regime {
  BIPC_REGIME_ROWS_FEWER = 0, /* n < r */
  BIPC_REGIME_SQUARE = 1,     /* n = r */
  BIPC_REGIME_ROWS_MORE = 2   /* n > r */
} bipc_regime;

typedef struct bipc_number bipc_number;
typedef struct bipc_table bipc_table;

typedef struct bipc_count_options {
  unsigned workers;        /* 0 or 1: single-threaded */
  int inject_gcd_fault;    /* nonzero: deliberately corrupt the gcd table */
  int type_pairs;          /* nonzero: plain double sum over type pairs instead of
                              the recurrence for the larger side */
} bipc_count_options;

typedef struct bipc_table_row {
  unsigned n;
  unsigned r;
  double ln_lower;
  double ln_exact;
  double ln_upper;
  const char* count; /* decimal; owned by the table */
  const char* lower; /* "p" or "p/q"; owned by the table */
  const char* upper;
} bipc_table_row;

BIPC_API const char* bipc_version(void);
BIPC_API const char* bipc_status_string(bipc_status status);
/* Message for the most recent failure on this thread; "" if none. */
BIPC_API const char* bipc_last_error(void);

/* Numbers */
BIPC_API void bipc_number_free(bipc_number* x);
/* "p" or "p/q" in lowest terms; owned by x. */
BIPC_API const char* bipc_number_str(const bipc_number* x);
BIPC_API int bipc_number_is_integer(const bipc_number* x);
BIPC_API double bipc_number_to_double(const bipc_number* x);
/* Natural log; NaN for non-positive values. */
BIPC_API double bipc_number_ln(const bipc_number* x);
/* <0, 0, >0 as a <, =, > b. */
BIPC_API int bipc_number_cmp(const bipc_number* a, const bipc_number* b);
/* Fixed-point decimal with `digits` fractional digits, truncated; owned by x
 * until the next call on x. */
BIPC_API const char* bipc_number_decimal(bipc_number* x, unsigned digits);

/* Counting */
BIPC_API bipc_status bipc_count(unsigned n, unsigned r, bipc_number** out);
BIPC_API bipc_status bipc_count_ex(unsigned n, unsigned r, const bipc_count_options* options,
                                   bipc_number** out);

/* Bounds */
BIPC_API bipc_status bipc_lower_bound(unsigned n, unsigned r, bipc_number** out);
BIPC_API bipc_status bipc_upper_bound(unsigned n, unsigned r, bipc_number** out);
BIPC_API bipc_status bipc_bounds(unsigned n, unsigned r, bipc_number** lower, bipc_number** upper,
                                 bipc_regime* regime);
BIPC_API bipc_status bipc_uniform_closed_form(unsigned r, unsigned long c, bipc_number** out);

/* Per-type terms. `parts` lists cycle lengths of a row permutation type,
 * e.g. {3,1,1}; they must sum to n. */
BIPC_API bipc_status bipc_term_value(unsigned n, unsigned r, const unsigned* parts, size_t nparts,
                                     bipc_number** out);
BIPC_API bipc_status bipc_second_term_value(unsigned n, unsigned r, bipc_number** out);
/* Number of row permutations with the given cycle type. */
BIPC_API bipc_status bipc_class_size(const unsigned* parts, size_t nparts, bipc_number** out);
/* Number of cycle types (partitions) of n; bipc_cycle_type fills `parts`
 * (capacity `cap`) with the i-th type in canonical order. */
BIPC_API bipc_status bipc_cycle_type_count(unsigned n, size_t* count);
BIPC_API bipc_status bipc_cycle_type(unsigned n, size_t index, unsigned* parts, size_t cap,
                                     size_t* nparts);

/* Oracles */
BIPC_API bipc_status bipc_orbit_count(unsigned n, unsigned r, unsigned max_cells, bipc_number** out);
BIPC_API bipc_status bipc_burnside_count(unsigned n, unsigned r, bipc_number** out);

/* Cycle index text dump: Z_{S_n} if r == 0, else Z_{S_n} boxtimes Z_{S_r}.
 * Returned string is malloc'd; release with bipc_string_free. */
BIPC_API bipc_status bipc_cycle_index_text(unsigned n, unsigned r, char** out);
BIPC_API void bipc_string_free(char* s);

/* Log table over 1 <= n < r <= max. */
BIPC_API bipc_status bipc_table_create(unsigned max, unsigned workers, bipc_table** out);
BIPC_API size_t bipc_table_size(const bipc_table* table);
BIPC_API bipc_status bipc_table_row_at(const bipc_table* table, size_t index, bipc_table_row* row);
BIPC_API void bipc_table_free(bipc_table* table);

#ifdef __cplusplus
}
#endif

#endif /* BIPCOUNT_BIPCOUNT_H */
