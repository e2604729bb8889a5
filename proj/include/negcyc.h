/* negcyc — exact and statistical toolkit for elements with only negative
 * (or only positive) cycles in the Weyl groups W(B_n) and W(D_n).
 *
 * C interface of the shared library. Objects are opaque handles created and
 * released through this API; every fallible call returns an nc_status and
 * leaves a thread-local message retrievable with nc_last_error(). Counts
 * and proportions cross the boundary as decimal strings ("num/den" for
 * rationals) so no precision is ever lost; free them with nc_string_free().
 */
#ifndef NEGCYC_H
#define NEGCYC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nc_status {
    NC_OK = 0,
    NC_EINVAL = 1,    /* invalid argument */
    NC_ERANGE = 2,    /* above an enumeration cap */
    NC_EINTERNAL = 3, /* internal consistency failure (two-route mismatch) */
    NC_ENOMEM = 4,
    NC_EUNKNOWN = 5
} nc_status;

const char* nc_version(void);
const char* nc_status_str(nc_status s);
/* message from the most recent failing call on this thread ("" if none) */
const char* nc_last_error(void);

void nc_string_free(char* s);

/* ---------- elements of W(B_n), window notation ---------- */

typedef struct nc_perm nc_perm;

nc_status nc_perm_identity(uint32_t n, nc_perm** out);
/* text form "[-1,+2]"; '+' is optional on input */
nc_status nc_perm_parse(const char* text, nc_perm** out);
nc_status nc_perm_from_window(const int32_t* window, uint32_t n, nc_perm** out);
void nc_perm_free(nc_perm* w);

uint32_t nc_perm_rank(const nc_perm* w);
/* signed image of i (1-based); 0 on a bad index */
int32_t nc_perm_image(const nc_perm* w, uint32_t i);
nc_status nc_perm_str(const nc_perm* w, char** out);
int nc_perm_equal(const nc_perm* a, const nc_perm* b);

/* group law: b acts first */
nc_status nc_perm_compose(const nc_perm* a, const nc_perm* b, nc_perm** out);
nc_status nc_perm_inverse(const nc_perm* w, nc_perm** out);
/* left-multiply by the transpositions (i,i') for each pair index given */
nc_status nc_perm_flip(const nc_perm* w, const uint32_t* pairs, size_t count, nc_perm** out);

/* Cycle structure. Call with neg/pos NULL to query the counts, then with
 * buffers of at least that size; lengths are ascending. */
nc_status nc_perm_cycles(const nc_perm* w, uint32_t* neg, size_t* neg_count,
                         uint32_t* pos, size_t* pos_count);
/* sign vector: one +1/-1 per projected cycle, canonical cycle order */
nc_status nc_perm_sign_vector(const nc_perm* w, int8_t* entries, size_t* count);

int nc_perm_only_negative(const nc_perm* w);
int nc_perm_only_positive(const nc_perm* w);
int nc_perm_in_d(const nc_perm* w);

/* ---------- exact counts and proportions ---------- */

nc_status nc_stirling1(uint64_t n, uint64_t k, char** out);
nc_status nc_double_factorial_odd(uint64_t n, char** out); /* (2n-1)!! */
nc_status nc_group_order_b(uint32_t n, char** out);        /* 2^n n!   */
nc_status nc_count_neg_b(uint32_t n, char** out);
nc_status nc_count_pos_b(uint32_t n, char** out);
nc_status nc_count_neg_d(uint32_t n, char** out);
nc_status nc_count_neg_coset(uint32_t n, char** out);
nc_status nc_proportion_p(uint32_t n, char** out);       /* "num/den", reduced */
nc_status nc_proportion_p_plus(uint32_t n, char** out);
nc_status nc_proportion_p_minus(uint32_t n, char** out);
/* fixed-point decimal of a "num/den" string, round half away from zero,
 * trailing zeros trimmed to at least one decimal */
nc_status nc_rational_decimal(const char* rational, uint32_t frac_digits, char** out);

/* ---------- proportion table ---------- */

typedef struct nc_table nc_table;

/* rows 1..max_n in one rolling pass; every row up to the cross-check bound
 * is verified against the Stirling-sum route while building */
nc_status nc_table_build(uint32_t max_n, nc_table** out);
void nc_table_free(nc_table* t);
uint32_t nc_table_rows(const nc_table* t);
const char* nc_table_csv_header(void);
nc_status nc_table_csv_row(const nc_table* t, uint32_t index, char** out);
nc_status nc_table_json_row(const nc_table* t, uint32_t index, char** out);

/* ---------- Monte Carlo estimation ---------- */

typedef struct nc_estimate nc_estimate;

/* selector is "B", "D" or "coset"; threads = 0 picks the hardware count
 * (the report is identical for every thread count) */
nc_status nc_estimate_run(const char* selector, uint32_t n, uint64_t trials, uint64_t seed,
                          uint32_t threads, nc_estimate** out);
void nc_estimate_free(nc_estimate* r);
uint64_t nc_estimate_hits(const nc_estimate* r);
double nc_estimate_z_score(const nc_estimate* r);
/* 1 when the exact value is 0 or 1 and the estimate disagrees */
int nc_estimate_degenerate(const nc_estimate* r);
const char* nc_estimate_csv_header(void);
nc_status nc_estimate_csv(const nc_estimate* r, char** out);
nc_status nc_estimate_json(const nc_estimate* r, char** out);

/* ---------- asymptotic bound p(n) < h(n) ---------- */

typedef struct nc_bound nc_bound;

/* certifies p(n) < h(n) in the squared form, escalating 128 -> 4096 bits,
 * and carries the p/h ratio enclosure at the final precision */
nc_status nc_bound_run(uint64_t n, nc_bound** out);
void nc_bound_free(nc_bound* r);
const char* nc_bound_verdict(const nc_bound* r); /* "certified_true" etc. */
uint32_t nc_bound_precision_bits(const nc_bound* r);
const char* nc_bound_csv_header(void);
nc_status nc_bound_csv(const nc_bound* r, char** out);
nc_status nc_bound_json(const nc_bound* r, char** out);

/* log-spaced integer grid 1..max_n; *count holds the buffer size on entry
 * and the grid size on return (call with out = NULL to query) */
nc_status nc_log_grid(uint64_t max_n, uint32_t steps, uint64_t* out, size_t* count);

/* factorial bounds sqrt(2 pi n)(n/e)^n < n! < (1+1/(11n)) * same:
 * *result is 1 certified, 0 refuted, -1 undecided */
nc_status nc_check_stirling_bounds(uint64_t n, int* result);

/* ---------- brute-force oracle ---------- */

void nc_oracle_caps(uint32_t* enum_cap, uint32_t* lemma_cap, uint32_t* flip_cap);
nc_status nc_brute_counts(uint32_t n, uint32_t threads, char** neg_b, char** neg_d,
                          char** neg_coset, char** pos_b);
nc_status nc_brute_counts_json(uint32_t n, uint32_t threads, char** out);
/* *ok = 1 when every fiber splits into 2^k classes of 2^(n-k) elements;
 * on failure *detail (when non-NULL) receives the first counterexample */
nc_status nc_verify_lemma(uint32_t n, int* ok, char** detail);
nc_status nc_verify_flip_bijection(uint32_t n, int* ok, char** detail);

#ifdef __cplusplus
}
#endif

#endif /* NEGCYC_H */
