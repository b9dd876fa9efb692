/*
 * gbar - exact arithmetic for complete products of binomial coefficients
 *        Gbar_n = prod_{k=0}^{n} C(n,k), their prime/base-b order functions,
 *        asymptotic expansions, and prime-counting consequences.
 *
 * C interface over the C++ core.  All big values cross the boundary either
 * as opaque gbar_nat handles or as malloc'd decimal strings; every function
 * reports a gbar_status.  Strings returned through char** are owned by the
 * caller and must be released with gbar_str_free().
 */
#ifndef GBAR_H
#define GBAR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gbar_status {
    GBAR_OK = 0,
    GBAR_EINVAL = 1,    /* invalid argument (base < 2, t > n, bad name, ...) */
    GBAR_ECAP = 2,      /* exact computation requested above the cap */
    GBAR_EINTERNAL = 3, /* internal consistency check tripped */
    GBAR_EOVERFLOW = 4  /* result does not fit the requested fixed width */
} gbar_status;

const char* gbar_status_str(gbar_status s);
const char* gbar_version(void);
void gbar_str_free(char* s);

/* ---- arbitrary-precision naturals (opaque) ---------------------------- */

typedef struct gbar_nat gbar_nat;

gbar_nat* gbar_nat_from_u64(uint64_t v);
gbar_nat* gbar_nat_from_str(const char* decimal); /* NULL on parse error */
char* gbar_nat_to_str(const gbar_nat* v);
int gbar_nat_cmp(const gbar_nat* a, const gbar_nat* b);
void gbar_nat_free(gbar_nat* v);

/* ---- exact products ---------------------------------------------------- */

/* Cap for exact Gbar_n computations (default 2000, or GBAR_EXACT_CAP from
 * the environment).  gbar_exact_cap_set(0) restores the default. */
uint64_t gbar_exact_cap(void);
void gbar_exact_cap_set(uint64_t cap);

gbar_status gbar_factorial(uint64_t n, gbar_nat** out);
gbar_status gbar_superfactorial(uint64_t n, gbar_nat** out);
gbar_status gbar_hyperfactorial(uint64_t n, gbar_nat** out);
gbar_status gbar_binomial(uint64_t n, uint64_t t, gbar_nat** out);
/* Gbar_n, dual-route checked; GBAR_ECAP above the cap. */
gbar_status gbar_binomial_product(uint64_t n, gbar_nat** out);
/* Largest e with base^e | value, by repeated division; base >= 2 (need not
 * be prime). */
gbar_status gbar_ord_trial_division(const gbar_nat* value, uint64_t base,
                                    uint64_t* out);
/* ord_p(n!) by de Polignac's formula (floor-sum and digit forms, checked). */
gbar_status gbar_ord_factorial(uint64_t n, uint64_t p, uint64_t* out);
/* Phi*(n) = n(n+1)/2, the unreduced Farey fraction count. */
gbar_status gbar_farey_count(uint64_t n, gbar_nat** out);

/* ---- radix expansions -------------------------------------------------- */

/* Base-b digits of n, least significant first; *len receives the count.
 * GBAR_EOVERFLOW if the buffer is too small (64 slots always suffice). */
gbar_status gbar_digits(uint64_t n, uint32_t base, uint32_t* digits,
                        size_t capacity, size_t* len);
gbar_status gbar_digit_sum(uint64_t n, uint32_t base, uint64_t* out);
gbar_status gbar_running_digit_sum(uint64_t n, uint32_t base, gbar_nat** out);

/* ---- order formulas ---------------------------------------------------- */

typedef enum gbar_formula {
    GBAR_FORMULA_PARTS = 0,     /* ord(D*) - ord(N*) */
    GBAR_FORMULA_DIGIT_SUM = 1, /* (2 S_b(n) - (n-1) d_b(n)) / (b-1) */
    GBAR_FORMULA_BILINEAR = 2   /* radix-expansion linear+bilinear form */
} gbar_formula;

/* Positive/negative term decomposition.  The stored strings are decimal;
 * divide s_plus and s_minus by scale to recover the formula's terms (scale
 * is 1 unless the digit-sum terms are kept as undivided numerators). */
typedef struct gbar_ord_decomp {
    int formula; /* gbar_formula */
    uint32_t scale;
    char* s_plus;
    char* s_minus;
    char* value;
} gbar_ord_decomp;

void gbar_ord_decomp_clear(gbar_ord_decomp* d);

gbar_status gbar_ord_parts(uint64_t n, uint64_t p, gbar_ord_decomp* out);
gbar_status gbar_nu_digit_sum(uint64_t n, uint32_t b, gbar_ord_decomp* out);
gbar_status gbar_nu_bilinear(uint64_t n, uint32_t b, gbar_ord_decomp* out);

gbar_status gbar_ord_binomial(uint64_t n, uint64_t t, uint64_t p, uint64_t* out);
gbar_status gbar_carry_digit(uint64_t n, uint64_t t, uint32_t p, uint32_t j,
                             int* out);
gbar_status gbar_carry_total(uint64_t n, uint32_t p, uint32_t j, uint64_t* out);
gbar_status gbar_upper_bound_m(uint64_t n, uint32_t p, uint64_t* out);
gbar_status gbar_nu_upper_bound(uint64_t n, uint32_t b, double* out);

/* ---- asymptotic expansions --------------------------------------------- */

/* Exact rationals as "p/q" decimal strings. */
gbar_status gbar_bernoulli(uint32_t k, char** out);
gbar_status gbar_coeff_c(uint32_t j, char** out);
gbar_status gbar_coeff_d(uint32_t j, char** out);
gbar_status gbar_coeff_g(uint32_t j, char** out);

/* Truncated series values (order <= 12). */
gbar_status gbar_log_gbar_series(uint64_t n, uint32_t order, double* out);
gbar_status gbar_log_superfactorial_series(uint64_t n, uint32_t order, double* out);
gbar_status gbar_log_hyperfactorial_series(uint64_t n, uint32_t order, double* out);

/* Glaisher-Kinkelin constant to `digits` decimal digits (1..50). */
gbar_status gbar_glaisher(uint32_t digits, char** out);

/* ---- Delange / Takagi --------------------------------------------------- */

gbar_status gbar_delange_at_integer(uint64_t n, uint32_t b, double* out);
gbar_status gbar_takagi(double x, double tol, double* out);
gbar_status gbar_f2_from_takagi(double x, double* out);
gbar_status gbar_fourier_c0(uint32_t b, double* out);

/* ---- prime statistics --------------------------------------------------- */

gbar_status gbar_prime_count(uint64_t x, uint64_t* out);
gbar_status gbar_chebyshev_check(uint64_t n, uint64_t* pi_n, double* bound,
                                 int* ok);
gbar_status gbar_pnt_residual(uint64_t n, double* out);

/* ---- formatted emitters (the CLI's backing) ----------------------------- */

gbar_status gbar_emit_gbar(uint64_t n, int factored, char** out);
gbar_status gbar_emit_table(uint64_t p, uint64_t max, int csv, char** out);
gbar_status gbar_emit_series(uint64_t p, uint64_t max, int scaled, char** out);
gbar_status gbar_emit_delange(uint32_t b, uint32_t grid, char** out);
gbar_status gbar_emit_asym(uint64_t n, uint32_t order, char** out);
gbar_status gbar_emit_primes(uint64_t n, int csv, char** out);
gbar_status gbar_emit_ord(uint64_t n, uint64_t p, int csv, char** out);
gbar_status gbar_emit_nu(uint64_t n, uint32_t b, int csv, char** out);

/* ---- verification suites ------------------------------------------------ */

/* Runs the named invariant suite.  *passed is 1/0; *report (optional) gets
 * a human-readable summary.  Unknown names give GBAR_EINVAL. */
gbar_status gbar_verify_suite(const char* name, int* passed, char** report);
/* Newline-separated list of suite names. */
char* gbar_verify_suite_list(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GBAR_H */
