#ifndef GBAR_EMIT_HPP
#define GBAR_EMIT_HPP

#include <cstdint>
#include <string>

namespace gbar {

// Real values in emitted output: 12 significant digits, locale-independent
// ('.' decimal point, via std::to_chars), always carrying a decimal point or
// exponent so integer and real columns cannot be confused.
std::string format_real(double v);

// The order-formula comparison table for prime p, rows 1..max.
// Columns: n, ord_p(D*_n), ord_p(N*_n), then S+/S- of the digit-sum and
// bilinear decompositions, then ord_p(Gbar_n).  Digit-sum entries for p > 3
// may be exact non-integer rationals; they are emitted as reduced fractions.
std::string table_csv(uint64_t p, uint64_t max);
std::string table_text(uint64_t p, uint64_t max);

// rows n,value for n = 1..max: ord_p(Gbar_n), or with `scaled` the ratio
// ord_p(Gbar_n) / (0.5 n log_p n) (0 at n = 1 where the scale vanishes).
std::string series_csv(uint64_t p, uint64_t max, bool scaled);

// rows x,f over one period of f_b.  Base 2 evaluates on an exact uniform
// grid through the Takagi bridge; other bases sample the nearest integer
// points n ~ b^{m+x}.
std::string delange_csv(uint32_t b, uint32_t grid);

// Text report for the truncated log Gbar_n expansion: each term, the series
// total, and (below the exact cap) the exact value and residual.
std::string asym_report(uint64_t n, unsigned order);

// "96 = 2^5 * 3" style factorization line for Gbar_n (below the exact cap).
std::string factor_string(uint64_t n);

// Plain Gbar_n decimal (below the exact cap).
std::string gbar_string(uint64_t n);

// Prime-counting report at n: pi, Chebyshev bound, chain checks, residual.
std::string prime_report_text(uint64_t n);

// Per-prime CSV at fixed n: p, ord_p(Gbar_n), ord_p(Gbar_n)/(n log_p n).
std::string prime_ratios_csv(uint64_t n);

// Three-formula report for ord_p(Gbar_n) (text or CSV).
std::string ord_report(uint64_t n, uint64_t p, bool csv);

// Generalized-order report for nu_b(Gbar_n), including the trial-division
// comparison when Gbar_n is exactly computable.
std::string nu_report(uint64_t n, uint32_t b, bool csv);

}  // namespace gbar

#endif
