#ifndef GBAR_ASYMPTOTICS_HPP
#define GBAR_ASYMPTOTICS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "types.hpp"

namespace gbar {

// Bernoulli number B_k (B_1 = -1/2 convention), by the defining recurrence
// sum_{j=0}^{k} C(k+1, j) B_j = 0.
BigRat bernoulli(unsigned k);

// Tail coefficients of the three expansions (index j >= 1):
//   log N*_n  ~ heads + c_0 + sum c_j / n^j
//   log D*_n  ~ heads + d_0 + sum d_j / n^j
//   log Gbar_n ~ heads + g_0 + sum g_j / n^j
// Closed forms: c_{2k-1} = B_{2k}/((2k)(2k-1)),   c_{2k} = B_{2k+2}/(2k(2k+2)),
//               d_{2k-1} = 0,                     d_{2k} = -B_{2k+2}/(2k(2k+1)(2k+2)),
//               g_{2k-1} = -c_{2k-1},             g_{2k} = -B_{2k+2}/(2k(2k+1)),
// and g_j = d_j - c_j identically.
BigRat coeff_c(unsigned j);
BigRat coeff_d(unsigned j);
BigRat coeff_g(unsigned j);

// A truncated asymptotic series evaluation: the labelled per-term
// contributions and their sum.
struct ExpansionResult {
    Real value;
    unsigned order = 0;
    std::vector<std::pair<std::string, Real>> terms;
};

// The expansions are divergent in the limit of infinite order; tail terms
// eventually grow (|B_2k| blows up superexponentially), so the useful
// truncation order is bounded.  Orders above this are rejected.
inline constexpr unsigned kMaxExpansionOrder = 12;

// log Gamma(z+1) = z log z - z + (1/2) log z + (1/2) log 2pi
//                  + sum_{k=1}^{N} B_{2k}/(2k(2k-1)) z^{1-2k} + O(z^{-2N-1}).
// Only evaluated on the real ray z >= 2.
ExpansionResult log_gamma_series(const Real& z, unsigned order);

// log G(z+1) = (z^2/2) log z - 3z^2/4 + (z/2) log 2pi - (1/12) log z
//              + (1/12 - log A)
//              + sum_{k=1}^{N} B_{2k+2}/(2k(2k+2)) z^{-2k} + O(z^{-2N-2}),
// with A the Glaisher-Kinkelin constant.  z >= 2.
ExpansionResult log_barnes_g_series(const Real& z, unsigned order);

// Truncated expansions at integer n >= 2 (heads as documented above the
// coefficient accessors).
ExpansionResult log_superfactorial_series(uint64_t n, unsigned order);
ExpansionResult log_hyperfactorial_series(uint64_t n, unsigned order);
ExpansionResult log_gbar_series(uint64_t n, unsigned order);

// The Glaisher-Kinkelin constant A = exp(1/12 - zeta'(-1)) ~ 1.2824271291.
// Recovered from the exact superfactorial oracle: log A is solved from
// log N*_n minus every other expansion term at n = 400 and n = 800 (internal
// order 20), Richardson-extrapolated in 1/n, and cross-checked against the
// 11 known leading digits.  Accurate well past 50 decimal digits.
const Real& glaisher_constant();
std::string glaisher_constant_str(unsigned digits);  // 1 <= digits <= 50

// Single-run oracle estimate of log A at a given n (exposed for the
// stability tests).
Real glaisher_log_estimate(uint64_t n, unsigned order);

}  // namespace gbar

#endif
