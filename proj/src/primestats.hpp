#ifndef GBAR_PRIMESTATS_HPP
#define GBAR_PRIMESTATS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "types.hpp"

namespace gbar {

struct PrimeTable {
    uint64_t limit = 0;
    std::vector<uint32_t> primes;  // ascending, complete up to limit

    // pi(x) for x <= limit.
    uint64_t count_upto(uint64_t x) const;
    bool contains(uint64_t p) const;
};

// Sieve of Eratosthenes; limit >= 2.
PrimeTable sieve(uint64_t limit);

// Prime factorization of Gbar_n as (p, ord_p(Gbar_n)) pairs with positive
// exponents, each exponent from the digit-sum order formula.
std::vector<std::pair<uint32_t, uint64_t>> factor_gbar(uint64_t n);

// Rebuilds prod p^{ord_p(Gbar_n)} as an exact integer and compares it with
// binomial_product(n) bit for bit.  A single passing n validates every
// per-prime order formula at that n simultaneously.
struct FactorizationReport {
    uint64_t n = 0;
    bool ok = false;
    BigInt gbar;
    BigInt reconstructed;
    std::vector<std::pair<uint32_t, uint64_t>> factors;
};
FactorizationReport factorization_identity(uint64_t n);

// pi(n) >= n/(2 log n) - 1/2 plus the two links of the derivation chain:
//   log Gbar_n >= n^2/2 - (n/2) log n          (lower)
//   log Gbar_n <= pi(n) * n * log n            (upper)
// log Gbar_n is exact below the computation cap and comes from the order-4
// expansion above it (error ~1e-8 at n >= 2000, negligible against the
// n*log n scale of everything compared here).
struct ChebyshevReport {
    uint64_t n = 0;
    uint64_t pi_n = 0;
    double bound = 0;
    bool ok = false;        // pi(n) >= bound
    double log_gbar = 0;
    bool lower_ok = false;  // the (lower) link
    bool upper_ok = false;  // the (upper) link
};
// with_chain = false skips the log Gbar_n evaluation (which is an exact
// big-integer computation below the cap) so dense sweeps stay cheap.
ChebyshevReport chebyshev_lower_bound(uint64_t n, const PrimeTable& pt,
                                      bool with_chain = true);

// (log Gbar_n - pi(n) n log n / 2) / n^2: the residual whose o(1) decay is
// equivalent to the prime number theorem.
double pnt_residual(uint64_t n, const PrimeTable& pt);

// log Gbar_n: exact (big-integer) below the cap, series above.
Real log_gbar_estimate(uint64_t n);

}  // namespace gbar

#endif
