#ifndef GBAR_EXACT_HPP
#define GBAR_EXACT_HPP

#include <cstdint>
#include <vector>

#include "types.hpp"

namespace gbar {

// n!, exact; factorial(0) = 1.
BigInt factorial(uint64_t n);

// N*_n = prod_{k=1}^n k!   (empty product = 1)
BigInt superfactorial(uint64_t n);

// D*_n = prod_{k=1}^n k^k  (empty product = 1)
BigInt hyperfactorial(uint64_t n);

// C(n, t), exact; rejects t > n.
BigInt binomial(uint64_t n, uint64_t t);

// Gbar_n = prod_{k=0}^n C(n,k), computed two independent ways (direct
// binomial product and D*_n / N*_n with an exact-division check) which must
// agree; throws InternalInconsistency otherwise.  binomial_product(0) = 1.
//
// Unbounded: callers wanting the configurable cap go through the C API or
// check exact_cap() themselves.
BigInt binomial_product(uint64_t n);

// Largest e with base^e | value, by repeated exact division.  value >= 1,
// base >= 2 (base need not be prime; composite bases are meaningful for the
// divergence checks against nu_b).
uint64_t ord_trial_division(const BigInt& value, uint64_t base);

// ord_p(n!) by de Polignac's floor sum, cross-checked against the digit-sum
// form (n - d_p(n))/(p - 1); the two must agree for every base >= 2.
// Accepts any p in [2, 2^32); primality is the caller's concern.
uint64_t ord_factorial(uint64_t n, uint64_t p);

// Phi*(n) = C(n+1, 2) = n(n+1)/2, the count of positive unreduced Farey
// fractions of order n.
BigInt farey_count(uint64_t n);

// Exact-computation cap for Gbar_n (Gbar_2000 already has ~2.9 million
// bits).  Default 2000, overridable by the GBAR_EXACT_CAP environment
// variable; set_exact_cap(0) restores that default.
uint64_t exact_cap();
void set_exact_cap(uint64_t cap);

// Incremental sweep of exact Gbar_n values via Gbar_n = Gbar_{n-1} * n^n / n!.
// Far cheaper than recomputing binomial_product at every n of a range.
class GbarSweep {
public:
    GbarSweep();  // positioned at n = 0, value 1

    uint64_t n() const { return n_; }
    const BigInt& value() const { return gbar_; }
    void advance();  // move to n + 1

private:
    uint64_t n_;
    BigInt gbar_;
    BigInt factorial_;
};

// Multiplies the given factors pairwise in a balanced tree, which keeps the
// operands of the big multiplications comparable in size.
BigInt product_tree(std::vector<BigInt> factors);

}  // namespace gbar

#endif
