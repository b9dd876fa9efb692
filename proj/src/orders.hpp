#ifndef GBAR_ORDERS_HPP
#define GBAR_ORDERS_HPP

#include <cstdint>

#include "types.hpp"

namespace gbar {

enum class OrderFormula { parts, digit_sum, bilinear };

// ord_p(Gbar_n) (or the generalized nu_b) split into its positive and
// negative term, the way each formula naturally produces it.
//
// scale is 1 when s_plus and s_minus are the formula's terms themselves.
// For the digit-sum formula with b - 1 not dividing both 2*S_b(n) and
// (n-1)*d_b(n) individually, the undivided numerators are stored and
// scale = b - 1; value = (s_plus - s_minus) / scale is exact either way.
struct OrderDecomposition {
    OrderFormula formula;
    BigInt s_plus;
    BigInt s_minus;
    uint32_t scale = 1;
    BigInt value;
};

// Formula 1: ord_p(Gbar_n) = ord_p(D*_n) - ord_p(N*_n).
// s_plus = ord_p(D*_n) = n*ord_p(n!) - ord_p(N*_{n-1}),
// s_minus = ord_p(N*_n) = sum_{k<=n} ord_p(k!), both via de Polignac closed
// forms.  p must be prime for the result to be an order of divisibility
// (checked against a sieve in debug builds only).
OrderDecomposition ord_parts(uint64_t n, uint64_t p);

// Formula 2: nu_b(Gbar_n) = (2*S_b(n) - (n-1)*d_b(n)) / (b-1).  Defined for
// every base b >= 2; equals ord_b(Gbar_n) when b is prime.
OrderDecomposition nu_digit_sum(uint64_t n, uint32_t b);

// Formula 3: nu*_b(Gbar_n) = sum_j j*a_j*b^j
//   - ( sum_j a_j*(b^j-1)/(b-1)
//       + sum_j (n mod b^{j+1}) * floor(n / b^{j+1}) ),
// where the last sum is the bilinear term (1/b^{j+1}) * low_j * high_j
// rearranged so that every summand is an integer (b^{j+1} divides high_j).
OrderDecomposition nu_bilinear(uint64_t n, uint32_t b);

// Fast value-only evaluations used by the large range sweeps.
int64_t nu_value(uint64_t n, uint32_t b);       // digit-sum route
int64_t nu_star_value(uint64_t n, uint32_t b);  // bilinear route

// ord_p C(n,t) = (d_p(t) + d_p(n-t) - d_p(n)) / (p-1).
uint64_t ord_binomial(uint64_t n, uint64_t t, uint64_t p);

// Number of carries when adding t to n-t in base p, simulated digit by
// digit.  Independent route to ord_binomial (Kummer's theorem).
uint64_t carry_count(uint64_t n, uint64_t t, uint32_t p);

// c_j(n, t): 1 iff adding t to n-t in base p carries out of position j;
// equivalently, iff subtracting t from n borrows from position j+1, i.e.
// t mod p^{j+1} > n mod p^{j+1}.
int carry_digit(uint64_t n, uint64_t t, uint32_t p, uint32_t j);

// c_j(n) = sum_{t=0}^n c_j(n,t), via the closed form
// ((p^{j+1}-1) - (n mod p^{j+1})) * floor(n/p^{j+1}), evaluated two ways
// (from the digit vector and from modular arithmetic) which must agree.
// Vanishes for j >= floor(log_p n).
uint64_t carry_total(uint64_t n, uint32_t p, uint32_t j);

// M_p(n) = sum_j j*a_j*p^j - sum_{j>=1} a_j*(p^j-1)/(p-1): the linear part
// of the bilinear formula.  0 <= ord_p(Gbar_n) <= M_p(n), with the upper
// equality exactly at n = a*p^k and ord = 0 exactly at n = a*p^k - 1.
uint64_t upper_bound_m(uint64_t n, uint32_t p);

// n*log_b n - (n-1)/(b-1), an upper bound for nu_b(Gbar_n); tight at n = b^k.
double nu_upper_bound(uint64_t n, uint32_t b);

}  // namespace gbar

#endif
