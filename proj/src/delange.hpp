#ifndef GBAR_DELANGE_HPP
#define GBAR_DELANGE_HPP

#include <cstdint>

#include "types.hpp"

namespace gbar {

// One evaluation of the periodic function f_b at the sample point
// x = frac(log_b n) realized by the integer n.
struct DelangeSample {
    double x = 0;
    uint64_t n_used = 0;
    double value = 0;
};

// f_b(log_b n) = S_b(n)/n - ((b-1)/2) log_b n, from the exact running digit
// sum.  Nonpositive everywhere; zero exactly at n = b^k.
Real delange_at_integer(uint64_t n, uint32_t b);

// The sample realized by n: x = frac(log_b n) and f_b(x).
DelangeSample delange_sample(uint64_t n, uint32_t b);

// Takagi's function tau(x) = sum_{m>=0} 2^{-m} <<2^m x>> on [0, 1], where
// <<y>> is the distance from y to the nearest integer.  For dyadic x the
// series terminates exactly; otherwise it is truncated once the geometric
// tail is below tol (M = ceil(log2(1/tol)) + 1 terms suffice).
Real takagi(const Real& x, double tol = 1e-30);

// f_2 recovered from the Takagi function.  The exact self-similar form of
// the running digit sum, S_2(2^m(1+t)) = mn/2 + 2^m (t - tau(t)/2), gives
//   f_2(x) = (u - tau(u)/2)/2^x - x/2,   u = 2^x - 1,
// on [0, 1]; arguments outside [0, 1] are reduced mod 1 first (f_2 is
// 1-periodic, and the two endpoint evaluations agree at 0).
Real f2_from_takagi(const Real& x);

// Constant Fourier coefficient of f_b:
//   c_b(0) = (b-1)/(2 log b) * (log(2pi) - 1) - (b+1)/4.
double fourier_c0(uint32_t b);

// Sampled check of the magnitude bound
//   (2/(b-1)) |f_b(x)| <= ((b-1)/(b-2)) (log(b-1)/log b),   b >= 3,
// over a deterministic grid of sample points.
struct DgMagnitudeReport {
    uint32_t b = 0;
    uint64_t samples = 0;
    double max_scaled = 0;  // max over samples of (2/(b-1))|f_b|
    double bound = 0;
    bool ok = false;
};
DgMagnitudeReport dg_magnitude_check(uint32_t b, uint64_t samples = 10000);

}  // namespace gbar

#endif
