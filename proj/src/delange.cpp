#include "delange.hpp"

#include <cmath>

#include "radix.hpp"

namespace gbar {

Real delange_at_integer(uint64_t n, uint32_t b) {
    real_init();
    if (n < 1) throw InvalidArgument("delange_at_integer: n must be >= 1");
    if (b < 2) throw InvalidArgument("delange_at_integer: base must be >= 2");
    const Real s(running_digit_sum(n, b));
    return s / n - Real(b - 1) / 2 * log(Real(n)) / log(Real(b));
}

DelangeSample delange_sample(uint64_t n, uint32_t b) {
    real_init();
    DelangeSample s;
    s.n_used = n;
    Real x = log(Real(n)) / log(Real(b));
    x -= floor(x);
    // At n = b^k rounding can land the quotient just below an integer; the
    // true fractional part of log_b n is never within 1e-40 of 1 for any
    // other representable n, so this snap only removes that artifact.
    if (1 - x < 1e-40) x = 0;
    s.x = x.convert_to<double>();
    s.value = delange_at_integer(n, b).convert_to<double>();
    return s;
}

Real takagi(const Real& x, double tol) {
    real_init();
    if (x < 0 || x > 1) throw InvalidArgument("takagi: x must be in [0, 1]");
    if (!(tol > 0)) throw InvalidArgument("takagi: tol must be positive");
    const unsigned max_terms =
        static_cast<unsigned>(std::ceil(std::log2(1.0 / tol))) + 2;
    Real sum = 0;
    Real weight = 1;  // 2^{-m}
    Real y = x;       // frac(2^m x); doubling and the -1 reduction are exact
    for (unsigned m = 0; m <= max_terms && y != 0; ++m) {
        sum += weight * (y <= Real(1) / 2 ? y : 1 - y);
        weight /= 2;
        y *= 2;
        if (y >= 1) y -= 1;
    }
    return sum;
}

Real f2_from_takagi(const Real& x) {
    real_init();
    Real t = x;
    if (t < 0 || t > 1) t -= floor(t);
    const Real p = exp(t * const_ln2());  // 2^x
    const Real u = p - 1;                 // in [0, 1]
    // From the self-similar closed form S_2(2^m(1+t)) = mn/2 + 2^m (t - tau(t)/2):
    // f_2(x) = (u - tau(u)/2)/2^x - x/2.
    return (u - takagi(u) / 2) / p - t / 2;
}

double fourier_c0(uint32_t b) {
    if (b < 2) throw InvalidArgument("fourier_c0: base must be >= 2");
    const double lb = std::log(static_cast<double>(b));
    const double l2pi = std::log(8 * std::atan(1.0));
    return (b - 1) / (2 * lb) * (l2pi - 1) - (b + 1) / 4.0;
}

DgMagnitudeReport dg_magnitude_check(uint32_t b, uint64_t samples) {
    if (b < 3) throw InvalidArgument("dg_magnitude_check: bound requires b >= 3");
    if (samples < 1) throw InvalidArgument("dg_magnitude_check: need samples >= 1");
    DgMagnitudeReport rep;
    rep.b = b;
    rep.samples = samples;
    rep.bound = (b - 1.0) / (b - 2.0) * std::log(b - 1.0) / std::log(double(b));
    // Deterministic grid over one period: n = round(b^{m + x}) with b^m large
    // enough that the x discretization is negligible.
    const double lb = std::log2(double(b));
    const unsigned m = static_cast<unsigned>(std::ceil(20.0 / lb));
    const double base_pow = std::pow(double(b), double(m));
    double max_scaled = 0;
    for (uint64_t i = 0; i < samples; ++i) {
        const double x = (i + 0.5) / double(samples);
        const uint64_t n =
            static_cast<uint64_t>(std::llround(base_pow * std::pow(double(b), x)));
        const DelangeSample s = delange_sample(n, b);
        max_scaled = std::max(max_scaled, 2.0 * std::fabs(s.value) / (b - 1.0));
    }
    rep.max_scaled = max_scaled;
    rep.ok = max_scaled < rep.bound;
    return rep;
}

}  // namespace gbar
