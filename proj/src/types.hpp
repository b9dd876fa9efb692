#ifndef GBAR_TYPES_HPP
#define GBAR_TYPES_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gbar {

// Arbitrary-precision integer (GMP). Used unsigned by convention for the
// "Natural" quantities (factorial products, digit sums); signed where a
// difference of positive terms is stored.
using BigInt = boost::multiprecision::mpz_int;

// Exact rational in lowest terms (GMP). Houses Bernoulli numbers and the
// series coefficients.
using BigRat = boost::multiprecision::mpq_rational;

// Extended-precision real (MPFR). All Reals in this library are created
// after real_init() has fixed the working precision, so mixed-precision
// surprises cannot occur.
using Real = boost::multiprecision::mpfr_float;

// Decimal digits carried by every Real. 80 digits leaves ~25 digits of
// headroom over the 50-digit outputs after the worst cancellation we hit
// (subtracting ~1e7-sized series heads from exact logarithms).
inline constexpr unsigned kRealDigits = 80;

// Idempotent; call before constructing any Real.
inline void real_init() {
    static const bool once = [] {
        Real::default_precision(kRealDigits);
        return true;
    }();
    (void)once;
}

struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a dual-route computation disagrees with itself or an exact
// division leaves a remainder. Must never fire; if it does, the library
// (or its inputs) are corrupt.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ln 2, ln(2*pi) at working precision (cached).
const Real& const_ln2();
const Real& const_ln_2pi();

// ln(v) for a nonnegative big integer v >= 1.
//
// Computed as (bits - m)*ln 2 + ln(top m bits), m = 512, so the argument
// passed to mpfr never exceeds 512 bits regardless of how large v is
// (log Gbar_2000 has ~2.9 million bits).  Error: the mantissa truncation
// contributes at most 2^{1-m} ~ 1e-154 absolutely, far below the 80-digit
// working precision; the (bits)*ln2 product loses nothing because `bits`
// is exact.
Real log_natural(const BigInt& v);

// Parse/print helpers shared by the C API layer.
std::string bigint_to_string(const BigInt& v);

}  // namespace gbar

#endif
