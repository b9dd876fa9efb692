#include "types.hpp"

namespace gbar {

const Real& const_ln2() {
    real_init();
    static const Real v = log(Real(2));
    return v;
}

const Real& const_ln_2pi() {
    real_init();
    static const Real v = log(8 * atan(Real(1)));  // 2*pi = 8*atan(1)
    return v;
}

Real log_natural(const BigInt& v) {
    real_init();
    if (v <= 0) throw InvalidArgument("log_natural: argument must be >= 1");
    const unsigned long bits = msb(v) + 1;  // bit length
    constexpr unsigned long kMantissaBits = 512;
    if (bits <= kMantissaBits) return log(Real(v));
    const unsigned long shift = bits - kMantissaBits;
    const BigInt mantissa = v >> shift;
    return log(Real(mantissa)) + Real(shift) * const_ln2();
}

std::string bigint_to_string(const BigInt& v) { return v.str(); }

}  // namespace gbar
