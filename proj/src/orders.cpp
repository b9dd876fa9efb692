#include "orders.hpp"

#include <cassert>
#include <cmath>
#include <vector>

#include "exact.hpp"
#include "radix.hpp"

namespace gbar {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

#ifndef NDEBUG
bool is_prime_u64(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}
// Cheap misuse detection; ord semantics require a prime base.  Only small p
// is checked so that release sweeps pay nothing.
void debug_assert_prime(uint64_t p) {
    assert(p >= 1000000 || is_prime_u64(p));
}
#else
void debug_assert_prime(uint64_t) {}
#endif

void require_base(uint32_t b) {
    if (b < 2) throw InvalidArgument("orders: base must be >= 2");
}

// S_b(n) in 128-bit arithmetic; safe for every n < 2^64 with b < 2^32
// (S_b(n) < 64 * (b-1) * n < 2^127).
u128 running_digit_sum_u128(uint64_t n, uint32_t b) {
    u128 total = 0;
    const u128 full_block = u128(b) * (b - 1) / 2;
    u128 pw = 1;
    while (pw < n) {
        const u128 block = pw * b;
        const u128 q = n / block;
        const uint64_t h = static_cast<uint64_t>((n % block) / pw);
        const uint64_t l = static_cast<uint64_t>((n % block) % pw);
        const u128 partial = h >= 2 ? u128(h) * (h - 1) / 2 : 0;
        total += (q * full_block + partial) * pw + u128(h) * l;
        pw = block;
    }
    return total;
}

int64_t checked_i64(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw InvalidArgument(what);
    return static_cast<int64_t>(v);
}

}  // namespace

OrderDecomposition ord_parts(uint64_t n, uint64_t p) {
    if (p < 2 || p >= (uint64_t(1) << 32))
        throw InvalidArgument("ord_parts: p out of range");
    debug_assert_prime(p);
    OrderDecomposition d{OrderFormula::parts, 0, 0, 1, 0};
    if (n == 0) return d;
    // ord_p(N*_m) = (m(m+1)/2 - S_p(m+1)) / (p-1): summing the digit form of
    // de Polignac's formula over k <= m.
    const auto ord_superfac = [&](uint64_t m) -> BigInt {
        BigInt t = BigInt(m) * (BigInt(m) + 1) / 2 - running_digit_sum(m + 1, static_cast<uint32_t>(p));
        BigInt q, r;
        divide_qr(t, BigInt(p - 1), q, r);
        if (r != 0) throw InternalInconsistency("ord_parts: (p-1) does not divide the N* sum");
        return q;
    };
    d.s_minus = ord_superfac(n);
    d.s_plus = BigInt(n) * ord_factorial(n, p) - ord_superfac(n - 1);
    d.value = d.s_plus - d.s_minus;
    return d;
}

OrderDecomposition nu_digit_sum(uint64_t n, uint32_t b) {
    require_base(b);
    OrderDecomposition d{OrderFormula::digit_sum, 0, 0, 1, 0};
    if (n == 0) return d;
    const BigInt num_plus = 2 * running_digit_sum(n, b);
    const BigInt num_minus = BigInt(n - 1) * digit_sum(n, b);
    BigInt value, rem;
    divide_qr(num_plus - num_minus, BigInt(b - 1), value, rem);
    if (rem != 0)
        throw InternalInconsistency("nu_digit_sum: (b-1) does not divide 2*S_b(n) - (n-1)*d_b(n)");
    d.value = value;
    if (num_plus % (b - 1) == 0 && num_minus % (b - 1) == 0) {
        d.s_plus = num_plus / (b - 1);
        d.s_minus = num_minus / (b - 1);
    } else {
        d.s_plus = num_plus;
        d.s_minus = num_minus;
        d.scale = b - 1;
    }
    return d;
}

OrderDecomposition nu_bilinear(uint64_t n, uint32_t b) {
    require_base(b);
    OrderDecomposition d{OrderFormula::bilinear, 0, 0, 1, 0};
    if (n == 0) return d;
    const auto digits = digits_of(n, b).digits;
    BigInt pw = 1;  // b^j
    BigInt geom = 0;  // (b^j - 1)/(b - 1) = 1 + b + ... + b^{j-1}
    for (size_t j = 0; j < digits.size(); ++j) {
        if (j > 0 && digits[j] != 0) {
            d.s_plus += BigInt(j) * digits[j] * pw;
            d.s_minus += digits[j] * geom;
        }
        // Bilinear term: (n mod b^{j+1}) * floor(n / b^{j+1}).
        const BigInt block = pw * b;
        d.s_minus += (BigInt(n) % block) * (BigInt(n) / block);
        geom += pw;
        pw = block;
    }
    d.value = d.s_plus - d.s_minus;
    return d;
}

int64_t nu_value(uint64_t n, uint32_t b) {
    require_base(b);
    if (n >= (uint64_t(1) << 53))
        throw InvalidArgument("nu_value: n too large for the fast path; use nu_digit_sum");
    if (n == 0) return 0;
    const i128 num = i128(2) * i128(running_digit_sum_u128(n, b)) -
                     i128(n - 1) * digit_sum(n, b);
    if (num % (b - 1) != 0)
        throw InternalInconsistency("nu_value: (b-1) does not divide the numerator");
    return checked_i64(num / (b - 1), "nu_value: result exceeds int64");
}

int64_t nu_star_value(uint64_t n, uint32_t b) {
    require_base(b);
    if (n >= (uint64_t(1) << 53))
        throw InvalidArgument("nu_star_value: n too large for the fast path; use nu_bilinear");
    if (n == 0) return 0;
    i128 plus = 0, minus = 0;
    u128 pw = 1, geom = 0;
    uint64_t rest = n;
    for (uint32_t j = 0; rest > 0; ++j) {
        const uint32_t digit = static_cast<uint32_t>(rest % b);
        rest /= b;
        if (j > 0 && digit != 0) {
            plus += i128(u128(j) * digit * pw);
            minus += i128(u128(digit) * geom);
        }
        const u128 block = pw * b;
        minus += i128((u128(n) % block) * (u128(n) / block));
        geom += pw;
        pw = block;
    }
    return checked_i64(plus - minus, "nu_star_value: result exceeds int64");
}

uint64_t ord_binomial(uint64_t n, uint64_t t, uint64_t p) {
    if (t > n) throw InvalidArgument("ord_binomial: t > n");
    if (p < 2 || p >= (uint64_t(1) << 32))
        throw InvalidArgument("ord_binomial: p out of range");
    debug_assert_prime(p);
    const uint32_t b = static_cast<uint32_t>(p);
    const uint64_t num = digit_sum(t, b) + digit_sum(n - t, b) - digit_sum(n, b);
    if (num % (p - 1) != 0)
        throw InternalInconsistency("ord_binomial: (p-1) does not divide the digit sum");
    return num / (p - 1);
}

uint64_t carry_count(uint64_t n, uint64_t t, uint32_t p) {
    if (t > n) throw InvalidArgument("carry_count: t > n");
    if (p < 2) throw InvalidArgument("carry_count: p < 2");
    uint64_t x = t, y = n - t;
    uint64_t carries = 0, carry = 0;
    while (x > 0 || y > 0 || carry > 0) {
        const uint64_t s = x % p + y % p + carry;
        carry = s >= p ? 1 : 0;
        carries += carry;
        x /= p;
        y /= p;
    }
    return carries;
}

int carry_digit(uint64_t n, uint64_t t, uint32_t p, uint32_t j) {
    if (t > n) throw InvalidArgument("carry_digit: t > n");
    if (p < 2) throw InvalidArgument("carry_digit: p < 2");
    // Carry out of position j in t + (n-t)  <=>  borrow from position j+1 in
    // n - t  <=>  t mod p^{j+1} > n mod p^{j+1}.
    u128 block = 1;
    for (uint32_t i = 0; i <= j && block <= n; ++i) block *= p;
    const u128 tm = u128(t) % block;
    const u128 nm = u128(n) % block;
    return tm > nm ? 1 : 0;
}

uint64_t carry_total(uint64_t n, uint32_t p, uint32_t j) {
    if (p < 2) throw InvalidArgument("carry_total: p < 2");
    const auto digits = digits_of(n, p).digits;
    // Vanishes for j >= k = floor(log_p n): no digit above position j means
    // no t can borrow from there.  Also covers n = 0.
    if (uint64_t(j) + 1 >= digits.size()) return 0;

    // Route A, from the digit vector: low = sum_{u<=j} a_u p^u accumulated
    // upward, high = sum_{t>j} a_t p^{t-j-1} by Horner from the top digit.
    u128 low = 0, pw = 1;
    for (uint32_t u = 0; u <= j; ++u) {
        low += u128(digits[u]) * pw;
        pw *= p;
    }
    u128 high = 0;
    for (size_t t = digits.size(); t-- > j + 1;) high = high * p + digits[t];
    const u128 route_a = (pw - 1 - low) * high;

    // Route B, from modular arithmetic on n itself:
    // ((p^{j+1}-1) - n mod p^{j+1}) * floor(n / p^{j+1}).
    const u128 block = pw;  // p^{j+1} <= p * n, no overflow
    const u128 route_b = (block - 1 - u128(n) % block) * (u128(n) / block);
    if (route_a != route_b)
        throw InternalInconsistency("carry_total: digit route and modular route disagree");
    if (route_a > UINT64_MAX) throw InvalidArgument("carry_total: result exceeds uint64");
    return static_cast<uint64_t>(route_a);
}

uint64_t upper_bound_m(uint64_t n, uint32_t p) {
    require_base(p);
    const auto digits = digits_of(n, p).digits;
    u128 plus = 0, minus = 0;
    u128 pw = 1, geom = 0;
    for (size_t j = 0; j < digits.size(); ++j) {
        if (j > 0 && digits[j] != 0) {
            plus += u128(j) * digits[j] * pw;
            minus += u128(digits[j]) * geom;
        }
        geom += pw;
        pw *= p;
    }
    const u128 m = plus - minus;  // nonnegative: term-wise j*a_j*p^j >= a_j*(p^j-1)/(p-1)
    if (m > UINT64_MAX) throw InvalidArgument("upper_bound_m: result exceeds uint64");
    return static_cast<uint64_t>(m);
}

double nu_upper_bound(uint64_t n, uint32_t b) {
    require_base(b);
    if (n < 2) throw InvalidArgument("nu_upper_bound: n must be >= 2");
    const double nn = static_cast<double>(n);
    return nn * std::log(nn) / std::log(static_cast<double>(b)) -
           (nn - 1.0) / (static_cast<double>(b) - 1.0);
}

}  // namespace gbar
