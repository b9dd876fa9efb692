#include "exact.hpp"

#include <gmp.h>

#include <atomic>
#include <cstdlib>
#include <utility>

#include "radix.hpp"

namespace gbar {

namespace {

std::atomic<uint64_t> g_cap_override{0};

uint64_t default_cap() {
    if (const char* env = std::getenv("GBAR_EXACT_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 2000;
}

}  // namespace

uint64_t exact_cap() {
    const uint64_t v = g_cap_override.load(std::memory_order_relaxed);
    return v ? v : default_cap();
}

void set_exact_cap(uint64_t cap) { g_cap_override = cap; }

BigInt factorial(uint64_t n) {
    BigInt r;
    mpz_fac_ui(r.backend().data(), static_cast<unsigned long>(n));
    return r;
}

BigInt product_tree(std::vector<BigInt> factors) {
    if (factors.empty()) return 1;
    while (factors.size() > 1) {
        size_t out = 0;
        for (size_t i = 0; i + 1 < factors.size(); i += 2)
            factors[out++] = factors[i] * factors[i + 1];
        if (factors.size() % 2 == 1) factors[out++] = std::move(factors.back());
        factors.resize(out);
    }
    return factors[0];
}

BigInt superfactorial(uint64_t n) {
    std::vector<BigInt> factors;
    factors.reserve(n);
    BigInt fact = 1;
    for (uint64_t k = 1; k <= n; ++k) {
        fact *= k;
        factors.push_back(fact);
    }
    return product_tree(std::move(factors));
}

BigInt hyperfactorial(uint64_t n) {
    std::vector<BigInt> factors;
    factors.reserve(n);
    for (uint64_t k = 1; k <= n; ++k) {
        BigInt t;
        mpz_ui_pow_ui(t.backend().data(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(k));
        factors.push_back(std::move(t));
    }
    return product_tree(std::move(factors));
}

BigInt binomial(uint64_t n, uint64_t t) {
    if (t > n) throw InvalidArgument("binomial: t > n");
    BigInt r;
    mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(t));
    return r;
}

BigInt binomial_product(uint64_t n) {
    // Route 1: running product of the row of Pascal's triangle,
    // C(n,k+1) = C(n,k) * (n-k) / (k+1).
    std::vector<BigInt> factors;
    factors.reserve(n + 1);
    BigInt c = 1;
    factors.push_back(c);
    for (uint64_t k = 0; k < n; ++k) {
        c *= (n - k);
        c /= (k + 1);
        factors.push_back(c);
    }
    BigInt direct = product_tree(std::move(factors));

    // Route 2: D*_n / N*_n, which must divide exactly.
    BigInt q, r;
    divide_qr(hyperfactorial(n), superfactorial(n), q, r);
    if (r != 0)
        throw InternalInconsistency(
            "binomial_product: N*_n does not divide D*_n");
    if (q != direct)
        throw InternalInconsistency(
            "binomial_product: direct product and D*/N* disagree");
    return direct;
}

uint64_t ord_trial_division(const BigInt& value, uint64_t base) {
    if (value == 0) throw InvalidArgument("ord_trial_division: value is 0");
    if (base < 2) throw InvalidArgument("ord_trial_division: base < 2");
    BigInt cur = value;
    BigInt q;
    uint64_t e = 0;
    for (;;) {
        const unsigned long rem = mpz_tdiv_q_ui(
            q.backend().data(), cur.backend().data(), static_cast<unsigned long>(base));
        if (rem != 0) break;
        cur.swap(q);
        ++e;
    }
    return e;
}

uint64_t ord_factorial(uint64_t n, uint64_t p) {
    if (p < 2) throw InvalidArgument("ord_factorial: p < 2");
    if (p >= (uint64_t(1) << 32))
        throw InvalidArgument("ord_factorial: p must be < 2^32");
    uint64_t floor_sum = 0;
    for (uint64_t q = n / p; q > 0; q /= p) floor_sum += q;
    const uint64_t digit_form = (n - digit_sum(n, static_cast<uint32_t>(p))) / (p - 1);
    if (floor_sum != digit_form)
        throw InternalInconsistency("ord_factorial: floor sum and digit form disagree");
    return floor_sum;
}

BigInt farey_count(uint64_t n) { return BigInt(n) * (BigInt(n) + 1) / 2; }

GbarSweep::GbarSweep() : n_(0), gbar_(1), factorial_(1) {}

void GbarSweep::advance() {
    ++n_;
    factorial_ *= n_;
    BigInt pw;
    mpz_ui_pow_ui(pw.backend().data(), static_cast<unsigned long>(n_),
                  static_cast<unsigned long>(n_));
    gbar_ *= pw;
    BigInt q, r;
    divide_qr(gbar_, factorial_, q, r);
    if (r != 0)
        throw InternalInconsistency("GbarSweep: n! does not divide Gbar_{n-1} * n^n");
    gbar_.swap(q);
}

}  // namespace gbar
