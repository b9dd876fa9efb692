#include "primestats.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>

#include "asymptotics.hpp"
#include "exact.hpp"
#include "orders.hpp"

namespace gbar {

uint64_t PrimeTable::count_upto(uint64_t x) const {
    if (x > limit) throw InvalidArgument("PrimeTable::count_upto: x beyond sieve limit");
    return static_cast<uint64_t>(
        std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());
}

bool PrimeTable::contains(uint64_t p) const {
    if (p > limit) throw InvalidArgument("PrimeTable::contains: p beyond sieve limit");
    return std::binary_search(primes.begin(), primes.end(), p);
}

PrimeTable sieve(uint64_t limit) {
    if (limit < 2) throw InvalidArgument("sieve: limit must be >= 2");
    if (limit > (uint64_t(1) << 32)) throw InvalidArgument("sieve: limit too large");
    PrimeTable t;
    t.limit = limit;
    std::vector<bool> composite(limit + 1, false);
    for (uint64_t p = 2; p * p <= limit; ++p) {
        if (composite[p]) continue;
        for (uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
    }
    for (uint64_t p = 2; p <= limit; ++p)
        if (!composite[p]) t.primes.push_back(static_cast<uint32_t>(p));
    return t;
}

std::vector<std::pair<uint32_t, uint64_t>> factor_gbar(uint64_t n) {
    std::vector<std::pair<uint32_t, uint64_t>> factors;
    if (n < 2) return factors;
    const PrimeTable pt = sieve(n);
    for (uint32_t p : pt.primes) {
        const int64_t e = nu_value(n, p);
        if (e < 0) throw InternalInconsistency("factor_gbar: negative prime order");
        if (e > 0) factors.emplace_back(p, static_cast<uint64_t>(e));
    }
    return factors;
}

FactorizationReport factorization_identity(uint64_t n) {
    FactorizationReport rep;
    rep.n = n;
    rep.factors = factor_gbar(n);
    std::vector<BigInt> powers;
    powers.reserve(rep.factors.size());
    for (const auto& [p, e] : rep.factors) {
        BigInt pw;
        mpz_ui_pow_ui(pw.backend().data(), p, static_cast<unsigned long>(e));
        powers.push_back(std::move(pw));
    }
    rep.reconstructed = product_tree(std::move(powers));
    rep.gbar = binomial_product(n);
    rep.ok = rep.reconstructed == rep.gbar;
    return rep;
}

Real log_gbar_estimate(uint64_t n) {
    real_init();
    if (n == 0 || n == 1) return Real(0);
    if (n <= exact_cap()) return log_natural(binomial_product(n));
    return log_gbar_series(n, 4).value;
}

ChebyshevReport chebyshev_lower_bound(uint64_t n, const PrimeTable& pt,
                                      bool with_chain) {
    if (n < 2) throw InvalidArgument("chebyshev_lower_bound: n must be >= 2");
    ChebyshevReport rep;
    rep.n = n;
    rep.pi_n = pt.count_upto(n);
    const double ln = std::log(static_cast<double>(n));
    rep.bound = n / (2 * ln) - 0.5;
    rep.ok = static_cast<double>(rep.pi_n) >= rep.bound;
    if (with_chain) {
        rep.log_gbar = log_gbar_estimate(n).convert_to<double>();
        rep.lower_ok = rep.log_gbar >= 0.5 * double(n) * double(n) - 0.5 * double(n) * ln;
        rep.upper_ok = rep.log_gbar <= double(rep.pi_n) * double(n) * ln;
    }
    return rep;
}

double pnt_residual(uint64_t n, const PrimeTable& pt) {
    if (n < 2) throw InvalidArgument("pnt_residual: n must be >= 2");
    const double pi_n = static_cast<double>(pt.count_upto(n));
    const double ln = std::log(static_cast<double>(n));
    const double lg = log_gbar_estimate(n).convert_to<double>();
    return (lg - 0.5 * pi_n * double(n) * ln) / (double(n) * double(n));
}

}  // namespace gbar
