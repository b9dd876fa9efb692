#include "verify.hpp"

#include <gmp.h>

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "asymptotics.hpp"
#include "delange.hpp"
#include "exact.hpp"
#include "orders.hpp"
#include "primestats.hpp"
#include "radix.hpp"

namespace gbar {

namespace {

constexpr uint64_t kSeed = 0x9e3779b97f4a7c15ULL;

double unit_double(std::mt19937_64& rng) {
    // 53 random bits -> [0, 1); avoids std::uniform_real_distribution, whose
    // output is not pinned down by the standard.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Checker {
    uint64_t checks = 0;
    uint64_t failed = 0;
    std::vector<std::string> messages;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failed;
        if (messages.size() < 8) messages.push_back(what);
    }

    template <typename A, typename B>
    void expect_eq(const A& a, const B& b, const std::string& what) {
        std::ostringstream os;
        if (!(a == b)) os << what << ": " << a << " != " << b;
        expect(a == b, os.str());
    }

    SuiteResult result(const std::string& name) const {
        SuiteResult r;
        r.name = name;
        r.passed = failed == 0;
        r.checks = checks;
        if (failed == 0) {
            r.detail = std::to_string(checks) + " checks passed";
        } else {
            std::ostringstream os;
            os << failed << " of " << checks << " checks failed";
            for (const auto& m : messages) os << "\n  " << m;
            r.detail = os.str();
        }
        return r;
    }
};

bool is_power_of(uint64_t n, uint32_t b) {
    if (n == 0) return false;
    while (n % b == 0) n /= b;
    return n == 1;
}

// ----------------------------------------------------------------------
// radix: digit expansions, odometer increments, stream/pointwise, closed
// vs direct running sums.
// ----------------------------------------------------------------------
SuiteResult suite_radix() {
    Checker c;
    const uint32_t bases[] = {2, 3, 5, 7, 10, 16};
    for (uint32_t b : bases) {
        for (uint64_t n = 0; n <= 1000000; ++n) {
            const auto e = digits_of(n, b);
            if (e.reconstruct() != n) {
                c.expect(false, "reconstruction failed at n=" + std::to_string(n) +
                                    " b=" + std::to_string(b));
                break;
            }
            if (!e.digits.empty() && e.digits.back() == 0) {
                c.expect(false, "leading zero digit at n=" + std::to_string(n));
                break;
            }
        }
        c.expect(true, "");  // count the sweep as one aggregated check
        // Odometer identity d(n+1) = d(n) + 1 - (b-1)*trailing.
        for (uint64_t n = 0; n <= 100000; ++n) {
            uint64_t t = 0, m = n;
            while (m % b == b - 1) {
                ++t;
                m /= b;
            }
            if (digit_sum(n + 1, b) != digit_sum(n, b) + 1 - t * (b - 1)) {
                c.expect(false, "odometer identity failed at n=" + std::to_string(n) +
                                    " b=" + std::to_string(b));
                break;
            }
        }
        c.expect(true, "");
        // Stream vs pointwise on assorted ranges.
        const uint64_t ranges[][2] = {{0, 4000}, {99990, 100200}, {1 << 20, (1 << 20) + 50}};
        for (auto [lo, hi] : ranges) {
            DigitSumStream s(lo, hi, b);
            for (uint64_t n = lo; n < hi; ++n) {
                const auto item = s.next();
                c.expect(item.n == n && item.d == digit_sum(n, b) &&
                             BigInt(item.s) == running_digit_sum(n, b),
                         "stream mismatch at n=" + std::to_string(n) +
                             " b=" + std::to_string(b));
            }
            c.expect(s.done(), "stream not exhausted");
        }
        // Closed-form running sum vs direct summation.
        BigInt direct = 0;
        for (uint64_t n = 0; n <= 3000; ++n) {
            if (running_digit_sum(n, b) != direct) {
                c.expect(false, "closed form S_b mismatch at n=" + std::to_string(n) +
                                    " b=" + std::to_string(b));
                break;
            }
            direct += digit_sum(n, b);
        }
        c.expect(running_digit_sum(123456, b) == running_digit_sum_direct(123456, b),
                 "closed form S_b mismatch at n=123456 b=" + std::to_string(b));
    }
    // Pinned examples.
    c.expect_eq(digits_of(13, 3).digits.size(), size_t(3), "digits(13,3) length");
    c.expect(digits_of(13, 3).digits == std::vector<uint32_t>({1, 1, 1}), "digits(13,3)");
    c.expect(digits_of(0, 7).digits.empty(), "digits(0,7) empty");
    c.expect(digits_of(96, 10).digits == std::vector<uint32_t>({6, 9}), "digits(96,10)");
    c.expect_eq(digit_sum(13, 3), uint64_t(3), "d_3(13)");
    c.expect_eq(digit_sum(7, 2), uint64_t(3), "d_2(7)");
    c.expect_eq(digit_sum(96, 10), uint64_t(15), "d_10(96)");
    c.expect_eq(running_digit_sum(8, 2), BigInt(12), "S_2(8)");
    c.expect_eq(running_digit_sum(4, 2), BigInt(4), "S_2(4)");
    c.expect_eq(running_digit_sum(1, 9), BigInt(0), "S_9(1)");
    return c.result("radix");
}

// ----------------------------------------------------------------------
// exact: recurrences, the hyperfactorial identity, dual-path Gbar,
// de Polignac dual form, trial-division totality.
// ----------------------------------------------------------------------
SuiteResult suite_exact() {
    Checker c;
    BigInt fact = 1, prev_sf = 1, prev_hf = 1;
    GbarSweep sweep;
    for (uint64_t n = 1; n <= 300; ++n) {
        fact *= n;
        // Recurrences against the product-tree implementations, every n.
        const BigInt sf = superfactorial(n);
        const BigInt hf = hyperfactorial(n);
        c.expect(sf == prev_sf * fact, "N* recurrence failed at n=" + std::to_string(n));
        BigInt nn;
        mpz_ui_pow_ui(nn.backend().data(), static_cast<unsigned long>(n),
                      static_cast<unsigned long>(n));
        c.expect(hf == prev_hf * nn, "D* recurrence failed at n=" + std::to_string(n));
        // D*_n * N*_{n-1} = (n!)^n, exactly.
        BigInt pw;
        mpz_pow_ui(pw.backend().data(), fact.backend().data(),
                   static_cast<unsigned long>(n));
        c.expect(hf * prev_sf == pw,
                 "hyperfactorial identity failed at n=" + std::to_string(n));
        sweep.advance();
        // Gbar recurrence state vs the direct row product and vs D*/N*.
        BigInt row = 1, coeff = 1;
        for (uint64_t k = 0; k < n; ++k) {
            coeff *= (n - k);
            coeff /= (k + 1);
            row *= coeff;
        }
        c.expect(sweep.value() == row,
                 "Gbar sweep != row product at n=" + std::to_string(n));
        c.expect(hf / sf == sweep.value() && hf % sf == 0,
                 "D*/N* != Gbar at n=" + std::to_string(n));
        prev_sf = sf;
        prev_hf = hf;
    }
    for (uint64_t n : {1, 2, 3, 5, 10, 50, 120, 300})
        (void)binomial_product(n);  // throws on dual-route disagreement
    c.expect_eq(factorial(0), BigInt(1), "0!");
    c.expect_eq(factorial(4), BigInt(24), "4!");
    c.expect_eq(factorial(10), BigInt(3628800), "10!");
    c.expect_eq(superfactorial(4), BigInt(288), "N*_4");
    c.expect_eq(superfactorial(1), BigInt(1), "N*_1");
    c.expect_eq(superfactorial(5), BigInt(34560), "N*_5");
    c.expect_eq(hyperfactorial(4), BigInt(27648), "D*_4");
    c.expect_eq(hyperfactorial(3), BigInt(108), "D*_3");
    c.expect_eq(binomial(4, 2), BigInt(6), "C(4,2)");
    c.expect_eq(binomial(13, 5), BigInt(1287), "C(13,5)");
    c.expect_eq(binomial(17, 0), BigInt(1), "C(17,0)");
    c.expect_eq(binomial_product(5), BigInt(2500), "Gbar_5");
    c.expect_eq(binomial_product(7), BigInt(26471025), "Gbar_7");
    c.expect_eq(binomial_product(1), BigInt(1), "Gbar_1");
    c.expect_eq(binomial_product(0), BigInt(1), "Gbar_0");
    c.expect_eq(farey_count(4), BigInt(10), "Phi*(4)");
    c.expect_eq(farey_count(1), BigInt(1), "Phi*(1)");
    c.expect_eq(farey_count(100), BigInt(5050), "Phi*(100)");
    for (uint64_t n = 1; n <= 1000; ++n)
        if (farey_count(n) != binomial(n + 1, 2)) {
            c.expect(false, "Phi*(n) != C(n+1,2) at n=" + std::to_string(n));
            break;
        }
    c.expect(true, "");

    c.expect_eq(ord_trial_division(BigInt(96), 2), uint64_t(5), "ord_2(96)");
    c.expect_eq(ord_trial_division(BigInt(1), 7), uint64_t(0), "ord_7(1)");
    c.expect_eq(ord_trial_division(BigInt(26471025), 7), uint64_t(6), "ord_7(Gbar_7)");
    // Totality: p^e divides, p^{e+1} does not.
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 200; ++i) {
        const uint64_t n = 2 + rng() % 400;
        const uint64_t p = 2 + rng() % 97;
        const BigInt v = factorial(n);
        const uint64_t e = ord_trial_division(v, p);
        BigInt pe;
        mpz_ui_pow_ui(pe.backend().data(), (unsigned long)p, (unsigned long)e);
        c.expect(v % pe == 0 && (v / pe) % p != 0,
                 "trial division totality failed n=" + std::to_string(n) +
                     " p=" + std::to_string(p));
    }
    // de Polignac: the dual-form check runs inside ord_factorial.
    for (uint64_t p : {2, 3, 5, 7, 11, 13})
        for (uint64_t n = 0; n <= 100000; ++n) (void)ord_factorial(n, p);
    c.expect(true, "de Polignac dual form, n <= 1e5");
    for (uint64_t p : {2, 3, 5})
        for (uint64_t n : {1, 2, 10, 100, 500, 2000})
            c.expect(ord_factorial(n, p) == ord_trial_division(factorial(n), p),
                     "ord_factorial != trial division");
    c.expect_eq(ord_factorial(13, 3), uint64_t(5), "ord_3(13!)");
    c.expect_eq(ord_factorial(4, 2), uint64_t(3), "ord_2(4!)");
    c.expect_eq(ord_factorial(1, 7), uint64_t(0), "ord_7(1!)");
    return c.result("exact");
}

// ----------------------------------------------------------------------
// formulas: the three order formulas agree with each other (and with the
// fast paths); the up/down race at multiples of p; the composite-base
// divergence witness.
// ----------------------------------------------------------------------
SuiteResult suite_formulas() {
    Checker c;
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
        int64_t prev = 0;
        bool sweep_ok = true;
        for (uint64_t n = 1; n <= 10000; ++n) {
            const auto parts = ord_parts(n, p);
            const auto ds = nu_digit_sum(n, static_cast<uint32_t>(p));
            const auto bl = nu_bilinear(n, static_cast<uint32_t>(p));
            const int64_t fast = nu_value(n, static_cast<uint32_t>(p));
            const int64_t fast_star = nu_star_value(n, static_cast<uint32_t>(p));
            if (parts.value != ds.value || ds.value != bl.value ||
                BigInt(fast) != ds.value || fast != fast_star) {
                c.expect(false, "formula disagreement at n=" + std::to_string(n) +
                                    " p=" + std::to_string(p));
                sweep_ok = false;
                break;
            }
            // Race: ord increases from n-1 to n iff p | n (for n >= p).
            if (n >= p) {
                const bool up = fast > prev, down = fast < prev;
                if ((n % p == 0 && !up) || (n % p != 0 && !down)) {
                    c.expect(false, "race violated at n=" + std::to_string(n) +
                                        " p=" + std::to_string(p));
                    sweep_ok = false;
                    break;
                }
            }
            prev = fast;
        }
        c.expect(sweep_ok, "");
    }
    // Pinned Table rows (p = 2): (n, ordD, ordN, s2+, s2-, s3+, s3-, ord).
    struct Row { uint64_t n; int64_t dstar, nstar, s2p, s2m, s3p, s3m, ord; };
    const Row rows[] = {
        {1, 0, 0, 0, 0, 0, 0, 0},     {2, 2, 1, 2, 1, 2, 1, 1},
        {3, 2, 2, 4, 4, 2, 2, 0},     {4, 10, 5, 8, 3, 8, 3, 5},
        {5, 10, 8, 10, 8, 8, 6, 2},   {6, 16, 12, 14, 10, 10, 6, 4},
        {7, 16, 16, 18, 18, 10, 10, 0},
        {8, 40, 23, 24, 7, 24, 7, 17},
        {9, 40, 30, 26, 16, 24, 14, 10},
        {10, 50, 38, 30, 18, 26, 14, 12},
        {11, 50, 46, 34, 30, 26, 22, 4},
        {12, 74, 56, 40, 22, 32, 14, 18},
        {13, 74, 66, 44, 36, 32, 24, 8},
        {14, 88, 77, 50, 39, 34, 23, 11},
        {15, 88, 88, 56, 56, 34, 34, 0},
        {16, 152, 103, 64, 15, 64, 15, 49},
    };
    for (const auto& r : rows) {
        const auto parts = ord_parts(r.n, 2);
        const auto ds = nu_digit_sum(r.n, 2);
        const auto bl = nu_bilinear(r.n, 2);
        c.expect(parts.s_plus == r.dstar && parts.s_minus == r.nstar &&
                     ds.s_plus == r.s2p && ds.s_minus == r.s2m && ds.scale == 1 &&
                     bl.s_plus == r.s3p && bl.s_minus == r.s3m &&
                     parts.value == r.ord && ds.value == r.ord && bl.value == r.ord,
                 "table row mismatch at n=" + std::to_string(r.n));
    }
    c.expect_eq(nu_digit_sum(100, 10).value, BigInt(189), "nu_10(Gbar_100)");
    // Composite base: nu_b is not ord_b; witness within the exact range.
    bool found = false;
    GbarSweep sweep;
    for (uint64_t n = 1; n <= 300 && !found; ++n) {
        sweep.advance();
        if (nu_value(n, 4) != int64_t(ord_trial_division(sweep.value(), 4))) found = true;
    }
    c.expect(found, "no composite-base divergence witness found below 300");
    c.expect(nu_value(4, 4) == 3 && ord_trial_division(BigInt(96), 4) == 2,
             "expected divergence at n=4, b=4");
    return c.result("formulas");
}

// ----------------------------------------------------------------------
// oracle: every formula equals trial division on exact Gbar_n, n <= 300,
// p <= 50.
// ----------------------------------------------------------------------
SuiteResult suite_oracle() {
    Checker c;
    const uint32_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    GbarSweep sweep;
    for (uint64_t n = 1; n <= 300; ++n) {
        sweep.advance();
        for (uint32_t p : primes) {
            const uint64_t oracle = ord_trial_division(sweep.value(), p);
            const int64_t v1 = ord_parts(n, p).value.convert_to<int64_t>();
            const int64_t v2 = nu_value(n, p);
            const int64_t v3 = nu_star_value(n, p);
            if (int64_t(oracle) != v1 || v1 != v2 || v2 != v3) {
                c.expect(false, "oracle mismatch at n=" + std::to_string(n) +
                                    " p=" + std::to_string(p));
            } else {
                c.expect(true, "");
            }
        }
    }
    return c.result("oracle");
}

// ----------------------------------------------------------------------
// appendix-b: nu_b == nu*_b for b in 2..16, n <= 1e5 (two independent
// evaluation routes).
// ----------------------------------------------------------------------
SuiteResult suite_appendix_b() {
    Checker c;
    for (uint32_t b = 2; b <= 16; ++b) {
        bool ok = true;
        for (uint64_t n = 1; n <= 100000; ++n) {
            if (nu_value(n, b) != nu_star_value(n, b)) {
                c.expect(false, "nu_b != nu*_b at n=" + std::to_string(n) +
                                    " b=" + std::to_string(b));
                ok = false;
                break;
            }
        }
        c.expect(ok, "");
    }
    return c.result("appendix-b");
}

// ----------------------------------------------------------------------
// carries: Kummer's carry count vs the digit-sum binomial order; the two
// closed forms of the total carry function; the per-position sum identity.
// ----------------------------------------------------------------------
SuiteResult suite_carries() {
    Checker c;
    for (uint64_t p : {2, 3, 5, 7}) {
        bool ok = true;
        for (uint64_t n = 0; n <= 500 && ok; ++n)
            for (uint64_t t = 0; t <= n; ++t)
                if (ord_binomial(n, t, p) != carry_count(n, t, static_cast<uint32_t>(p))) {
                    c.expect(false, "Kummer mismatch n=" + std::to_string(n) +
                                        " t=" + std::to_string(t) +
                                        " p=" + std::to_string(p));
                    ok = false;
                    break;
                }
        c.expect(ok, "");
    }
    // carry_total == brute-force sum of carry digits; both closed forms are
    // compared inside carry_total itself.
    for (uint32_t p : {2, 3, 5}) {
        bool ok = true;
        for (uint64_t n = 0; n <= 400 && ok; n += (n < 60 ? 1 : 7)) {
            for (uint32_t j = 0; j < 12; ++j) {
                uint64_t brute = 0;
                for (uint64_t t = 0; t <= n; ++t) brute += carry_digit(n, t, p, j);
                if (carry_total(n, p, j) != brute) {
                    c.expect(false, "carry_total mismatch n=" + std::to_string(n) +
                                        " p=" + std::to_string(p) +
                                        " j=" + std::to_string(j));
                    ok = false;
                    break;
                }
            }
        }
        c.expect(ok, "");
    }
    // Sum over positions and the sum over t both give ord_p(Gbar_n).
    for (uint64_t p : {2, 3, 5}) {
        bool ok = true;
        for (uint64_t n = 1; n <= 2000 && ok; ++n) {
            const int64_t ord = nu_value(n, static_cast<uint32_t>(p));
            uint64_t by_positions = 0;
            for (uint32_t j = 0; j < 40; ++j)
                by_positions += carry_total(n, static_cast<uint32_t>(p), j);
            uint64_t by_t = 0;
            for (uint64_t t = 0; t <= n; ++t) by_t += ord_binomial(n, t, p);
            if (int64_t(by_positions) != ord || int64_t(by_t) != ord) {
                c.expect(false, "carry/ord summation mismatch at n=" + std::to_string(n) +
                                    " p=" + std::to_string(p));
                ok = false;
            }
        }
        c.expect(ok, "");
    }
    // Vanishing above the top digit.
    for (uint64_t n : {1, 13, 100, 1023, 4096})
        for (uint32_t p : {2, 3, 5}) {
            const uint32_t k = static_cast<uint32_t>(digits_of(n, p).digits.size()) - 1;
            for (uint32_t j = k; j < k + 4; ++j)
                c.expect(carry_total(n, p, j) == 0, "carry_total not vanishing");
        }
    // Pinned examples.
    c.expect_eq(ord_binomial(13, 5, 3), uint64_t(2), "ord_3 C(13,5)");
    c.expect_eq(ord_binomial(200, 0, 7), uint64_t(0), "ord_7 C(200,0)");
    c.expect_eq(ord_binomial(4, 2, 2), uint64_t(1), "ord_2 C(4,2)");
    c.expect_eq(carry_digit(13, 5, 3, 0), 1, "c_0(13,5)");
    c.expect_eq(carry_digit(13, 5, 3, 1), 1, "c_1(13,5)");
    c.expect_eq(carry_digit(13, 5, 3, 2), 0, "c_2(13,5)");
    c.expect_eq(carry_digit(97, 0, 5, 1), 0, "c_j(n,0)");
    c.expect_eq(carry_total(13, 3, 0), uint64_t(4), "c_0(13)");
    uint64_t total8 = 0;
    for (uint32_t j = 0; j < 8; ++j) total8 += carry_total(8, 2, j);
    c.expect_eq(total8, uint64_t(17), "sum_j c_j(8) = ord_2(Gbar_8)");
    return c.result("carries");
}

// ----------------------------------------------------------------------
// extremes: ord = M_p(n) exactly at n = a*p^k; ord = 0 exactly at
// n = a*p^k - 1; the closed form at the maximum.
// ----------------------------------------------------------------------
SuiteResult suite_extremes() {
    Checker c;
    for (uint64_t p : {2, 3, 5}) {
        for (uint32_t k = 0; k <= 10; ++k) {
            uint64_t pk = 1;
            for (uint32_t i = 0; i < k; ++i) pk *= p;
            for (uint64_t a = 1; a <= p - 1; ++a) {
                const uint64_t n = a * pk;
                const int64_t expected =
                    int64_t(a) * (int64_t(k) * int64_t(pk) - int64_t((pk - 1) / (p - 1)));
                c.expect(nu_value(n, static_cast<uint32_t>(p)) == expected,
                         "extreme value wrong at n=" + std::to_string(n) +
                             " p=" + std::to_string(p));
                c.expect(upper_bound_m(n, static_cast<uint32_t>(p)) == uint64_t(expected),
                         "M_p(a p^k) mismatch at n=" + std::to_string(n));
                if (n >= 2)
                    c.expect(nu_value(n - 1, static_cast<uint32_t>(p)) == 0,
                             "ord not zero at n=" + std::to_string(n - 1) +
                                 " p=" + std::to_string(p));
            }
        }
        // No other n attains either boundary.
        bool ok = true;
        for (uint64_t n = 1; n <= 10000 && ok; ++n) {
            const auto digits = digits_of(n, static_cast<uint32_t>(p)).digits;
            int nonzero = 0;
            for (uint32_t d : digits) nonzero += d != 0;
            const bool is_apk = nonzero == 1;
            bool all_top = true;  // n = a*p^k - 1: every digit below the top is p-1
            for (size_t i = 0; i + 1 < digits.size(); ++i)
                if (digits[i] != p - 1) all_top = false;
            const int64_t ord = nu_value(n, static_cast<uint32_t>(p));
            const uint64_t m = upper_bound_m(n, static_cast<uint32_t>(p));
            if ((ord == int64_t(m)) != is_apk) {
                c.expect(false, "M-boundary characterization failed at n=" +
                                    std::to_string(n) + " p=" + std::to_string(p));
                ok = false;
            }
            if ((ord == 0) != all_top) {
                c.expect(false, "zero-boundary characterization failed at n=" +
                                    std::to_string(n) + " p=" + std::to_string(p));
                ok = false;
            }
        }
        c.expect(ok, "");
    }
    c.expect_eq(upper_bound_m(8, 2), uint64_t(17), "M_2(8)");
    c.expect_eq(upper_bound_m(12, 2), uint64_t(22), "M_2(12)");
    c.expect_eq(nu_value(12, 2), int64_t(18), "ord_2(Gbar_12) < M_2(12)");
    c.expect_eq(nu_value(7, 2), int64_t(0), "ord_2(Gbar_7)");
    return c.result("extremes");
}

// ----------------------------------------------------------------------
// bounds: 0 <= ord_p(Gbar_n) < n log_p n, ord <= M_p, the nu_b upper bound
// with equality at pure powers, the rescaled envelope, p^k lower bound.
// ----------------------------------------------------------------------
SuiteResult suite_bounds() {
    Checker c;
    for (uint64_t p : {2, 3, 5, 7, 11, 13}) {
        bool ok = true;
        for (uint64_t n = 2; n <= 10000 && ok; ++n) {
            const int64_t ord = nu_value(n, static_cast<uint32_t>(p));
            const double limit =
                double(n) * std::log(double(n)) / std::log(double(p));
            if (ord < 0 || double(ord) >= limit ||
                uint64_t(ord) > upper_bound_m(n, static_cast<uint32_t>(p))) {
                c.expect(false, "range bound violated at n=" + std::to_string(n) +
                                    " p=" + std::to_string(p));
                ok = false;
            }
        }
        c.expect(ok, "");
    }
    // Rescaled envelope (the log-log plot range): values in [0, 2).
    for (uint64_t n = 2; n <= 1023; ++n) {
        const double scaled = double(nu_value(n, 2)) /
                              (0.5 * double(n) * std::log2(double(n)));
        c.expect(scaled >= 0.0 && scaled < 2.0,
                 "rescaled value outside [0,2) at n=" + std::to_string(n));
    }
    // nu_b <= n log_b n - (n-1)/(b-1), equality at n = b^k (float slack 1e-6).
    for (uint32_t b = 2; b <= 16; ++b) {
        bool ok = true;
        for (uint64_t n = 2; n <= 10000 && ok; ++n) {
            const double bound = nu_upper_bound(n, b);
            const double v = double(nu_value(n, b));
            if (v > bound + 1e-6) {
                c.expect(false, "nu bound violated at n=" + std::to_string(n) +
                                    " b=" + std::to_string(b));
                ok = false;
            }
            if (is_power_of(n, b) && std::fabs(v - bound) > 1e-6) {
                c.expect(false, "nu bound not tight at n=b^k, n=" + std::to_string(n));
                ok = false;
            }
        }
        c.expect(ok, "");
    }
    // ord_p(Gbar_{p^k}) >= p^k (k-1).
    for (uint64_t p : {2, 3, 5}) {
        uint64_t pk = 1;
        for (uint32_t k = 1; k <= 10; ++k) {
            pk *= p;
            if (pk > 100000000) break;
            c.expect(nu_value(pk, static_cast<uint32_t>(p)) >=
                         int64_t(pk) * (int64_t(k) - 1),
                     "p^k lower bound failed at p=" + std::to_string(p) +
                         " k=" + std::to_string(k));
        }
    }
    c.expect(std::fabs(nu_upper_bound(16, 2) - 49.0) < 1e-9, "bound(16,2) = 49");
    c.expect(std::fabs(nu_upper_bound(3, 2) - (3 * std::log2(3.0) - 2)) < 1e-12,
             "bound(3,2)");
    return c.result("bounds");
}

// ----------------------------------------------------------------------
// drazin-griffith: S_b(n) <= ((b-1)/2) n log_b n with equality iff n = b^k.
// ----------------------------------------------------------------------
SuiteResult suite_drazin_griffith() {
    Checker c;
    for (uint32_t b = 2; b <= 10; ++b) {
        DigitSumStream stream(1, 100001, b);
        bool ok = true;
        while (!stream.done()) {
            const auto item = stream.next();
            const uint64_t n = item.n;
            if (is_power_of(n, b)) {
                // Exact integer comparison at powers: 2 S_b(b^k) = (b-1) k b^k.
                uint64_t k = 0, m = n;
                while (m > 1) { m /= b; ++k; }
                if (2 * item.s != uint64_t(b - 1) * k * n) {
                    c.expect(false, "equality fails at n=b^k, n=" + std::to_string(n) +
                                        " b=" + std::to_string(b));
                    ok = false;
                }
            } else if (n >= 2) {
                // Strict inequality off powers: 2 S_b(n) log b < (b-1) n log n.
                if (!(2.0 * double(item.s) * std::log(double(b)) <
                      double(b - 1) * double(n) * std::log(double(n)))) {
                    c.expect(false, "strict bound fails at n=" + std::to_string(n) +
                                        " b=" + std::to_string(b));
                    ok = false;
                }
            }
        }
        c.expect(ok, "");
    }
    return c.result("drazin-griffith");
}

// ----------------------------------------------------------------------
// takagi: pinned values, dyadic termination, the functional-equation route,
// the |h| log(1/|h|) modulus sweep.
// ----------------------------------------------------------------------
SuiteResult suite_takagi() {
    Checker c;
    real_init();
    c.expect(takagi(Real(0)) == 0, "tau(0)");
    c.expect(takagi(Real(1)) == 0, "tau(1)");
    c.expect(takagi(Real(1) / 2) == Real(1) / 2, "tau(1/2)");
    c.expect(takagi(Real(1) / 4) == Real(1) / 2, "tau(1/4)");
    c.expect(abs(takagi(Real(1) / 3) - Real(2) / 3) < 1e-28, "tau(1/3)");

    // Independent route: tau(x) = <<x>> + tau(frac 2x)/2, iterated.
    const auto tau_fe = [](Real x) {
        Real acc = 0, w = 1;
        for (int i = 0; i < 400 && x != 0; ++i) {
            acc += w * (x <= Real(1) / 2 ? x : 1 - x);
            w /= 2;
            x *= 2;
            if (x >= 1) x -= 1;
        }
        return acc;
    };
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 300; ++i) {
        // Random dyadic p/2^40 and random double points.
        const Real x1 = Real(rng() % (uint64_t(1) << 40)) / (uint64_t(1) << 40);
        c.expect(takagi(x1) == tau_fe(x1), "functional equation route (dyadic)");
        const Real x2 = Real(unit_double(rng));
        c.expect(abs(takagi(x2) - tau_fe(x2)) < 1e-60, "functional equation route");
    }
    // Modulus of continuity sweep with C = 4 (sanity band, not the sharp
    // constant): |tau(x+h) - tau(x)| <= C |h| log(1/|h|), |h| <= 1/2.
    for (int i = 0; i < 1000; ++i) {
        double a = unit_double(rng), b = unit_double(rng);
        if (std::fabs(a - b) > 0.5 || a == b) { --i; continue; }
        const double h = std::fabs(a - b);
        const double diff =
            std::fabs((takagi(Real(a)) - takagi(Real(b))).convert_to<double>());
        c.expect(diff <= 4.0 * h * std::log(1.0 / h) + 1e-12,
                 "modulus violated at h=" + std::to_string(h));
    }
    return c.result("takagi");
}

// ----------------------------------------------------------------------
// delange: nonpositivity with zeros exactly at powers, the Takagi bridge,
// the periodicity surrogate, the constant Fourier term, magnitude bounds.
// ----------------------------------------------------------------------
SuiteResult suite_delange() {
    Checker c;
    real_init();
    for (uint32_t b : {2, 3, 10}) {
        bool ok = true;
        for (uint64_t n = 1; n <= 100000 && ok; ++n) {
            const Real f = delange_at_integer(n, b);
            if (is_power_of(n, b)) {
                if (abs(f) > 1e-12) {
                    c.expect(false, "f_b not ~0 at power n=" + std::to_string(n) +
                                        " b=" + std::to_string(b));
                    ok = false;
                }
            } else if (!(f < 0)) {
                c.expect(false, "f_b not negative at n=" + std::to_string(n) +
                                    " b=" + std::to_string(b));
                ok = false;
            }
        }
        c.expect(ok, "");
    }
    c.expect(abs(delange_at_integer(3, 2) - (Real(2) / 3 - log(Real(3)) / const_ln2() / 2)) <
                 1e-40,
             "f_2(log_2 3) definition");
    c.expect(abs(delange_at_integer(3, 2) + 0.125814) < 1e-5, "f_2(log_2 3) value");

    // Bridge: f_2 through Takagi equals f_2 through digit sums.
    std::mt19937_64 rng(kSeed);
    Real worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const uint64_t n = 2 + rng() % 999999;
        Real x = log(Real(n)) / const_ln2();
        x -= floor(x);
        const Real diff = abs(f2_from_takagi(x) - delange_at_integer(n, 2));
        if (diff > worst) worst = diff;
    }
    c.expect(worst < 1e-10, "bridge disagreement " + worst.str(6));
    c.expect(f2_from_takagi(Real(0)) == 0, "f_2(0) via bridge");
    c.expect(f2_from_takagi(Real(1)) == 0, "f_2(1) via bridge");
    c.expect(abs(f2_from_takagi(Real(3) / 2) - f2_from_takagi(Real(1) / 2)) < 1e-60,
             "bridge argument reduced mod 1");

    // Periodicity surrogate: same value at n and n*b.
    for (uint32_t b : {2, 3, 10})
        for (int i = 0; i < 100; ++i) {
            const uint64_t n = 1 + rng() % 100000;
            c.expect(abs(delange_at_integer(n, b) - delange_at_integer(n * b, b)) < 1e-10,
                     "periodicity surrogate failed at n=" + std::to_string(n));
        }

    // Constant Fourier coefficient vs a seeded Monte-Carlo mean over
    // uniform x = log_2 n mod 1 (n ~ 2^{20+x}).
    double mean = 0;
    const int samples = 100000;
    for (int i = 0; i < samples; ++i) {
        const double x = unit_double(rng);
        const uint64_t n =
            static_cast<uint64_t>(std::llround(std::ldexp(std::exp2(x), 20)));
        mean += delange_at_integer(n, 2).convert_to<double>();
    }
    mean /= samples;
    c.expect(std::fabs(fourier_c0(2) - mean) < 5e-3,
             "fourier c0 MC mismatch: " + std::to_string(mean));
    c.expect(std::fabs(fourier_c0(2) + 0.145599) < 1e-4, "c_2(0) value");
    for (uint32_t b = 2; b <= 16; ++b)
        c.expect(fourier_c0(b) < 0, "c_b(0) not negative at b=" + std::to_string(b));

    // Magnitude bound.
    for (uint32_t b = 3; b <= 16; ++b) {
        const auto rep = dg_magnitude_check(b, 10000);
        c.expect(rep.ok, "magnitude bound failed at b=" + std::to_string(b));
        c.expect(rep.max_scaled <= (b - 1) / 2.0 * rep.bound + 1.0,
                 "rearranged magnitude bound failed");
    }
    c.expect(std::fabs(dg_magnitude_check(3).bound - 2 * std::log(2.0) / std::log(3.0)) <
                 1e-12,
             "b=3 bound value");
    c.expect(std::fabs(dg_magnitude_check(10).bound -
                       9.0 / 8.0 * std::log(9.0) / std::log(10.0)) < 1e-12,
             "b=10 bound value");
    return c.result("delange");
}

// ----------------------------------------------------------------------
// asymptotics: series vs exact oracles, residual decay bands, coefficient
// identities, the Glaisher constant.
// ----------------------------------------------------------------------
SuiteResult suite_asymptotics() {
    Checker c;
    real_init();
    // Bernoulli numbers and coefficient tables.
    c.expect(bernoulli(0) == 1 && bernoulli(1) == BigRat(-1, 2) &&
                 bernoulli(2) == BigRat(1, 6) && bernoulli(3) == 0 &&
                 bernoulli(6) == BigRat(1, 42) && bernoulli(12) == BigRat(-691, 2730),
             "Bernoulli table");
    const BigRat cs[] = {BigRat(1, 12),   BigRat(-1, 240), BigRat(-1, 360),
                         BigRat(1, 1008), BigRat(1, 1260), BigRat(-1, 1440)};
    const BigRat ds[] = {BigRat(0), BigRat(1, 720),  BigRat(0),
                         BigRat(-1, 5040), BigRat(0), BigRat(1, 10080)};
    const BigRat gs[] = {BigRat(-1, 12),  BigRat(1, 180),   BigRat(1, 360),
                         BigRat(-1, 840), BigRat(-1, 1260), BigRat(1, 1260)};
    for (unsigned j = 1; j <= 6; ++j) {
        c.expect(coeff_c(j) == cs[j - 1], "c_" + std::to_string(j));
        c.expect(coeff_d(j) == ds[j - 1], "d_" + std::to_string(j));
        c.expect(coeff_g(j) == gs[j - 1], "g_" + std::to_string(j));
    }
    for (unsigned j = 1; j <= 12; ++j) {
        c.expect(coeff_g(j) == coeff_d(j) - coeff_c(j),
                 "g = d - c at j=" + std::to_string(j));
        if (j % 2 == 1) c.expect(coeff_d(j) == 0, "odd d_j nonzero");
    }

    // Gamma series against exact factorials.
    c.expect(abs(log_gamma_series(Real(10), 3).value - log_natural(factorial(10))) < 1e-10,
             "log Gamma(11) series");
    Real prev_res = 0;
    for (unsigned order = 0; order <= 3; ++order) {
        const Real res = abs(log_gamma_series(Real(20), order).value -
                             log_natural(factorial(20)));
        if (order > 0) c.expect(res < prev_res, "gamma residual not decreasing");
        prev_res = res;
    }

    // Barnes G against the exact superfactorial: G(21) = prod_{k<=19} k!.
    c.expect(abs(log_barnes_g_series(Real(20), 2).value -
                 log_natural(superfactorial(19))) < 1e-8,
             "log G(21) series vs superfactorial");
    // Residual ratio between z = 32 and z = 64 at fixed order ~ 2^{2N+2}.
    {
        const unsigned order = 2;
        const Real r32 = abs(log_barnes_g_series(Real(32), order).value -
                             log_natural(superfactorial(31)));
        const Real r64 = abs(log_barnes_g_series(Real(64), order).value -
                             log_natural(superfactorial(63)));
        const double ratio = (r32 / r64).convert_to<double>();
        c.expect(ratio > 32 && ratio < 128,
                 "Barnes residual ratio " + std::to_string(ratio));
    }

    // Integer-argument expansions against exact products.
    c.expect(abs(log_superfactorial_series(50, 2).value -
                 log_natural(superfactorial(50))) < 1e-6,
             "superfactorial series at n=50");
    c.expect(abs(log_hyperfactorial_series(50, 2).value -
                 log_natural(hyperfactorial(50))) < 1e-6,
             "hyperfactorial series at n=50");
    c.expect(abs(log_gbar_series(100, 2).value -
                 log_natural(binomial_product(100))) < 1e-5,
             "gbar series at n=100");
    // Termwise: gbar series = hyperfactorial series - superfactorial series.
    for (uint64_t n : {64, 300}) {
        const Real lhs = log_gbar_series(n, 6).value;
        const Real rhs = log_hyperfactorial_series(n, 6).value -
                         log_superfactorial_series(n, 6).value;
        c.expect(abs(lhs - rhs) < 1e-50, "g series != d - c series at n=" +
                                             std::to_string(n));
    }

    // Residual decay bands: |exact - series_N(n)| * n^{N+1} stays within a
    // factor-4 band as n doubles through 64..1024.
    std::map<uint64_t, Real> exact_log;
    {
        GbarSweep sweep;
        while (sweep.n() < 1024) {
            sweep.advance();
            const uint64_t n = sweep.n();
            if (n == 64 || n == 128 || n == 256 || n == 512 || n == 1024)
                exact_log[n] = log_natural(sweep.value());
        }
    }
    for (unsigned order = 0; order <= 4; ++order) {
        Real lo = 0, hi = 0;
        bool first = true;
        for (const auto& [n, lg] : exact_log) {
            Real scaled = abs(lg - log_gbar_series(n, order).value);
            for (unsigned i = 0; i <= order; ++i) scaled *= n;
            if (first) { lo = hi = scaled; first = false; }
            else { lo = min(lo, scaled); hi = max(hi, scaled); }
        }
        c.expect(hi < 4 * lo, "residual band too wide at order " + std::to_string(order) +
                                  ": " + Real(hi / lo).str(5));
    }
    // The two g_4 candidates: the closed-form -1/840 must beat -1/860.
    {
        const uint64_t n = 512;
        const Real base = log_gbar_series(n, 4).value;  // uses g_4 = -1/840
        const Real n4 = Real(n) * Real(n) * Real(n) * Real(n);
        const BigRat shift = BigRat(-1, 860) - coeff_g(4);
        const Real with_alt =
            base + Real(numerator(shift)) / Real(denominator(shift)) / n4;
        const Real res_good = abs(exact_log[n] - base);
        const Real res_alt = abs(exact_log[n] - with_alt);
        c.expect(res_good * 10 < res_alt,
                 "g_4 = -1/840 does not dominate the -1/860 alternative");
    }

    // Glaisher-Kinkelin constant.
    c.expect(glaisher_constant_str(11) == "1.2824271291", "Glaisher leading digits");
    c.expect(abs(glaisher_log_estimate(400, 12) - glaisher_log_estimate(800, 12)) < 1e-12,
             "Glaisher oracle stability");
    c.expect(Real(1) / 12 - log(glaisher_constant()) < 0, "1/12 - log A sign");
    c.expect(glaisher_constant() > exp(Real(1) / 12), "A > e^{1/12}");

    // Leading-term dominance at n = 1000.
    {
        const Real lg = log_natural(binomial_product(1000));
        const double ratio = (lg / (Real(1000) * 1000 / 2)).convert_to<double>();
        c.expect(std::fabs(ratio - 1.0) < 0.05, "n^2/2 dominance at n=1000");
    }
    return c.result("asymptotics");
}

// ----------------------------------------------------------------------
// primes: sieve sanity, the factorization identity, the Chebyshev bound,
// the derivation-chain links (with the true small-n violation set of the
// lower link), the PNT residual behaviour.
// ----------------------------------------------------------------------
SuiteResult suite_primes() {
    Checker c;
    const PrimeTable pt = sieve(1000000);
    c.expect(pt.primes.size() == 78498, "pi(1e6)");
    c.expect(pt.count_upto(100) == 25, "pi(100)");
    c.expect(pt.count_upto(2) == 1, "pi(2)");
    c.expect(pt.count_upto(10) == 4 && pt.primes[0] == 2 && pt.primes[1] == 3 &&
                 pt.primes[2] == 5 && pt.primes[3] == 7,
             "sieve(10)");
    {
        std::mt19937_64 rng(kSeed);
        for (int i = 0; i < 300; ++i) {
            const uint64_t n = 2 + rng() % 999998;
            bool prime = true;
            for (uint64_t d = 2; d * d <= n; ++d)
                if (n % d == 0) { prime = false; break; }
            c.expect(pt.contains(n) == prime, "sieve disagrees with trial division at " +
                                                  std::to_string(n));
        }
    }

    // Factorization identity for every n <= 300.
    bool fact_ok = true;
    for (uint64_t n = 1; n <= 300; ++n) {
        const auto rep = factorization_identity(n);
        if (!rep.ok) {
            c.expect(false, "factorization identity failed at n=" + std::to_string(n));
            fact_ok = false;
            break;
        }
    }
    c.expect(fact_ok, "");
    c.expect(factor_gbar(7) ==
                 std::vector<std::pair<uint32_t, uint64_t>>({{3, 2}, {5, 2}, {7, 6}}),
             "Gbar_7 factors");
    c.expect(factor_gbar(6) ==
                 std::vector<std::pair<uint32_t, uint64_t>>({{2, 4}, {3, 4}, {5, 3}}),
             "Gbar_6 factors");
    c.expect(factor_gbar(1).empty(), "Gbar_1 factors");

    // Chebyshev bound over the dense range and the two sparse points.
    bool cheb_ok = true;
    for (uint64_t n = 2; n <= 10000; ++n) {
        const auto rep = chebyshev_lower_bound(n, pt, false);
        if (!rep.ok) {
            c.expect(false, "Chebyshev bound failed at n=" + std::to_string(n));
            cheb_ok = false;
            break;
        }
    }
    c.expect(cheb_ok, "");
    c.expect(chebyshev_lower_bound(100000, pt, false).ok, "Chebyshev at 1e5");
    c.expect(chebyshev_lower_bound(1000000, pt, false).ok, "Chebyshev at 1e6");
    c.expect(pt.count_upto(1000000) == 78498 &&
                 chebyshev_lower_bound(1000000, pt, false).bound < 78498,
             "pi(1e6) vs bound");

    // Chain links against exact logarithms for 2 <= n <= 2000.  The lower
    // link genuinely fails for 3 <= n <= 18 (the n^2/2 - (n/2)log n line
    // crosses log Gbar_n only at n = 19); assert that exact set.
    {
        GbarSweep sweep;
        sweep.advance();  // n = 1
        std::vector<uint64_t> lower_violations;
        bool upper_ok = true;
        while (sweep.n() < 2000) {
            sweep.advance();
            const uint64_t n = sweep.n();
            const Real lg = log_natural(sweep.value());
            const Real ln = log(Real(n));
            if (n >= 3 && lg < Real(n) * n / 2 - Real(n) * ln / 2)
                lower_violations.push_back(n);
            if (n <= 10000 && !(lg <= Real(pt.count_upto(n)) * n * ln))
                upper_ok = false;
        }
        c.expect(upper_ok, "upper chain link failed below 2000");
        std::vector<uint64_t> expected;
        for (uint64_t n = 3; n <= 18; ++n) expected.push_back(n);
        c.expect(lower_violations == expected,
                 "lower link violation set is not exactly {3..18} (found " +
                     std::to_string(lower_violations.size()) + " entries)");
    }
    // Above the exact range the series confirms the lower link comfortably.
    for (uint64_t n : {5000, 100000, 1000000}) {
        const double lg = log_gbar_series(n, 4).value.convert_to<double>();
        c.expect(lg >= 0.5 * double(n) * double(n) -
                           0.5 * double(n) * std::log(double(n)),
                 "lower link failed at n=" + std::to_string(n));
    }

    // PNT residual: exact zero at n = 2, decreasing magnitude across decades.
    c.expect(std::fabs(pnt_residual(2, pt)) < 1e-12, "residual(2)");
    const double r3 = pnt_residual(1000, pt);
    const double r5 = pnt_residual(100000, pt);
    const double r6 = pnt_residual(1000000, pt);
    c.expect(std::fabs(r5) < std::fabs(r3), "residual trend 1e3 -> 1e5");
    c.expect(std::fabs(r6) < std::fabs(r5), "residual trend 1e5 -> 1e6");
    return c.result("primes");
}

using SuiteFn = SuiteResult (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"radix", suite_radix},
        {"exact", suite_exact},
        {"formulas", suite_formulas},
        {"oracle", suite_oracle},
        {"appendix-b", suite_appendix_b},
        {"carries", suite_carries},
        {"extremes", suite_extremes},
        {"bounds", suite_bounds},
        {"drazin-griffith", suite_drazin_griffith},
        {"takagi", suite_takagi},
        {"delange", suite_delange},
        {"asymptotics", suite_asymptotics},
        {"primes", suite_primes},
    };
    return reg;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    names.push_back("all");
    return names;
}

SuiteResult run_suite(const std::string& name) {
    if (name == "all") {
        SuiteResult total;
        total.name = "all";
        total.passed = true;
        std::ostringstream detail;
        for (const auto& [suite, fn] : registry()) {
            const SuiteResult r = fn();
            total.checks += r.checks;
            total.passed = total.passed && r.passed;
            detail << suite << ": " << (r.passed ? "pass" : "FAIL") << " ("
                   << r.detail << ")\n";
        }
        total.detail = detail.str();
        return total;
    }
    for (const auto& [suite, fn] : registry())
        if (suite == name) return fn();
    throw InvalidArgument("unknown verification suite: " + name);
}

}  // namespace gbar
