#include "gbar.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "asymptotics.hpp"
#include "delange.hpp"
#include "emit.hpp"
#include "exact.hpp"
#include "orders.hpp"
#include "primestats.hpp"
#include "radix.hpp"
#include "types.hpp"
#include "verify.hpp"

struct gbar_nat {
    gbar::BigInt v;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Translates C++ errors to status codes at the ABI boundary.
template <typename Fn>
gbar_status guarded(Fn&& fn) {
    try {
        fn();
        return GBAR_OK;
    } catch (const gbar::CapExceeded&) {
        return GBAR_ECAP;
    } catch (const gbar::InvalidArgument&) {
        return GBAR_EINVAL;
    } catch (const gbar::InternalInconsistency&) {
        return GBAR_EINTERNAL;
    } catch (const std::invalid_argument&) {
        return GBAR_EINVAL;
    } catch (const std::bad_alloc&) {
        return GBAR_EINTERNAL;
    }
}

gbar_status emit_nat(gbar_nat** out, gbar::BigInt v) {
    if (!out) return GBAR_EINVAL;
    *out = new (std::nothrow) gbar_nat{std::move(v)};
    return *out ? GBAR_OK : GBAR_EINTERNAL;
}

gbar_status fill_decomp(gbar_ord_decomp* out, const gbar::OrderDecomposition& d) {
    if (!out) return GBAR_EINVAL;
    out->formula = static_cast<int>(d.formula);
    out->scale = d.scale;
    out->s_plus = dup_string(d.s_plus.str());
    out->s_minus = dup_string(d.s_minus.str());
    out->value = dup_string(d.value.str());
    return GBAR_OK;
}

gbar_status emit_string(char** out, const std::string& s) {
    if (!out) return GBAR_EINVAL;
    *out = dup_string(s);
    return *out ? GBAR_OK : GBAR_EINTERNAL;
}

}  // namespace

extern "C" {

const char* gbar_status_str(gbar_status s) {
    switch (s) {
        case GBAR_OK: return "ok";
        case GBAR_EINVAL: return "invalid argument";
        case GBAR_ECAP: return "exact-computation cap exceeded";
        case GBAR_EINTERNAL: return "internal consistency failure";
        case GBAR_EOVERFLOW: return "result does not fit";
    }
    return "unknown status";
}

const char* gbar_version(void) { return "0.1.0"; }

void gbar_str_free(char* s) { std::free(s); }

gbar_nat* gbar_nat_from_u64(uint64_t v) {
    return new (std::nothrow) gbar_nat{gbar::BigInt(v)};
}

gbar_nat* gbar_nat_from_str(const char* decimal) {
    if (!decimal || !*decimal) return nullptr;
    try {
        gbar::BigInt v(decimal);
        if (v < 0) return nullptr;
        return new gbar_nat{std::move(v)};
    } catch (...) {
        return nullptr;
    }
}

char* gbar_nat_to_str(const gbar_nat* v) {
    if (!v) return nullptr;
    return dup_string(v->v.str());
}

int gbar_nat_cmp(const gbar_nat* a, const gbar_nat* b) {
    if (a->v < b->v) return -1;
    if (a->v > b->v) return 1;
    return 0;
}

void gbar_nat_free(gbar_nat* v) { delete v; }

uint64_t gbar_exact_cap(void) { return gbar::exact_cap(); }
void gbar_exact_cap_set(uint64_t cap) { gbar::set_exact_cap(cap); }

gbar_status gbar_factorial(uint64_t n, gbar_nat** out) {
    return guarded([&] { emit_nat(out, gbar::factorial(n)); });
}

gbar_status gbar_superfactorial(uint64_t n, gbar_nat** out) {
    return guarded([&] { emit_nat(out, gbar::superfactorial(n)); });
}

gbar_status gbar_hyperfactorial(uint64_t n, gbar_nat** out) {
    return guarded([&] { emit_nat(out, gbar::hyperfactorial(n)); });
}

gbar_status gbar_binomial(uint64_t n, uint64_t t, gbar_nat** out) {
    return guarded([&] { emit_nat(out, gbar::binomial(n, t)); });
}

gbar_status gbar_binomial_product(uint64_t n, gbar_nat** out) {
    return guarded([&] {
        if (n > gbar::exact_cap())
            throw gbar::CapExceeded("binomial_product above the exact cap");
        emit_nat(out, gbar::binomial_product(n));
    });
}

gbar_status gbar_ord_trial_division(const gbar_nat* value, uint64_t base,
                                    uint64_t* out) {
    if (!value || !out) return GBAR_EINVAL;
    return guarded([&] { *out = gbar::ord_trial_division(value->v, base); });
}

gbar_status gbar_ord_factorial(uint64_t n, uint64_t p, uint64_t* out) {
    if (!out) return GBAR_EINVAL;
    return guarded([&] { *out = gbar::ord_factorial(n, p); });
}

gbar_status gbar_farey_count(uint64_t n, gbar_nat** out) {
    return guarded([&] { emit_nat(out, gbar::farey_count(n)); });
}

gbar_status gbar_digits(uint64_t n, uint32_t base, uint32_t* digits,
                        size_t capacity, size_t* len) {
    if (!digits || !len) return GBAR_EINVAL;
    gbar_status overflow = GBAR_OK;
    const gbar_status st = guarded([&] {
        const auto e = gbar::digits_of(n, base);
        *len = e.digits.size();
        if (e.digits.size() > capacity) {
            overflow = GBAR_EOVERFLOW;
            return;
        }
        std::memcpy(digits, e.digits.data(), e.digits.size() * sizeof(uint32_t));
    });
    return st != GBAR_OK ? st : overflow;
}

gbar_status gbar_digit_sum(uint64_t n, uint32_t base, uint64_t* out) {
    if (!out) return GBAR_EINVAL;
    return guarded([&] { *out = gbar::digit_sum(n, base); });
}

gbar_status gbar_running_digit_sum(uint64_t n, uint32_t base, gbar_nat** out) {
    return guarded([&] { emit_nat(out, gbar::running_digit_sum(n, base)); });
}

void gbar_ord_decomp_clear(gbar_ord_decomp* d) {
    if (!d) return;
    std::free(d->s_plus);
    std::free(d->s_minus);
    std::free(d->value);
    d->s_plus = d->s_minus = d->value = nullptr;
}

gbar_status gbar_ord_parts(uint64_t n, uint64_t p, gbar_ord_decomp* out) {
    return guarded([&] { fill_decomp(out, gbar::ord_parts(n, p)); });
}

gbar_status gbar_nu_digit_sum(uint64_t n, uint32_t b, gbar_ord_decomp* out) {
    return guarded([&] { fill_decomp(out, gbar::nu_digit_sum(n, b)); });
}

gbar_status gbar_nu_bilinear(uint64_t n, uint32_t b, gbar_ord_decomp* out) {
    return guarded([&] { fill_decomp(out, gbar::nu_bilinear(n, b)); });
}

gbar_status gbar_ord_binomial(uint64_t n, uint64_t t, uint64_t p, uint64_t* out) {
    if (!out) return GBAR_EINVAL;
    return guarded([&] { *out = gbar::ord_binomial(n, t, p); });
}

gbar_status gbar_carry_digit(uint64_t n, uint64_t t, uint32_t p, uint32_t j,
                             int* out) {
    if (!out) return GBAR_EINVAL;
    return guarded([&] { *out = gbar::carry_digit(n, t, p, j); });
}

gbar_status gbar_carry_total(uint64_t n, uint32_t p, uint32_t j, uint64_t* out) {
    if (!out) return GBAR_EINVAL;
    return guarded([&] { *out = gbar::carry_total(n, p, j); });
}

gbar_status gbar_upper_bound_m(uint64_t n, uint32_t p, uint64_t* out) {
    if (!out) return GBAR_EINVAL;
    return guarded([&] { *out = gbar::upper_bound_m(n, p); });
}

gbar_status gbar_nu_upper_bound(uint64_t n, uint32_t b, double* out) {
    if (!out) return GBAR_EINVAL;
    return guarded([&] { *out = gbar::nu_upper_bound(n, b); });
}

gbar_status gbar_bernoulli(uint32_t k, char** out) {
    return guarded([&] { emit_string(out, gbar::bernoulli(k).str()); });
}

gbar_status gbar_coeff_c(uint32_t j, char** out) {
    return guarded([&] { emit_string(out, gbar::coeff_c(j).str()); });
}

gbar_status gbar_coeff_d(uint32_t j, char** out) {
    return guarded([&] { emit_string(out, gbar::coeff_d(j).str()); });
}

gbar_status gbar_coeff_g(uint32_t j, char** out) {
    return guarded([&] { emit_string(out, gbar::coeff_g(j).str()); });
}

gbar_status gbar_log_gbar_series(uint64_t n, uint32_t order, double* out) {
    if (!out) return GBAR_EINVAL;
    return guarded(
        [&] { *out = gbar::log_gbar_series(n, order).value.convert_to<double>(); });
}

gbar_status gbar_log_superfactorial_series(uint64_t n, uint32_t order, double* out) {
    if (!out) return GBAR_EINVAL;
    return guarded([&] {
        *out = gbar::log_superfactorial_series(n, order).value.convert_to<double>();
    });
}

gbar_status gbar_log_hyperfactorial_series(uint64_t n, uint32_t order, double* out) {
    if (!out) return GBAR_EINVAL;
    return guarded([&] {
        *out = gbar::log_hyperfactorial_series(n, order).value.convert_to<double>();
    });
}

gbar_status gbar_glaisher(uint32_t digits, char** out) {
    return guarded([&] { emit_string(out, gbar::glaisher_constant_str(digits)); });
}

gbar_status gbar_delange_at_integer(uint64_t n, uint32_t b, double* out) {
    if (!out) return GBAR_EINVAL;
    return guarded(
        [&] { *out = gbar::delange_at_integer(n, b).convert_to<double>(); });
}

gbar_status gbar_takagi(double x, double tol, double* out) {
    if (!out) return GBAR_EINVAL;
    return guarded([&] { *out = gbar::takagi(gbar::Real(x), tol).convert_to<double>(); });
}

gbar_status gbar_f2_from_takagi(double x, double* out) {
    if (!out) return GBAR_EINVAL;
    return guarded(
        [&] { *out = gbar::f2_from_takagi(gbar::Real(x)).convert_to<double>(); });
}

gbar_status gbar_fourier_c0(uint32_t b, double* out) {
    if (!out) return GBAR_EINVAL;
    return guarded([&] { *out = gbar::fourier_c0(b); });
}

gbar_status gbar_prime_count(uint64_t x, uint64_t* out) {
    if (!out) return GBAR_EINVAL;
    return guarded([&] { *out = gbar::sieve(x < 2 ? 2 : x).count_upto(x); });
}

gbar_status gbar_chebyshev_check(uint64_t n, uint64_t* pi_n, double* bound, int* ok) {
    return guarded([&] {
        const auto rep = gbar::chebyshev_lower_bound(n, gbar::sieve(n), false);
        if (pi_n) *pi_n = rep.pi_n;
        if (bound) *bound = rep.bound;
        if (ok) *ok = rep.ok ? 1 : 0;
    });
}

gbar_status gbar_pnt_residual(uint64_t n, double* out) {
    if (!out) return GBAR_EINVAL;
    return guarded([&] { *out = gbar::pnt_residual(n, gbar::sieve(n < 2 ? 2 : n)); });
}

gbar_status gbar_emit_gbar(uint64_t n, int factored, char** out) {
    return guarded([&] {
        emit_string(out, factored ? gbar::factor_string(n) : gbar::gbar_string(n));
    });
}

gbar_status gbar_emit_table(uint64_t p, uint64_t max, int csv, char** out) {
    return guarded([&] {
        emit_string(out, csv ? gbar::table_csv(p, max) : gbar::table_text(p, max));
    });
}

gbar_status gbar_emit_series(uint64_t p, uint64_t max, int scaled, char** out) {
    return guarded([&] { emit_string(out, gbar::series_csv(p, max, scaled != 0)); });
}

gbar_status gbar_emit_delange(uint32_t b, uint32_t grid, char** out) {
    return guarded([&] { emit_string(out, gbar::delange_csv(b, grid)); });
}

gbar_status gbar_emit_asym(uint64_t n, uint32_t order, char** out) {
    return guarded([&] { emit_string(out, gbar::asym_report(n, order)); });
}

gbar_status gbar_emit_primes(uint64_t n, int csv, char** out) {
    return guarded([&] {
        emit_string(out, csv ? gbar::prime_ratios_csv(n) : gbar::prime_report_text(n));
    });
}

gbar_status gbar_emit_ord(uint64_t n, uint64_t p, int csv, char** out) {
    return guarded([&] { emit_string(out, gbar::ord_report(n, p, csv != 0)); });
}

gbar_status gbar_emit_nu(uint64_t n, uint32_t b, int csv, char** out) {
    return guarded([&] { emit_string(out, gbar::nu_report(n, b, csv != 0)); });
}

gbar_status gbar_verify_suite(const char* name, int* passed, char** report) {
    if (!name || !passed) return GBAR_EINVAL;
    return guarded([&] {
        const auto r = gbar::run_suite(name);
        *passed = r.passed ? 1 : 0;
        if (report)
            emit_string(report, r.name + ": " +
                                    (r.passed ? "pass" : "FAIL") + "\n" + r.detail);
    });
}

char* gbar_verify_suite_list(void) {
    std::string all;
    for (const auto& name : gbar::suite_names()) {
        all += name;
        all += '\n';
    }
    return dup_string(all);
}

} /* extern "C" */
