#include "emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "asymptotics.hpp"
#include "delange.hpp"
#include "exact.hpp"
#include "orders.hpp"
#include "primestats.hpp"
#include "radix.hpp"

namespace gbar {

namespace {

// Renders a stored decomposition term: exact integer when scale divides it,
// reduced fraction otherwise.
std::string term_str(const BigInt& v, uint32_t scale) {
    if (scale == 1) return v.str();
    return BigRat(v, BigInt(scale)).str();
}

std::string pad_left(const std::string& s, size_t w) {
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

struct TableRow {
    std::string cells[8];
};

std::vector<TableRow> table_rows(uint64_t p, uint64_t max) {
    if (p < 2) throw InvalidArgument("table: p must be >= 2");
    std::vector<TableRow> rows;
    rows.reserve(max);
    for (uint64_t n = 1; n <= max; ++n) {
        const auto parts = ord_parts(n, p);
        const auto ds = nu_digit_sum(n, static_cast<uint32_t>(p));
        const auto bl = nu_bilinear(n, static_cast<uint32_t>(p));
        if (parts.value != ds.value || ds.value != bl.value)
            throw InternalInconsistency("table: the three formulas disagree");
        rows.push_back(TableRow{{std::to_string(n), parts.s_plus.str(),
                                 parts.s_minus.str(), term_str(ds.s_plus, ds.scale),
                                 term_str(ds.s_minus, ds.scale), bl.s_plus.str(),
                                 bl.s_minus.str(), parts.value.str()}});
    }
    return rows;
}

const char* const kTableHeaders[8] = {"n",       "ord_dstar", "ord_nstar",
                                      "s2_plus", "s2_minus",  "s3_plus",
                                      "s3_minus", "ord"};

}  // namespace

std::string format_real(double v) {
    if (v == 0.0) return "0.0";  // also normalizes -0
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    std::string s(buf, res.ptr);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

std::string table_csv(uint64_t p, uint64_t max) {
    std::string out;
    for (int c = 0; c < 8; ++c) {
        out += kTableHeaders[c];
        out += c == 7 ? '\n' : ',';
    }
    for (const auto& row : table_rows(p, max))
        for (int c = 0; c < 8; ++c) {
            out += row.cells[c];
            out += c == 7 ? '\n' : ',';
        }
    return out;
}

std::string table_text(uint64_t p, uint64_t max) {
    const auto rows = table_rows(p, max);
    size_t width[8];
    for (int c = 0; c < 8; ++c) {
        width[c] = std::string(kTableHeaders[c]).size();
        for (const auto& row : rows) width[c] = std::max(width[c], row.cells[c].size());
    }
    std::string out;
    for (int c = 0; c < 8; ++c) {
        out += pad_left(kTableHeaders[c], width[c]);
        out += c == 7 ? "\n" : "  ";
    }
    for (const auto& row : rows)
        for (int c = 0; c < 8; ++c) {
            out += pad_left(row.cells[c], width[c]);
            out += c == 7 ? "\n" : "  ";
        }
    return out;
}

std::string series_csv(uint64_t p, uint64_t max, bool scaled) {
    if (p < 2 || p >= (uint64_t(1) << 32))
        throw InvalidArgument("series: p out of range");
    std::string out = "n,value\n";
    const double lp = std::log(static_cast<double>(p));
    for (uint64_t n = 1; n <= max; ++n) {
        const int64_t ord = nu_value(n, static_cast<uint32_t>(p));
        out += std::to_string(n);
        out += ',';
        if (!scaled) {
            out += std::to_string(ord);
        } else {
            const double denom = 0.5 * double(n) * std::log(double(n)) / lp;
            const double v = ord == 0 ? 0.0 : double(ord) / denom;
            // ord < n log_p n, so the rescaled series stays in [0, 2).
            if (v < 0.0 || v >= 2.0)
                throw InternalInconsistency("series: rescaled value left [0, 2)");
            out += format_real(v);
        }
        out += '\n';
    }
    return out;
}

std::string delange_csv(uint32_t b, uint32_t grid) {
    if (b < 2) throw InvalidArgument("delange: base must be >= 2");
    if (grid < 1) throw InvalidArgument("delange: grid must be >= 1");
    std::string out = "x,f\n";
    if (b == 2) {
        for (uint32_t i = 0; i < grid; ++i) {
            const Real x = Real(i) / grid;
            const Real f = f2_from_takagi(x);
            out += format_real(x.convert_to<double>());
            out += ',';
            out += format_real(f.convert_to<double>());
            out += '\n';
        }
        return out;
    }
    // General base: nearest integer sample points n ~ b^{m+x}; the abscissa
    // emitted is the grid point, off from frac(log_b n) by at most ~b^{-m}.
    const unsigned m = static_cast<unsigned>(std::ceil(20.0 / std::log2(double(b))));
    const double base_pow = std::pow(double(b), double(m));
    for (uint32_t i = 0; i < grid; ++i) {
        const double x = double(i) / grid;
        const uint64_t n =
            static_cast<uint64_t>(std::llround(base_pow * std::pow(double(b), x)));
        out += format_real(x);
        out += ',';
        out += format_real(delange_at_integer(n, b).convert_to<double>());
        out += '\n';
    }
    return out;
}

std::string asym_report(uint64_t n, unsigned order) {
    const auto exp = log_gbar_series(n, order);
    std::string out = "log Gbar_" + std::to_string(n) + ", series order " +
                      std::to_string(order) + "\n";
    size_t w = 0;
    for (const auto& [label, v] : exp.terms) w = std::max(w, label.size());
    for (const auto& [label, v] : exp.terms) {
        out += "  " + label + std::string(w - label.size(), ' ') + " = " +
               format_real(v.convert_to<double>()) + "\n";
    }
    out += "  series total = " + format_real(exp.value.convert_to<double>()) + "\n";
    if (n <= exact_cap()) {
        const Real exact = log_natural(binomial_product(n));
        out += "  exact        = " + format_real(exact.convert_to<double>()) + "\n";
        out += "  residual     = " +
               format_real(Real(exact - exp.value).convert_to<double>()) + "\n";
    } else {
        out += "  exact        = (n above exact cap " + std::to_string(exact_cap()) +
               ")\n";
    }
    return out;
}

std::string gbar_string(uint64_t n) {
    if (n > exact_cap()) throw CapExceeded("gbar: n above the exact-computation cap");
    return binomial_product(n).str();
}

std::string factor_string(uint64_t n) {
    if (n > exact_cap()) throw CapExceeded("gbar: n above the exact-computation cap");
    const auto rep = factorization_identity(n);
    if (!rep.ok)
        throw InternalInconsistency("factor_string: reconstruction mismatch");
    std::string out = rep.gbar.str() + " = ";
    if (rep.factors.empty()) return out + "1";
    bool first = true;
    for (const auto& [p, e] : rep.factors) {
        if (!first) out += " * ";
        first = false;
        out += std::to_string(p);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string prime_report_text(uint64_t n) {
    if (n < 2) throw InvalidArgument("primes: n must be >= 2");
    const PrimeTable pt = sieve(n);
    const auto rep = chebyshev_lower_bound(n, pt);
    const double residual = pnt_residual(n, pt);
    std::string out;
    out += "n                = " + std::to_string(n) + "\n";
    out += "pi(n)            = " + std::to_string(rep.pi_n) + "\n";
    out += "n/(2 log n) - 1/2 = " + format_real(rep.bound) + "\n";
    out += std::string("pi(n) >= bound   : ") + (rep.ok ? "yes" : "NO") + "\n";
    out += "log Gbar_n       = " + format_real(rep.log_gbar) +
           (n <= exact_cap() ? " (exact)" : " (series)") + "\n";
    out += std::string("log Gbar_n >= n^2/2 - (n/2) log n : ") +
           (rep.lower_ok ? "yes" : "NO") + "\n";
    out += std::string("log Gbar_n <= pi(n) n log n       : ") +
           (rep.upper_ok ? "yes" : "NO") + "\n";
    out += "pnt residual     = " + format_real(residual) + "\n";
    return out;
}

std::string prime_ratios_csv(uint64_t n) {
    if (n < 2) throw InvalidArgument("primes: n must be >= 2");
    const PrimeTable pt = sieve(n);
    std::string out = "p,ord,ratio\n";
    const double ln = std::log(static_cast<double>(n));
    for (uint32_t p : pt.primes) {
        const int64_t ord = nu_value(n, p);
        const double scale = double(n) * ln / std::log(double(p));
        out += std::to_string(p);
        out += ',';
        out += std::to_string(ord);
        out += ',';
        out += format_real(double(ord) / scale);
        out += '\n';
    }
    return out;
}

namespace {

void append_decomp_csv(std::string& out, const char* name, const OrderDecomposition& d) {
    out += name;
    out += ',';
    out += d.s_plus.str();
    out += ',';
    out += d.s_minus.str();
    out += ',';
    out += std::to_string(d.scale);
    out += ',';
    out += d.value.str();
    out += '\n';
}

void append_decomp_text(std::string& out, const char* name, const OrderDecomposition& d) {
    out += std::string("  ") + name + ": S+ = " + term_str(d.s_plus, d.scale) +
           ", S- = " + term_str(d.s_minus, d.scale) + ", value = " + d.value.str() +
           "\n";
}

}  // namespace

std::string ord_report(uint64_t n, uint64_t p, bool csv) {
    const auto parts = ord_parts(n, p);
    const auto ds = nu_digit_sum(n, static_cast<uint32_t>(p));
    const auto bl = nu_bilinear(n, static_cast<uint32_t>(p));
    const bool agree = parts.value == ds.value && ds.value == bl.value;
    std::string out;
    if (csv) {
        out = "formula,s_plus,s_minus,scale,value\n";
        append_decomp_csv(out, "parts", parts);
        append_decomp_csv(out, "digit_sum", ds);
        append_decomp_csv(out, "bilinear", bl);
    } else {
        out = "ord_" + std::to_string(p) + "(Gbar_" + std::to_string(n) +
              ") = " + parts.value.str() + "\n";
        append_decomp_text(out, "parts    ", parts);
        append_decomp_text(out, "digit-sum", ds);
        append_decomp_text(out, "bilinear ", bl);
        out += std::string("  formulas agree: ") + (agree ? "yes" : "NO") + "\n";
    }
    if (!agree) throw InternalInconsistency("ord_report: formulas disagree");
    return out;
}

std::string nu_report(uint64_t n, uint32_t b, bool csv) {
    const auto ds = nu_digit_sum(n, b);
    const auto bl = nu_bilinear(n, b);
    const bool agree = ds.value == bl.value;
    std::string out;
    if (csv) {
        out = "formula,s_plus,s_minus,scale,value\n";
        append_decomp_csv(out, "digit_sum", ds);
        append_decomp_csv(out, "bilinear", bl);
    } else {
        out = "nu_" + std::to_string(b) + "(Gbar_" + std::to_string(n) +
              ") = " + ds.value.str() + "\n";
        append_decomp_text(out, "digit-sum", ds);
        append_decomp_text(out, "bilinear ", bl);
        out += std::string("  dual forms agree: ") + (agree ? "yes" : "NO") + "\n";
        if (n >= 1 && n <= exact_cap()) {
            const uint64_t td = ord_trial_division(binomial_product(n), b);
            out += "  ord_" + std::to_string(b) + " by trial division = " +
                   std::to_string(td) + "\n";
            out += std::string("  nu coincides with ord: ") +
                   (BigInt(td) == ds.value ? "yes" : "no") + "\n";
        }
    }
    if (!agree) throw InternalInconsistency("nu_report: dual forms disagree");
    return out;
}

}  // namespace gbar
