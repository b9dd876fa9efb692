// Acceptance suite: one check per release criterion, each printing a single
// [PASS]/[FAIL] line.  Run with no arguments for the full list, or with a
// criterion id (1..9, 10a, 10b, 10c) to run just that one (the ctest entries
// do the latter).
//
// 10c is implemented faithfully and is expected to fail: the asserted
// inequality log Gbar_n >= n^2/2 - (n/2) log n is false for 3 <= n <= 18
// (first true at n = 19), which the output documents.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "delange.hpp"
#include "emit.hpp"
#include "exact.hpp"
#include "orders.hpp"
#include "primestats.hpp"
#include "radix.hpp"
#include "types.hpp"

using namespace gbar;

namespace {

#ifndef GBAR_CLI_PATH
#define GBAR_CLI_PATH "gbar"
#endif
#ifndef GBAR_GOLDEN_DIR
#define GBAR_GOLDEN_DIR "."
#endif

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
    const std::string cmd = std::string(GBAR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int rc = pclose(pipe);
    if (exit_code) *exit_code = WEXITSTATUS(rc);
    return out;
}

std::string read_file(const std::string& path) {
    FILE* f = fopen(path.c_str(), "rb");
    if (!f) return "<missing file>";
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
    fclose(f);
    return out;
}

struct Outcome {
    bool ok = true;
    std::string notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!notes.empty()) notes += "; ";
            notes += what;
        }
    }
};

// --- criterion 1: the intro factorizations through the CLI ---------------
Outcome crit_1() {
    Outcome o;
    const char* expected[] = {
        "1 = 1",
        "2 = 2",
        "9 = 3^2",
        "96 = 2^5 * 3",
        "2500 = 2^2 * 5^4",
        "162000 = 2^4 * 3^4 * 5^3",
        "26471025 = 3^2 * 5^2 * 7^6",
    };
    for (uint64_t n = 1; n <= 7; ++n) {
        const std::string out = run_cli("gbar " + std::to_string(n) + " --factor");
        const std::string want = std::string(expected[n - 1]) + "\n";
        o.require(out == want, "gbar " + std::to_string(n) + " --factor printed '" +
                                   out + "'");
    }
    o.require(run_cli("gbar 1") == "1\n", "bare gbar 1");
    o.require(run_cli("gbar 5") == "2500\n", "bare gbar 5");
    return o;
}

// --- criterion 2: byte-identical comparison table ------------------------
Outcome crit_2() {
    Outcome o;
    const std::string csv = run_cli("table --p 2 --max 16 --format csv");
    const std::string txt = run_cli("table --p 2 --max 16 --format text");
    o.require(csv == read_file(std::string(GBAR_GOLDEN_DIR) + "/table_p2_max16.csv"),
              "csv table differs from golden bytes");
    o.require(txt == read_file(std::string(GBAR_GOLDEN_DIR) + "/table_p2_max16.txt"),
              "text table differs from golden bytes");
    o.require(csv == run_cli("table --p 2 --max 16 --format csv"),
              "table emission not deterministic");
    return o;
}

// --- criterion 3: three formulas vs the trial-division oracle ------------
Outcome crit_3() {
    Outcome o;
    const uint32_t small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                     23, 29, 31, 37, 41, 43, 47};
    GbarSweep sweep;
    for (uint64_t n = 1; n <= 300; ++n) {
        sweep.advance();
        for (uint32_t p : small_primes) {
            const uint64_t oracle = ord_trial_division(sweep.value(), p);
            const bool agree = BigInt(oracle) == ord_parts(n, p).value &&
                               int64_t(oracle) == nu_value(n, p) &&
                               int64_t(oracle) == nu_star_value(n, p);
            if (!agree) {
                o.require(false, "oracle disagreement at n=" + std::to_string(n) +
                                     ", p=" + std::to_string(p));
                return o;
            }
        }
    }
    for (uint64_t p : {2, 3, 5, 7, 11, 13})
        for (uint64_t n = 1; n <= 10000; ++n) {
            const auto parts = ord_parts(n, p);
            const auto ds = nu_digit_sum(n, static_cast<uint32_t>(p));
            const auto bl = nu_bilinear(n, static_cast<uint32_t>(p));
            if (parts.value != ds.value || ds.value != bl.value) {
                o.require(false, "mutual disagreement at n=" + std::to_string(n) +
                                     ", p=" + std::to_string(p));
                return o;
            }
        }
    o.notes = "p <= 50 vs exact Gbar_n for n <= 300; mutual agreement to n = 10^4";
    return o;
}

// --- criterion 4: nu_b == nu*_b -------------------------------------------
Outcome crit_4() {
    Outcome o;
    uint64_t checked = 0;
    for (uint32_t b = 2; b <= 16; ++b)
        for (uint64_t n = 1; n <= 100000; ++n) {
            if (nu_value(n, b) != nu_star_value(n, b)) {
                o.require(false, "nu_b != nu*_b at n=" + std::to_string(n) +
                                     ", b=" + std::to_string(b));
                return o;
            }
            ++checked;
        }
    o.notes = std::to_string(checked) + " (b, n) pairs, zero exceptions";
    return o;
}

// --- criterion 5: the extreme-value characterization ----------------------
Outcome crit_5() {
    Outcome o;
    for (uint64_t p : {2, 3, 5}) {
        uint64_t pk = 1;
        for (uint32_t k = 0; k <= 10; ++k, pk *= p) {
            for (uint64_t a = 1; a <= p - 1; ++a) {
                const uint64_t n = a * pk;
                const int64_t want =
                    int64_t(a) * (int64_t(k) * int64_t(pk) - int64_t((pk - 1) / (p - 1)));
                o.require(nu_value(n, static_cast<uint32_t>(p)) == want,
                          "ord(Gbar_{a p^k}) wrong at n=" + std::to_string(n));
                if (n >= 2)
                    o.require(nu_value(n - 1, static_cast<uint32_t>(p)) == 0,
                              "ord(Gbar_{a p^k - 1}) nonzero at n=" +
                                  std::to_string(n - 1));
            }
        }
        for (uint64_t n = 1; n <= 10000; ++n) {
            const auto digits = digits_of(n, static_cast<uint32_t>(p)).digits;
            int nonzero = 0;
            for (uint32_t d : digits) nonzero += d != 0;
            bool all_top = true;
            for (size_t i = 0; i + 1 < digits.size(); ++i)
                if (digits[i] != p - 1) all_top = false;
            const int64_t ord = nu_value(n, static_cast<uint32_t>(p));
            const uint64_t m = upper_bound_m(n, static_cast<uint32_t>(p));
            if ((ord == int64_t(m)) != (nonzero == 1) || (ord == 0) != all_top) {
                o.require(false, "boundary attained off-pattern at n=" +
                                     std::to_string(n) + ", p=" + std::to_string(p));
                return o;
            }
        }
    }
    o.notes = "boundaries attained exactly at n = a p^k and a p^k - 1";
    return o;
}

// --- criterion 6: range bounds and the rescaled series --------------------
Outcome crit_6() {
    Outcome o;
    for (uint64_t p : {2, 3, 5, 7, 11, 13})
        for (uint64_t n = 2; n <= 10000; ++n) {
            const int64_t ord = nu_value(n, static_cast<uint32_t>(p));
            const double limit = double(n) * std::log(double(n)) / std::log(double(p));
            if (ord < 0 || double(ord) >= limit) {
                o.require(false, "bound violated at n=" + std::to_string(n) +
                                     ", p=" + std::to_string(p));
                return o;
            }
        }
    // The rescaled series, as emitted.
    const std::string csv = run_cli("series --p 2 --max 1023 --scaled");
    std::istringstream ss(csv);
    std::string line;
    std::getline(ss, line);
    o.require(line == "n,value", "series header");
    size_t rows = 0;
    double max_seen = 0;
    while (std::getline(ss, line)) {
        const double v = std::stod(line.substr(line.find(',') + 1));
        o.require(v >= 0.0 && v < 2.0, "scaled value out of [0,2): " + line);
        max_seen = std::max(max_seen, v);
        ++rows;
        if (!o.ok) return o;
    }
    o.require(rows == 1023, "row count");
    std::ostringstream msg;
    msg << "scaled series max " << max_seen << " < 2";
    o.notes = msg.str();
    return o;
}

// --- criterion 7: the running-digit-sum bound ------------------------------
Outcome crit_7() {
    Outcome o;
    for (uint32_t b = 2; b <= 10; ++b) {
        DigitSumStream stream(1, 100001, b);
        while (!stream.done()) {
            const auto item = stream.next();
            const uint64_t n = item.n;
            uint64_t m = n, k = 0;
            bool power = true;
            while (m % b == 0) { m /= b; ++k; }
            power = m == 1;
            if (power) {
                if (2 * item.s != uint64_t(b - 1) * k * n) {
                    o.require(false, "equality missed at n=b^k, n=" + std::to_string(n) +
                                         ", b=" + std::to_string(b));
                    return o;
                }
            } else if (n >= 2 &&
                       !(2.0 * double(item.s) * std::log(double(b)) <
                         double(b - 1) * double(n) * std::log(double(n)))) {
                o.require(false, "strict bound missed at n=" + std::to_string(n) +
                                     ", b=" + std::to_string(b));
                return o;
            }
        }
    }
    o.notes = "equality exactly at n = b^k, strict otherwise (b <= 10, n <= 1e5)";
    return o;
}

// --- criterion 8: asymptotic expansion quality -----------------------------
Outcome crit_8() {
    Outcome o;
    real_init();
    for (unsigned j = 1; j <= 12; ++j)
        o.require(coeff_g(j) == coeff_d(j) - coeff_c(j),
                  "g != d - c at j=" + std::to_string(j));

    std::map<uint64_t, Real> exact_log;
    GbarSweep sweep;
    while (sweep.n() < 1024) {
        sweep.advance();
        const uint64_t n = sweep.n();
        if (n == 64 || n == 128 || n == 256 || n == 512 || n == 1024)
            exact_log[n] = log_natural(sweep.value());
    }
    std::ostringstream msg;
    for (unsigned order = 0; order <= 4; ++order) {
        Real lo = 0, hi = 0;
        bool first = true;
        for (const auto& [n, lg] : exact_log) {
            Real scaled = abs(lg - log_gbar_series(n, order).value);
            for (unsigned i = 0; i <= order; ++i) scaled *= n;
            if (first) { lo = hi = scaled; first = false; }
            else { lo = min(lo, scaled); hi = max(hi, scaled); }
        }
        o.require(hi < 4 * lo,
                  "band wider than 4x at order " + std::to_string(order));
        if (order == 4) msg << "order-4 band ratio " << Real(hi / lo).str(3) << "; ";
    }
    // g_4 resolution: -1/840 (closed form) vs -1/860 (the alternative).
    const uint64_t n = 1024;
    const Real base = log_gbar_series(n, 4).value;
    const BigRat shift = BigRat(-1, 860) - coeff_g(4);
    const Real alt = base + Real(numerator(shift)) / Real(denominator(shift)) /
                                (Real(n) * Real(n) * Real(n) * Real(n));
    const Real res840 = abs(exact_log[n] - base);
    const Real res860 = abs(exact_log[n] - alt);
    o.require(res840 * 10 < res860, "g_4 = -1/840 not clearly better");
    msg << "g_4 = -1/840 wins (residual " << Real(res860 / res840).str(3)
        << "x smaller than with -1/860)";
    o.notes = msg.str();
    return o;
}

// --- criterion 9: Delange / Takagi ------------------------------------------
Outcome crit_9() {
    Outcome o;
    real_init();
    for (uint32_t b : {2u, 3u, 10u}) {
        for (uint64_t n = 1; n <= 100000; ++n) {
            const Real f = delange_at_integer(n, b);
            uint64_t m = n;
            while (m % b == 0) m /= b;
            const bool power = m == 1;
            if ((power && abs(f) > 1e-12) || (!power && !(f < 0))) {
                o.require(false, "nonpositivity failed at n=" + std::to_string(n) +
                                     ", b=" + std::to_string(b));
                return o;
            }
        }
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    Real worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const uint64_t n = 2 + rng() % 999999;
        Real x = log(Real(n)) / const_ln2();
        x -= floor(x);
        const Real diff = abs(f2_from_takagi(x) - delange_at_integer(n, 2));
        if (diff > worst) worst = diff;
    }
    o.require(worst < 1e-10, "bridge disagreement " + worst.str(3));

    double mean = 0;
    const int samples = 100000;
    for (int i = 0; i < samples; ++i) {
        const double x = double(rng() >> 11) * 0x1.0p-53;
        const uint64_t n =
            static_cast<uint64_t>(std::llround(std::ldexp(std::exp2(x), 20)));
        mean += delange_at_integer(n, 2).convert_to<double>();
    }
    mean /= samples;
    const double c0 = fourier_c0(2);
    o.require(std::fabs(c0 - mean) < 5e-3,
              "MC mean " + std::to_string(mean) + " vs c0 " + std::to_string(c0));
    std::ostringstream msg;
    msg << "bridge max diff " << worst.str(3) << "; |c0 - MC mean| = "
        << std::fabs(c0 - mean);
    o.notes = msg.str();
    return o;
}

// --- criterion 10a: the factorization identity ------------------------------
Outcome crit_10a() {
    Outcome o;
    for (uint64_t n = 1; n <= 300; ++n) {
        const auto rep = factorization_identity(n);
        if (!rep.ok) {
            o.require(false, "reconstruction differs at n=" + std::to_string(n));
            return o;
        }
    }
    o.notes = "prod p^{ord_p} == Gbar_n bit-for-bit, n <= 300";
    return o;
}

// --- criterion 10b: the Chebyshev-type lower bound ---------------------------
Outcome crit_10b() {
    Outcome o;
    const PrimeTable pt = sieve(1000000);
    for (uint64_t n = 2; n <= 10000; ++n)
        if (!chebyshev_lower_bound(n, pt, false).ok) {
            o.require(false, "bound failed at n=" + std::to_string(n));
            return o;
        }
    for (uint64_t n : {100000, 1000000})
        o.require(chebyshev_lower_bound(n, pt, false).ok,
                  "bound failed at n=" + std::to_string(n));
    o.notes = "pi(n) >= n/(2 log n) - 1/2 on {2..1e4} and {1e5, 1e6}";
    return o;
}

// --- criterion 10c: the lower chain link, asserted as specified --------------
Outcome crit_10c() {
    Outcome o;
    std::vector<uint64_t> violations;
    GbarSweep sweep;
    sweep.advance();
    sweep.advance();  // n = 2
    while (sweep.n() < 2000) {
        sweep.advance();
        const uint64_t n = sweep.n();
        const Real lg = log_natural(sweep.value());
        if (lg < Real(n) * n / 2 - Real(n) * log(Real(n)) / 2)
            violations.push_back(n);
    }
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "log Gbar_n >= n^2/2 - (n/2) log n fails for " << violations.size()
            << " of 1998 values of n (n = " << violations.front() << ".."
            << violations.back() << "); the inequality first holds at n = "
            << violations.back() + 1 << " and then for every tested n up to 2000";
        o.require(false, msg.str());
    }
    return o;
}

struct Criterion {
    const char* id;
    const char* summary;
    std::function<Outcome()> run;
    double budget_seconds;  // 0 = no stated budget
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {"1", "intro factorizations via the CLI", crit_1, 1.0},
        {"2", "byte-identical comparison table (p=2, 16 rows)", crit_2, 1.0},
        {"3", "three formulas vs trial division; mutual agreement", crit_3, 120.0},
        {"4", "nu_b == nu*_b for b in 2..16, n <= 1e5", crit_4, 60.0},
        {"5", "extreme values at n = a p^k and a p^k - 1", crit_5, 0.0},
        {"6", "0 <= ord < n log_p n; rescaled series in [0,2)", crit_6, 0.0},
        {"7", "S_b(n) <= ((b-1)/2) n log_b n, equality iff n = b^k", crit_7, 0.0},
        {"8", "expansion residual bands; g = d - c; g_4 resolution", crit_8, 60.0},
        {"9", "f_b nonpositivity; Takagi bridge; Fourier constant", crit_9, 0.0},
        {"10a", "factorization identity, n <= 300", crit_10a, 120.0},
        {"10b", "Chebyshev bound on {2..1e4} + {1e5, 1e6}", crit_10b, 120.0},
        {"10c", "lower chain link for 3 <= n <= 2000 (documented failure)", crit_10c,
         120.0},
    };
    return list;
}

bool run_one(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.budget_seconds > 0 && elapsed > c.budget_seconds) {
        o.ok = false;
        o.notes += (o.notes.empty() ? "" : "; ") + std::string("over the ") +
                   std::to_string(c.budget_seconds) + "s budget";
    }
    std::printf("[%s] criterion %-3s %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.id,
                c.summary, elapsed, o.notes.empty() ? "" : " -- ",
                o.notes.c_str());
    std::fflush(stdout);
    return o.ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        const std::string want = argv[1];
        for (const auto& c : criteria())
            if (want == c.id) return run_one(c) ? 0 : 1;
        std::fprintf(stderr, "unknown criterion '%s'\n", want.c_str());
        return 2;
    }
    bool all_ok = true;
    for (const auto& c : criteria()) all_ok = run_one(c) && all_ok;
    return all_ok ? 0 : 1;
}
