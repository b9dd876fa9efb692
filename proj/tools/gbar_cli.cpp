// Command-line front end for the gbar library.  Talks to the shared library
// through the C API only.
//
// Exit codes: 0 success, 1 verification/internal failure, 2 usage error
// (including requests above the exact-computation cap).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gbar.h"

namespace {

int status_exit(gbar_status st) {
    switch (st) {
        case GBAR_OK: return 0;
        case GBAR_EINTERNAL: return 1;
        default: return 2;
    }
}

// Writes to --out (or stdout) and frees the API string.
int deliver(gbar_status st, char* text, const std::string& out_path) {
    if (st != GBAR_OK) {
        std::cerr << "error: " << gbar_status_str(st) << "\n";
        gbar_str_free(text);
        return status_exit(st);
    }
    if (out_path.empty()) {
        std::cout << (text ? text : "");
        if (text && *text && text[std::string(text).size() - 1] != '\n')
            std::cout << "\n";
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << out_path << "\n";
            gbar_str_free(text);
            return 2;
        }
        f << (text ? text : "");
    }
    gbar_str_free(text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact binomial-coefficient products Gbar_n, their prime/base-b "
                 "order functions, asymptotics, and prime-counting checks"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "text";

    // gbar <n> [--factor]
    auto* cmd_gbar = app.add_subcommand("gbar", "print Gbar_n (optionally factored)");
    uint64_t g_n = 0;
    bool g_factor = false;
    cmd_gbar->add_option("n", g_n, "row index n")->required();
    cmd_gbar->add_flag("--factor", g_factor, "print the prime factorization");

    // ord --n N --p P
    auto* cmd_ord = app.add_subcommand("ord", "ord_p(Gbar_n) by all three formulas");
    uint64_t o_n = 0, o_p = 2;
    cmd_ord->add_option("--n", o_n, "n")->required();
    cmd_ord->add_option("--p", o_p, "prime p")->required();
    cmd_ord->add_option("--format", format, "csv|text");
    cmd_ord->add_option("--out", out_path, "output path (default stdout)");

    // nu --n N --b B
    auto* cmd_nu = app.add_subcommand("nu", "generalized order nu_b(Gbar_n)");
    uint64_t u_n = 0;
    uint32_t u_b = 2;
    cmd_nu->add_option("--n", u_n, "n")->required();
    cmd_nu->add_option("--b", u_b, "base b >= 2")->required();
    cmd_nu->add_option("--format", format, "csv|text");
    cmd_nu->add_option("--out", out_path, "output path (default stdout)");

    // table --p P --max M
    auto* cmd_table = app.add_subcommand("table", "order-formula comparison table");
    uint64_t t_p = 2, t_max = 16;
    cmd_table->add_option("--p", t_p, "prime p (default 2)");
    cmd_table->add_option("--max", t_max, "last row (default 16)");
    cmd_table->add_option("--format", format, "csv|text");
    cmd_table->add_option("--out", out_path, "output path (default stdout)");

    // series --p P --max M [--scaled]
    auto* cmd_series = app.add_subcommand("series", "CSV series of ord_p(Gbar_n)");
    uint64_t s_p = 2, s_max = 1023;
    bool s_scaled = false;
    cmd_series->add_option("--p", s_p, "prime p (default 2)");
    cmd_series->add_option("--max", s_max, "last n (default 1023)");
    cmd_series->add_flag("--scaled", s_scaled, "divide by 0.5 n log_p n");
    cmd_series->add_option("--out", out_path, "output path (default stdout)");

    // delange --b B --grid K
    auto* cmd_delange = app.add_subcommand("delange", "CSV samples of f_b over one period");
    uint32_t d_b = 2, d_grid = 4096;
    cmd_delange->add_option("--b", d_b, "base b >= 2 (default 2)");
    cmd_delange->add_option("--grid", d_grid, "grid points (default 4096)");
    cmd_delange->add_option("--out", out_path, "output path (default stdout)");

    // asym --n N --order K
    auto* cmd_asym = app.add_subcommand("asym", "truncated expansion of log Gbar_n");
    uint64_t a_n = 100;
    uint32_t a_order = 4;
    cmd_asym->add_option("--n", a_n, "n >= 2")->required();
    cmd_asym->add_option("--order", a_order, "truncation order <= 12 (default 4)");
    cmd_asym->add_option("--out", out_path, "output path (default stdout)");

    // primes --n N
    auto* cmd_primes = app.add_subcommand("primes", "prime-counting report at n");
    uint64_t p_n = 0;
    cmd_primes->add_option("--n", p_n, "n >= 2")->required();
    cmd_primes->add_option("--format", format,
                           "text report, or csv of per-prime order ratios");
    cmd_primes->add_option("--out", out_path, "output path (default stdout)");

    // verify --suite NAME
    auto* cmd_verify = app.add_subcommand("verify", "run a named invariant suite");
    std::string v_suite;
    bool v_list = false;
    cmd_verify->add_option("--suite", v_suite, "suite name (see --list)");
    cmd_verify->add_flag("--list", v_list, "list available suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const bool csv = format == "csv";
    if (format != "csv" && format != "text") {
        std::cerr << "error: --format must be csv or text\n";
        return 2;
    }

    char* text = nullptr;
    if (cmd_gbar->parsed()) {
        const gbar_status st = gbar_emit_gbar(g_n, g_factor ? 1 : 0, &text);
        if (st == GBAR_ECAP)
            std::cerr << "note: n exceeds the exact cap (" << gbar_exact_cap()
                      << "); set GBAR_EXACT_CAP to raise it\n";
        return deliver(st, text, out_path);
    }
    if (cmd_ord->parsed()) {
        const gbar_status st = gbar_emit_ord(o_n, o_p, csv ? 1 : 0, &text);
        return deliver(st, text, out_path);
    }
    if (cmd_nu->parsed()) {
        const gbar_status st = gbar_emit_nu(u_n, u_b, csv ? 1 : 0, &text);
        return deliver(st, text, out_path);
    }
    if (cmd_table->parsed()) {
        const gbar_status st = gbar_emit_table(t_p, t_max, csv ? 1 : 0, &text);
        return deliver(st, text, out_path);
    }
    if (cmd_series->parsed()) {
        const gbar_status st = gbar_emit_series(s_p, s_max, s_scaled ? 1 : 0, &text);
        return deliver(st, text, out_path);
    }
    if (cmd_delange->parsed()) {
        const gbar_status st = gbar_emit_delange(d_b, d_grid, &text);
        return deliver(st, text, out_path);
    }
    if (cmd_asym->parsed()) {
        const gbar_status st = gbar_emit_asym(a_n, a_order, &text);
        return deliver(st, text, out_path);
    }
    if (cmd_primes->parsed()) {
        const gbar_status st = gbar_emit_primes(p_n, csv ? 1 : 0, &text);
        return deliver(st, text, out_path);
    }
    if (cmd_verify->parsed()) {
        if (v_list) {
            char* names = gbar_verify_suite_list();
            std::cout << (names ? names : "");
            gbar_str_free(names);
            return 0;
        }
        if (v_suite.empty()) {
            std::cerr << "error: verify needs --suite <name> (or --list)\n";
            return 2;
        }
        int passed = 0;
        char* report = nullptr;
        const gbar_status st = gbar_verify_suite(v_suite.c_str(), &passed, &report);
        if (st != GBAR_OK) {
            std::cerr << "error: " << gbar_status_str(st) << "\n";
            gbar_str_free(report);
            return status_exit(st);
        }
        std::cout << (report ? report : "") << "\n";
        gbar_str_free(report);
        return passed ? 0 : 1;
    }
    return 2;
}
