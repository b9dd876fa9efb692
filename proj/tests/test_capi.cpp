// Exercises the shared-library C surface: handles, strings, error codes.
#include <cstring>
#include <string>

#include "doctest.h"
#include "gbar.h"

TEST_SUITE_BEGIN("capi");

TEST_CASE("natural handles round-trip") {
    gbar_nat* a = gbar_nat_from_u64(3628800);
    REQUIRE(a != nullptr);
    char* s = gbar_nat_to_str(a);
    CHECK(std::string(s) == "3628800");
    gbar_str_free(s);

    gbar_nat* b = gbar_nat_from_str("3628801");
    REQUIRE(b != nullptr);
    CHECK(gbar_nat_cmp(a, b) < 0);
    CHECK(gbar_nat_cmp(b, a) > 0);
    CHECK(gbar_nat_cmp(a, a) == 0);
    gbar_nat_free(a);
    gbar_nat_free(b);

    CHECK(gbar_nat_from_str("") == nullptr);
    CHECK(gbar_nat_from_str("12x") == nullptr);
    CHECK(gbar_nat_from_str("-5") == nullptr);
}

TEST_CASE("exact computations through the API") {
    gbar_nat* v = nullptr;
    REQUIRE(gbar_factorial(10, &v) == GBAR_OK);
    char* s = gbar_nat_to_str(v);
    CHECK(std::string(s) == "3628800");
    gbar_str_free(s);
    gbar_nat_free(v);

    REQUIRE(gbar_binomial_product(5, &v) == GBAR_OK);
    s = gbar_nat_to_str(v);
    CHECK(std::string(s) == "2500");
    gbar_str_free(s);

    uint64_t ord = 0;
    CHECK(gbar_ord_trial_division(v, 5, &ord) == GBAR_OK);
    CHECK(ord == 4);
    gbar_nat_free(v);

    CHECK(gbar_binomial(3, 5, &v) == GBAR_EINVAL);
    CHECK(gbar_ord_factorial(13, 3, &ord) == GBAR_OK);
    CHECK(ord == 5);
}

TEST_CASE("the exact cap maps to GBAR_ECAP") {
    gbar_exact_cap_set(10);
    CHECK(gbar_exact_cap() == 10);
    gbar_nat* v = nullptr;
    CHECK(gbar_binomial_product(11, &v) == GBAR_ECAP);
    char* text = nullptr;
    CHECK(gbar_emit_gbar(11, 1, &text) == GBAR_ECAP);
    gbar_exact_cap_set(0);
    CHECK(gbar_exact_cap() >= 2000);
}

TEST_CASE("digit helpers") {
    uint32_t digits[64];
    size_t len = 0;
    REQUIRE(gbar_digits(13, 3, digits, 64, &len) == GBAR_OK);
    REQUIRE(len == 3);
    CHECK((digits[0] == 1 && digits[1] == 1 && digits[2] == 1));
    CHECK(gbar_digits(1 << 20, 2, digits, 4, &len) == GBAR_EOVERFLOW);
    CHECK(len == 21);
    CHECK(gbar_digits(5, 1, digits, 64, &len) == GBAR_EINVAL);

    uint64_t d = 0;
    CHECK(gbar_digit_sum(96, 10, &d) == GBAR_OK);
    CHECK(d == 15);
}

TEST_CASE("order decompositions cross the boundary as strings") {
    gbar_ord_decomp dec{};
    REQUIRE(gbar_ord_parts(8, 2, &dec) == GBAR_OK);
    CHECK(dec.formula == GBAR_FORMULA_PARTS);
    CHECK(std::string(dec.s_plus) == "40");
    CHECK(std::string(dec.s_minus) == "23");
    CHECK(std::string(dec.value) == "17");
    CHECK(dec.scale == 1);
    gbar_ord_decomp_clear(&dec);
    CHECK(dec.s_plus == nullptr);

    REQUIRE(gbar_nu_digit_sum(2, 5, &dec) == GBAR_OK);
    CHECK(dec.scale == 4);
    CHECK(std::string(dec.value) == "0");
    gbar_ord_decomp_clear(&dec);

    REQUIRE(gbar_nu_bilinear(12, 2, &dec) == GBAR_OK);
    CHECK(std::string(dec.s_plus) == "32");
    CHECK(std::string(dec.s_minus) == "14");
    gbar_ord_decomp_clear(&dec);

    CHECK(gbar_ord_parts(8, 1, &dec) == GBAR_EINVAL);
}

TEST_CASE("scalar helpers") {
    uint64_t u = 0;
    CHECK(gbar_ord_binomial(13, 5, 3, &u) == GBAR_OK);
    CHECK(u == 2);
    int bit = -1;
    CHECK(gbar_carry_digit(13, 5, 3, 2, &bit) == GBAR_OK);
    CHECK(bit == 0);
    CHECK(gbar_carry_total(13, 3, 0, &u) == GBAR_OK);
    CHECK(u == 4);
    CHECK(gbar_upper_bound_m(12, 2, &u) == GBAR_OK);
    CHECK(u == 22);
    double x = 0;
    CHECK(gbar_nu_upper_bound(16, 2, &x) == GBAR_OK);
    CHECK(x == doctest::Approx(49.0));

    char* s = nullptr;
    CHECK(gbar_bernoulli(6, &s) == GBAR_OK);
    CHECK(std::string(s) == "1/42");
    gbar_str_free(s);
    CHECK(gbar_coeff_g(4, &s) == GBAR_OK);
    CHECK(std::string(s) == "-1/840");
    gbar_str_free(s);
    CHECK(gbar_glaisher(11, &s) == GBAR_OK);
    CHECK(std::string(s) == "1.2824271291");
    gbar_str_free(s);

    CHECK(gbar_delange_at_integer(8, 2, &x) == GBAR_OK);
    CHECK(x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(gbar_takagi(0.5, 1e-12, &x) == GBAR_OK);
    CHECK(x == doctest::Approx(0.5));
    CHECK(gbar_f2_from_takagi(0.0, &x) == GBAR_OK);
    CHECK(x == 0.0);
    CHECK(gbar_fourier_c0(2, &x) == GBAR_OK);
    CHECK(x == doctest::Approx(-0.145599).epsilon(1e-4));

    CHECK(gbar_prime_count(100, &u) == GBAR_OK);
    CHECK(u == 25);
    uint64_t pi_n = 0;
    double bound = 0;
    int ok = 0;
    CHECK(gbar_chebyshev_check(100, &pi_n, &bound, &ok) == GBAR_OK);
    CHECK((pi_n == 25 && ok == 1));
    CHECK(gbar_pnt_residual(2, &x) == GBAR_OK);
    CHECK(x == doctest::Approx(0.0));
}

TEST_CASE("emitters return text") {
    char* text = nullptr;
    REQUIRE(gbar_emit_table(2, 16, 1, &text) == GBAR_OK);
    CHECK(std::string(text).find("16,152,103,64,15,64,15,49") != std::string::npos);
    gbar_str_free(text);

    REQUIRE(gbar_emit_series(2, 8, 0, &text) == GBAR_OK);
    CHECK(std::string(text).find("8,17") != std::string::npos);
    gbar_str_free(text);

    REQUIRE(gbar_emit_gbar(4, 1, &text) == GBAR_OK);
    CHECK(std::string(text) == "96 = 2^5 * 3");
    gbar_str_free(text);
}

TEST_CASE("verification suites by name") {
    char* list = gbar_verify_suite_list();
    REQUIRE(list != nullptr);
    CHECK(std::string(list).find("appendix-b") != std::string::npos);
    gbar_str_free(list);

    int passed = 0;
    char* report = nullptr;
    REQUIRE(gbar_verify_suite("drazin-griffith", &passed, &report) == GBAR_OK);
    CHECK(passed == 1);
    CHECK(report != nullptr);
    gbar_str_free(report);

    CHECK(gbar_verify_suite("no-such-suite", &passed, nullptr) == GBAR_EINVAL);
}

TEST_CASE("status strings") {
    CHECK(std::string(gbar_status_str(GBAR_OK)) == "ok");
    CHECK(std::string(gbar_status_str(GBAR_ECAP)).find("cap") != std::string::npos);
    CHECK(std::string(gbar_version()) == "0.1.0");
}

TEST_SUITE_END();
