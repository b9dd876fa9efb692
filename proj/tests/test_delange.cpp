#include <cmath>
#include <random>

#include "doctest.h"
#include "delange.hpp"
#include "radix.hpp"

using namespace gbar;

TEST_SUITE_BEGIN("delange");

TEST_CASE("f_b vanishes at pure powers and is negative elsewhere") {
    real_init();
    for (uint32_t b : {2u, 3u, 10u}) {
        uint64_t n = 1;
        for (int k = 0; k < 6; ++k) {
            CHECK(abs(delange_at_integer(n, b)) < 1e-12);
            n *= b;
        }
    }
    CHECK(delange_at_integer(3, 2) < 0);
    CHECK(delange_at_integer(99999, 10) < 0);
    CHECK(delange_at_integer(3, 2).convert_to<double>() ==
          doctest::Approx(-0.1258145837).epsilon(1e-8));
    CHECK_THROWS_AS(delange_at_integer(0, 2), InvalidArgument);
    CHECK_THROWS_AS(delange_at_integer(5, 1), InvalidArgument);
}

TEST_CASE("takagi pinned values") {
    real_init();
    CHECK(takagi(Real(0)) == 0);
    CHECK(takagi(Real(1)) == 0);
    CHECK(takagi(Real(1) / 2) == Real(1) / 2);
    CHECK(takagi(Real(1) / 4) == Real(1) / 2);
    // <<2^n / 3>> = 1/3 for every n, so tau(1/3) = (1/3) * 2.
    CHECK(abs(takagi(Real(1) / 3) - Real(2) / 3) < 1e-29);
    CHECK_THROWS_AS(takagi(Real(-1) / 10), InvalidArgument);
    CHECK_THROWS_AS(takagi(Real(11) / 10), InvalidArgument);
    CHECK_THROWS_AS(takagi(Real(1) / 2, 0.0), InvalidArgument);
}

TEST_CASE("takagi truncation meets the requested tolerance") {
    real_init();
    // Coarse vs fine truncation differ by at most the coarse tolerance.
    for (double x : {0.123456789, 0.7, 1.0 / 3.0}) {
        const Real coarse = takagi(Real(x), 1e-6);
        const Real fine = takagi(Real(x), 1e-25);
        CHECK(abs(coarse - fine).convert_to<double>() <= 1e-6);
    }
}

TEST_CASE("f2 bridge endpoints and periodic reduction") {
    real_init();
    CHECK(f2_from_takagi(Real(0)) == 0);
    CHECK(f2_from_takagi(Real(1)) == 0);
    CHECK(abs(f2_from_takagi(Real(5) / 2) - f2_from_takagi(Real(1) / 2)) < 1e-70);
    CHECK(abs(f2_from_takagi(Real(-1) / 2) - f2_from_takagi(Real(1) / 2)) < 1e-70);
}

TEST_CASE("f2 bridge equals the digit-sum evaluation") {
    real_init();
    for (uint64_t n : {3, 5, 100, 12345}) {
        Real x = log(Real(n)) / const_ln2();
        x -= floor(x);
        CHECK(abs(f2_from_takagi(x) - delange_at_integer(n, 2)).convert_to<double>() <
              1e-10);
    }
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        const uint64_t n = 2 + rng() % 999999;
        Real x = log(Real(n)) / const_ln2();
        x -= floor(x);
        CHECK(abs(f2_from_takagi(x) - delange_at_integer(n, 2)).convert_to<double>() <
              1e-10);
    }
}

TEST_CASE("delange samples pair the fractional abscissa with the value") {
    const auto s = delange_sample(12, 2);
    CHECK(s.n_used == 12);
    CHECK(s.x == doctest::Approx(std::log2(12.0) - 3).epsilon(1e-12));
    CHECK(s.value == doctest::Approx(delange_at_integer(12, 2).convert_to<double>()));
    CHECK(s.value <= 0);
    CHECK(delange_sample(8, 2).x == doctest::Approx(0.0));
}

TEST_CASE("constant Fourier coefficient") {
    CHECK(fourier_c0(2) == doctest::Approx(-0.145599).epsilon(1e-4));
    for (uint32_t b = 2; b <= 16; ++b) CHECK(fourier_c0(b) < 0);
    CHECK_THROWS_AS(fourier_c0(1), InvalidArgument);
}

TEST_CASE("magnitude bound reports") {
    const auto r3 = dg_magnitude_check(3, 2000);
    CHECK(r3.bound == doctest::Approx(2 * std::log(2.0) / std::log(3.0)).epsilon(1e-12));
    CHECK(r3.ok);
    CHECK(r3.max_scaled > 0);
    const auto r10 = dg_magnitude_check(10, 2000);
    CHECK(r10.bound ==
          doctest::Approx(9.0 / 8.0 * std::log(9.0) / std::log(10.0)).epsilon(1e-12));
    CHECK(r10.ok);
    CHECK_THROWS_AS(dg_magnitude_check(2), InvalidArgument);
}

TEST_SUITE_END();
