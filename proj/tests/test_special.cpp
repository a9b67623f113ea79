#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles/erfc_quadrature.hpp"
#include "plunge/errors.hpp"
#include "plunge/special.hpp"

using namespace plunge;

TEST_CASE("erfc matches the quadrature reference") {
    for (double x = -5.0; x <= 6.0; x += 0.173) {
        const double expected = static_cast<double>(oracle::erfc_quadrature(x));
        CHECK(std::abs(plunge::erfc(x) - expected) <= 1e-13 * std::max(1.0, expected) + 1e-300);
    }
    CHECK(plunge::erfc(0.0) == doctest::Approx(1.0).epsilon(1e-16));
}

TEST_CASE("erfc relative accuracy in the far tail") {
    for (double x : {3.0, 5.0, 8.0, 12.0}) {
        const double expected = static_cast<double>(oracle::erfc_quadrature(x));
        CHECK(std::abs(plunge::erfc(x) / expected - 1.0) < 1e-10);
    }
}

TEST_CASE("erfc_inv against the bisection reference") {
    for (double y : {1e-12, 1e-6, 0.01, 0.2, 0.5, 1.0, 1.3, 1.9, 1.999999}) {
        const double expected = static_cast<double>(oracle::erfc_inv_bisection(y));
        CHECK(std::abs(erfc_inv(y) - expected) < 1e-10);
    }
}

TEST_CASE("erfc_inv and erfc round trip") {
    for (double y = 0.001; y < 2.0; y += 0.0137) CHECK(std::abs(plunge::erfc(erfc_inv(y)) - y) < 1e-10);
    for (double x = -3.0; x <= 5.0; x += 0.1) CHECK(std::abs(erfc_inv(plunge::erfc(x)) - x) < 1e-10);
}

TEST_CASE("erfc_inv rejects values outside (0, 2)") {
    CHECK_THROWS_AS(erfc_inv(0.0), ValidationError);
    CHECK_THROWS_AS(erfc_inv(2.0), ValidationError);
    CHECK_THROWS_AS(erfc_inv(-0.5), ValidationError);
    CHECK_THROWS_AS(erfc_inv(std::nan("")), ValidationError);
}

TEST_CASE("theoretical plunge quotient") {
    // width of the 0.1..0.9 band of 1/2 plunge::erfc(sqrt(2 pi) t) is erfc_inv(0.2)*2/sqrt(2 pi)
    const double width = 2.0 * erfc_inv(0.2) / std::sqrt(2.0 * std::numbers::pi);
    CHECK(1.0 / width == doctest::Approx(1.3831).epsilon(1e-4));
}

TEST_CASE("log_factorial") {
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(1) == 0.0);
    CHECK(log_factorial(10) == doctest::Approx(std::log(3628800.0)).epsilon(1e-15));
    double direct = 0.0;
    for (int j = 2; j <= 170; ++j) direct += std::log(static_cast<double>(j));
    CHECK(log_factorial(170) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("poisson_pmf") {
    CHECK(poisson_pmf(0, 0.0) == 1.0);
    CHECK(poisson_pmf(3, 0.0) == 0.0);
    for (double mean : {0.5, 3.0, 17.0, 40.0}) {
        long double term = std::exp(-static_cast<long double>(mean));
        for (long j = 0; j < 120; ++j) {
            if (j > 0) term *= mean / static_cast<long double>(j);
            CHECK(std::abs(poisson_pmf(j, mean) - static_cast<double>(term)) <= 1e-14 * static_cast<double>(term) + 1e-300);
        }
    }
    CHECK_THROWS_AS(poisson_pmf(-1, 1.0), ValidationError);
    CHECK_THROWS_AS(poisson_pmf(1, -1.0), ValidationError);
}
