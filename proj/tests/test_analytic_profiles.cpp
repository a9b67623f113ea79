#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "oracles/poisson_naive.hpp"
#include "plunge/analytic_profiles.hpp"
#include "plunge/errors.hpp"
#include "plunge/special.hpp"

using namespace plunge;
constexpr double kPi = std::numbers::pi;

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(DiskSpec{0.0}.validate(), ValidationError);
    CHECK_THROWS_AS((AnnulusSpec{10.0, 1.0}.validate()), ValidationError);
    CHECK_THROWS_AS((AnnulusSpec{-1.0, 0.5}.validate()), ValidationError);
    CHECK_NOTHROW((AnnulusSpec{10.0, 0.0}.validate()));
    CHECK_THROWS_AS(RadialSet({{0.0, 2.0}, {1.5, 3.0}}), ValidationError);
    CHECK_THROWS_AS(RadialSet({{2.0, 1.0}}), ValidationError);
    CHECK_THROWS_AS(RadialSet(std::vector<RadialRing>{}), ValidationError);
    CHECK_THROWS_AS((ErfcProfile{1.0, 0.0}.validate()), ValidationError);
    CHECK_THROWS_AS((TwoErfcParams{1.0, 2.0, 2.0, 1.0}.validate()), ValidationError);
}

TEST_CASE("disk eigenvalue: small cases") {
    const double R = 1.0;
    CHECK(disk_eigenvalue(0, R) == doctest::Approx(1.0 - std::exp(-kPi)).epsilon(1e-15));
    // k -> infinity tends to 0
    CHECK(disk_eigenvalue(400, 3.0) < 1e-100);
    // large radius, small index saturates to 1
    CHECK(disk_eigenvalue(0, 15.0) == 1.0);
}

TEST_CASE("disk eigenvalue against naive summation") {
    for (double R : {0.3, 0.8, 1.5, 2.2, std::sqrt(30.0 / kPi)}) {
        for (long k = 0; k < 120; ++k) {
            const double expected = static_cast<double>(oracle::disk_eigenvalue_naive(k, R));
            CHECK(std::abs(disk_eigenvalue(k, R) - expected) < 1e-13);
        }
    }
}

TEST_CASE("disk eigenvalue against the regularized incomplete gamma") {
    for (double R : {0.5, 2.0, 5.0, 10.0, 15.0, 22.0, 30.0}) {
        const double mu = kPi * R * R;
        const long top = static_cast<long>(mu + 12.0 * std::sqrt(mu) + 40.0);
        for (long k = 0; k <= top; k += std::max(1L, top / 400)) {
            const double expected = boost::math::gamma_p(static_cast<double>(k + 1), mu);
            CHECK(std::abs(disk_eigenvalue(k, R) - expected) < 1e-12);
        }
    }
}

TEST_CASE("disk eigenvalue monotonicity") {
    const std::vector<double> radii{1.0, 3.0, 7.0, 12.0, 18.0, 24.0, 30.0};
    for (long k = 0; k <= 2000; k += 7) {
        double previous = -1.0;
        for (double R : radii) {
            const double v = disk_eigenvalue(k, R);
            CHECK(v >= previous);
            previous = v;
        }
    }
    for (double R : radii) {
        double previous = 2.0;
        for (long k = 0; k <= 2000; ++k) {
            const double v = disk_eigenvalue(k, R);
            REQUIRE(v <= previous);
            REQUIRE(v >= 0.0);
            previous = v;
        }
    }
}

TEST_CASE("disk profile error decays") {
    const double e5 = disk_profile_error(5.0);
    const double e10 = disk_profile_error(10.0);
    const double e15 = disk_profile_error(15.0);
    const double e20 = disk_profile_error(20.0);
    const double e30 = disk_profile_error(30.0);
    CHECK(e10 < e5);
    CHECK(e20 < e10);
    CHECK(e30 < e15);
    CHECK(e15 < 1.0 / 15.0);
}

TEST_CASE("annulus and radial reductions") {
    const AnnulusSpec spec{15.0, 0.6};
    const RadialSet single = RadialSet::from_annulus(spec);
    const RadialSet two({{2.0, 5.0}, {8.0, 11.0}});
    const AnnulusSpec first{5.0, 0.4};
    const AnnulusSpec second{11.0, 8.0 / 11.0};
    for (long k = 0; k < 1500; k += 3) {
        CHECK(radial_unordered(k, single) == annulus_unordered(k, spec));
        CHECK(std::abs(radial_unordered(k, two) - annulus_unordered(k, first) - annulus_unordered(k, second)) < 1e-14);
        const double v = annulus_unordered(k, spec);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    CHECK(single.area() == doctest::Approx(kPi * 225.0 * 0.64));
    CHECK(single.boundary_length() == doctest::Approx(2.0 * kPi * 15.0 * 1.6));
    CHECK(RadialSet({{0.0, 3.0}}).boundary_length() == doctest::Approx(6.0 * kPi));
}

TEST_CASE("radial profile error shrinks under dilation") {
    const RadialSet base({{0.2, 0.5}, {0.7, 1.0}});
    double previous = 1.0;
    for (double R : {10.0, 20.0, 40.0}) {
        const RadialSet set = base.dilated(R);
        const auto n = analytic_scan_length(set.max_radius());
        const auto sorted = decreasing_rearrangement(radial_unordered_eigenvalues(set, n));
        const ErfcProfile profile = ErfcProfile::radial(set);
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(sorted[k] - erfc_profile(profile, static_cast<double>(k))));
        CHECK(worst < previous);
        previous = worst;
    }
}

TEST_CASE("annulus profile within 5/R") {
    for (double R : {10.0, 15.0, 20.0, 30.0}) {
        const AnnulusSpec spec{R, 0.6};
        const auto n = analytic_scan_length(R);
        std::vector<double> samples(n);
        for (std::size_t k = 0; k < n; ++k) samples[k] = annulus_unordered(static_cast<long>(k), spec);
        const auto sorted = decreasing_rearrangement(samples);
        const ErfcProfile profile = ErfcProfile::annulus(spec);
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(sorted[k] - erfc_profile(profile, static_cast<double>(k))));
        CHECK(worst < 5.0 / R);
    }
}

TEST_CASE("decreasing rearrangement") {
    const std::vector<double> u{0.1, 0.9, 0.5};
    CHECK(decreasing_rearrangement(u) == std::vector<double>{0.9, 0.5, 0.1});
    const std::vector<double> sorted{3.0, 2.0, 2.0, 1.0};
    CHECK(decreasing_rearrangement(sorted) == sorted);
    CHECK(decreasing_rearrangement(std::vector<double>{}).empty());
}

TEST_CASE("rearrangement contracts the sup distance") {
    std::mt19937_64 gen(12345);
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    std::uniform_int_distribution<int> length(1, 60);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = length(gen);
        std::vector<double> u(n), v(n);
        double distance = 0.0;
        for (int i = 0; i < n; ++i) {
            u[i] = value(gen);
            v[i] = trial % 2 == 0 ? value(gen) : u[i] + 0.05 * value(gen);
            distance = std::max(distance, std::abs(u[i] - v[i]));
        }
        const auto su = decreasing_rearrangement(u);
        const auto sv = decreasing_rearrangement(v);
        double sorted_distance = 0.0;
        for (int i = 0; i < n; ++i) sorted_distance = std::max(sorted_distance, std::abs(su[i] - sv[i]));
        REQUIRE(sorted_distance <= distance);
    }
}

TEST_CASE("two erfc rearrangement") {
    const TwoErfcParams p = TwoErfcParams::from_annulus({15.0, 0.6});
    CHECK(p.a == doctest::Approx(225.0 * kPi));
    CHECK(p.b == doctest::Approx(81.0 * kPi));
    CHECK(p.A == doctest::Approx(std::sqrt(2.0 * kPi) * 15.0));
    CHECK(p.B == doctest::Approx(std::sqrt(2.0 * kPi) * 9.0));
    const double gap = p.a - p.b;
    CHECK(two_erfc_rearranged(p, gap) == doctest::Approx(1.0 - plunge::erfc(gap / p.B)).epsilon(1e-14));
    // the second term at x = 0 is erfc(gap / (A + B))
    const double second = plunge::erfc(0.0 - gap / (p.A + p.B)) - two_erfc_rearranged(p, 0.0);
    CHECK(second == doctest::Approx(plunge::erfc(gap / (p.A + p.B))).epsilon(1e-12));
    CHECK(plunge::erfc(gap / (p.A + p.B)) <= p.rearrangement_bound());

    double previous = 3.0;
    for (double x = 0.0; x < 2.0 * p.a; x += 0.5) {
        const double v = two_erfc_rearranged(p, x);
        CHECK(v <= previous);
        CHECK(v >= 0.0);
        CHECK(std::abs(v - plunge::erfc((x - gap) / (p.A + p.B))) <= p.rearrangement_bound());
        previous = v;
    }
}

TEST_CASE("erfc profile and counting function") {
    const ErfcProfile profile{300.0, 60.0};
    CHECK(erfc_profile(profile, 300.0) == 0.5);
    for (double lambda : {0.05, 0.5, 0.95}) {
        CHECK(std::abs(erfc_profile(profile, counting_function(profile, lambda)) - lambda) < 1e-9);
    }
    CHECK(counting_function(profile, 0.5) == doctest::Approx(300.0));
    const double band = counting_function(profile, 0.1) - counting_function(profile, 0.9);
    CHECK(std::abs(band - profile.boundary / 1.3831) < 1e-3 * profile.boundary);
    CHECK_THROWS_AS(counting_function(profile, 0.0), ValidationError);
    CHECK_THROWS_AS(counting_function(profile, 1.0), ValidationError);

    double previous = 2.0;
    for (double k = 0.0; k < 600.0; k += 1.0) {
        const double v = erfc_profile(profile, k);
        CHECK(v <= previous);
        if (v > 1e-300 && v < 1.0 - 1e-12) CHECK(v < previous);
        previous = v;
    }
}

TEST_CASE("disk and annulus profiles are erfc profiles") {
    const double R = 12.0;
    const ErfcProfile disk = ErfcProfile::disk(R);
    for (double k = 0.0; k < 1000.0; k += 3.5) CHECK(std::abs(disk_profile(k, R) - erfc_profile(disk, k)) < 1e-14);
    const ErfcProfile annulus = ErfcProfile::annulus({R, 0.6});
    CHECK(annulus.area == doctest::Approx(kPi * R * R * (1.0 - 0.36)));
    CHECK(annulus.boundary == doctest::Approx(2.0 * kPi * R * 1.6));
}
