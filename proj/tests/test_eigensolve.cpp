#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "plunge/eigensolve.hpp"
#include "plunge/errors.hpp"

using namespace plunge;

namespace {

Eigen::MatrixXcd random_hermitian(int n, std::mt19937_64& gen) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd X(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) X(i, j) = {normal(gen), normal(gen)};
    }
    return (X + X.adjoint()) / 2.0;
}

Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& gen) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd X(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) X(i, j) = {normal(gen), normal(gen)};
    }
    return Eigen::HouseholderQR<Eigen::MatrixXcd>(X).householderQ();
}

}  // namespace

TEST_CASE("diagonal inputs") {
    const auto I = hermitian_eig(Eigen::MatrixXcd::Identity(5, 5));
    CHECK((I.eigenvalues.array() == 1.0).all());
    Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(3, 3);
    D(0, 0) = 3.0;
    D(1, 1) = 1.0;
    D(2, 2) = 2.0;
    const auto s = hermitian_eig(D, true);
    CHECK(s.eigenvalues[0] == doctest::Approx(3.0));
    CHECK(s.eigenvalues[1] == doctest::Approx(2.0));
    CHECK(s.eigenvalues[2] == doctest::Approx(1.0));
    REQUIRE(s.eigenvectors);
    CHECK(std::abs((*s.eigenvectors)(2, 1)) == doctest::Approx(1.0));
}

TEST_CASE("random Hermitian reconstruction") {
    std::mt19937_64 gen(21);
    for (int trial = 0; trial < 10; ++trial) {
        const auto A = random_hermitian(8, gen);
        const auto s = hermitian_eig(A, true);
        REQUIRE(s.eigenvectors);
        const auto& V = *s.eigenvectors;
        const Eigen::MatrixXcd rebuilt = V * s.eigenvalues.cast<std::complex<double>>().asDiagonal() * V.adjoint();
        CHECK((rebuilt - A).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((V.adjoint() * V - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-8);
        REQUIRE(s.residual);
        CHECK(*s.residual < 1e-10);
        CHECK(s.trace_defect < 1e-10);
        for (int k = 1; k < 8; ++k) CHECK(s.eigenvalues[k] <= s.eigenvalues[k - 1]);
    }
}

TEST_CASE("unitary and permutation conjugation") {
    std::mt19937_64 gen(22);
    const auto A = random_hermitian(30, gen);
    const auto U = random_unitary(30, gen);
    std::vector<int> order(30);
    for (int i = 0; i < 30; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), gen);
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(30, 30);
    for (int i = 0; i < 30; ++i) P(i, order[i]) = 1.0;
    const auto base = hermitian_eig(A).eigenvalues;
    CHECK((hermitian_eig(U * A * U.adjoint()).eigenvalues - base).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((hermitian_eig(P * A * P.adjoint()).eigenvalues - base).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("non-Hermitian input is rejected") {
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Identity(3, 3);
    A(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(A), ValidationError);
    CHECK_THROWS_AS(hermitian_eig(Eigen::MatrixXcd(2, 3)), ValidationError);
}

TEST_CASE("plunge statistics") {
    const auto none = plunge_stats(spectrum_from_values({1.0, 1.0, 0.0, 0.0}), 0.1);
    CHECK(none.count == 0);
    CHECK(none.first_index == -1);
    CHECK(none.last_index == -1);
    const auto one = plunge_stats(spectrum_from_values({1.0, 0.5, 0.0}), 0.1);
    CHECK(one.count == 1);
    CHECK(one.first_index == 1);
    CHECK(one.last_index == 1);
    const auto band = plunge_stats(spectrum_from_values({0.95, 0.8, 0.1, 0.3, 0.9, 0.05}), 0.1);
    CHECK(band.count == 2);
    CHECK(band.count == band.last_index - band.first_index + 1);
    CHECK_THROWS_AS(plunge_stats(spectrum_from_values({0.5}), 0.5), ValidationError);
    CHECK_THROWS_AS(plunge_stats(spectrum_from_values({0.5}), 0.0), ValidationError);
}

TEST_CASE("spectrum_from_values sorts descending") {
    const auto s = spectrum_from_values({0.2, 0.9, 0.5});
    CHECK(s.eigenvalues[0] == 0.9);
    CHECK(s.eigenvalues[2] == 0.2);
    CHECK(!s.eigenvectors);
}

TEST_CASE("linf profile error") {
    const ErfcProfile profile{40.0, 12.0};
    std::vector<double> values;
    for (int k = 1; k <= 100; ++k) values.push_back(erfc_profile(profile, k));
    CHECK(linf_profile_error(spectrum_from_values(values), profile) == 0.0);
    for (double& v : values) v -= 0.05;
    CHECK(linf_profile_error(spectrum_from_values(values), profile) == doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("eigenvectors near a target") {
    Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(4, 4);
    D(0, 0) = 0.1;
    D(1, 1) = 0.5;
    D(2, 2) = 1.0;
    D(3, 3) = 0.6;
    const auto s = hermitian_eig(D, true);
    const auto one = eigenvectors_near(s, 0.5, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].first == doctest::Approx(0.5));
    CHECK(std::abs(one[0].second[1]) == doctest::Approx(1.0));
    const auto all = eigenvectors_near(s, 0.5, 4);
    CHECK(all.size() == 4);
    CHECK(all[1].first == doctest::Approx(0.6));
    CHECK_THROWS_AS(eigenvectors_near(s, 0.5, 5), ValidationError);
    CHECK_THROWS_AS(eigenvectors_near(spectrum_from_values({1.0}), 0.5, 1), ValidationError);
}

TEST_CASE("ties resolved by smaller index") {
    Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(3, 3);
    D(0, 0) = 0.7;
    D(1, 1) = 0.3;
    D(2, 2) = 0.9;
    const auto s = hermitian_eig(D, true);
    const auto near = eigenvectors_near(s, 0.5, 2);
    CHECK(near[0].first == doctest::Approx(0.7));
    CHECK(near[1].first == doctest::Approx(0.3));
}
