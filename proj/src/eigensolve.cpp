#include "plunge/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "plunge/errors.hpp"

namespace plunge {

namespace {

std::vector<Eigen::Index> descending_order(const Eigen::VectorXd& values) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return values[i] > values[j]; });
    return order;
}

}  // namespace

Spectrum hermitian_eig(const Eigen::MatrixXcd& A, bool want_vectors, double tol) {
    if (A.rows() != A.cols()) throw ValidationError("eigendecomposition needs a square matrix");
    if (A.rows() == 0) return Spectrum{};
    const double scale = A.cwiseAbs().maxCoeff();
    const double asymmetry = (A - A.adjoint()).cwiseAbs().maxCoeff();
    if (!std::isfinite(scale)) throw ValidationError("matrix has non-finite entries");
    if (asymmetry > 1e-10 * scale) {
        throw ValidationError("matrix is not Hermitian (max |A - A^H| = " + std::to_string(asymmetry) + ")");
    }

    // Householder tridiagonalization followed by implicit symmetric QR.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(A, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");

    // ascending from Eigen, read backwards
    const Eigen::VectorXd ascending = solver.eigenvalues();
    const Eigen::VectorXd reversed = ascending.reverse();
    const auto order = descending_order(reversed);
    const Eigen::Index n = A.rows();

    Spectrum s;
    s.eigenvalues.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) s.eigenvalues[i] = reversed[order[static_cast<std::size_t>(i)]];
    s.trace_defect = std::abs(A.diagonal().real().sum() - s.eigenvalues.sum());

    if (want_vectors) {
        Eigen::MatrixXcd vectors(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            vectors.col(i) = solver.eigenvectors().col(n - 1 - order[static_cast<std::size_t>(i)]);
        }
        const Eigen::MatrixXcd defect = A * vectors - vectors * s.eigenvalues.cast<std::complex<double>>().asDiagonal();
        const double residual = defect.colwise().norm().maxCoeff();
        const double norm2 = std::max(s.eigenvalues.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
        if (residual > tol * norm2) {
            throw NumericalError("eigen residual " + std::to_string(residual) + " exceeds tolerance");
        }
        s.residual = residual;
        s.eigenvectors = std::move(vectors);
    }
    return s;
}

Spectrum spectrum_from_values(std::vector<double> values) {
    std::stable_sort(values.begin(), values.end(), std::greater<>());
    Spectrum s;
    s.eigenvalues = Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
    return s;
}

PlungeStats plunge_stats(const Spectrum& s, double delta) {
    if (!(delta > 0.0 && delta < 0.5)) throw ValidationError("plunge delta must lie in (0, 1/2)");
    PlungeStats stats;
    stats.delta = delta;
    for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
        const double lambda = s.eigenvalues[k];
        if (lambda > delta && lambda < 1.0 - delta) {
            if (stats.count == 0) stats.first_index = static_cast<int>(k);
            stats.last_index = static_cast<int>(k);
            ++stats.count;
        }
    }
    return stats;
}

double linf_profile_error(const Spectrum& s, const ErfcProfile& profile) {
    profile.validate();
    double worst = 0.0;
    for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
        const double expected = erfc_profile(profile, static_cast<double>(k + 1));
        worst = std::max(worst, std::abs(s.eigenvalues[k] - expected));
    }
    return worst;
}

std::vector<std::pair<double, Eigen::VectorXcd>> eigenvectors_near(const Spectrum& s, double target, int count) {
    if (!s.eigenvectors) throw ValidationError("spectrum was computed without eigenvectors");
    if (count < 0 || count > s.eigenvalues.size()) throw ValidationError("requested eigenvector count out of range");
    std::vector<Eigen::Index> order(static_cast<std::size_t>(s.eigenvalues.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
        return std::abs(s.eigenvalues[i] - target) < std::abs(s.eigenvalues[j] - target);
    });
    std::vector<std::pair<double, Eigen::VectorXcd>> picked;
    picked.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const Eigen::Index k = order[static_cast<std::size_t>(i)];
        picked.emplace_back(s.eigenvalues[k], s.eigenvectors->col(k));
    }
    return picked;
}

}  // namespace plunge
