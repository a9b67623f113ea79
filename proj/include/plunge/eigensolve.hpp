#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "plunge/analytic_profiles.hpp"

namespace plunge {

/// Eigen-decomposition of a Hermitian operator, eigenvalues sorted descending.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    /// Columns match `eigenvalues`; present only when requested.
    std::optional<Eigen::MatrixXcd> eigenvectors;
    /// max_k ||A v_k - lambda_k v_k||_2, only available with eigenvectors.
    std::optional<double> residual;
    /// |tr(A) - sum_k lambda_k|, always available.
    double trace_defect = 0.0;

    Eigen::Index size() const { return eigenvalues.size(); }
};

struct PlungeStats {
    double delta = 0.1;
    int count = 0;
    /// 0-based positions in the descending spectrum; -1 when count == 0.
    int first_index = -1;
    int last_index = -1;
};

/// Dense Hermitian eigendecomposition with a residual check at `tol * ||A||_2`.
/// Throws ValidationError for non-Hermitian input and NumericalError when
/// the solver fails or the residual certificate is violated.
Spectrum hermitian_eig(const Eigen::MatrixXcd& A, bool want_vectors = false, double tol = 1e-8);

/// Spectrum from explicit eigenvalues (sorted descending, stable in ties).
Spectrum spectrum_from_values(std::vector<double> values);

PlungeStats plunge_stats(const Spectrum& s, double delta = 0.1);

/// max over k = 1..L of |lambda_k - erfc_profile(profile, k)|, k 1-based.
double linf_profile_error(const Spectrum& s, const ErfcProfile& profile);

/// The `count` eigenpairs with eigenvalue closest to `target`, nearest first,
/// ties broken by smaller index.
std::vector<std::pair<double, Eigen::VectorXcd>> eigenvectors_near(const Spectrum& s, double target, int count);

}  // namespace plunge
