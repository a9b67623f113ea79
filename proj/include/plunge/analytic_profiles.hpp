#pragma once

/**
 * @file analytic_profiles.hpp
 * @brief Closed-form eigenvalues of Gaussian-window localization operators on
 * rotationally invariant symbols, and the erfc plunge profile.
 *
 * Radii are measured in time-frequency plane units, so a disk of radius R has
 * area pi R^2. Eigenvalue indices k are 0-based: the disk eigenvalue
 *
 *     lambda_k(R) = 1 - exp(-pi R^2) * sum_{j=0}^{k} (pi R^2)^j / j!
 *
 * is the upper tail P(X > k) of a Poisson variable with mean pi R^2.
 */

#include <cstddef>
#include <span>
#include <vector>

namespace plunge {

struct DiskSpec {
    double radius;

    /// Throws ValidationError unless radius > 0.
    void validate() const;
};

struct AnnulusSpec {
    double outer_radius;
    double inner_ratio;  ///< in [0, 1)

    void validate() const;
    double inner_radius() const { return inner_ratio * outer_radius; }
};

/// One annulus of a RadialSet; inner may be 0 (a disk).
struct RadialRing {
    double inner;
    double outer;
};

/// Finite union of disjoint concentric annuli, ordered by radius:
/// 0 <= inner_1 < outer_1 < inner_2 < ... < outer_N.
class RadialSet {
public:
    explicit RadialSet(std::vector<RadialRing> rings);

    static RadialSet from_annulus(const AnnulusSpec& spec);

    const std::vector<RadialRing>& rings() const { return rings_; }
    double max_radius() const { return rings_.back().outer; }

    /// sum of pi (ro^2 - ri^2)
    double area() const;
    /// sum of 2 pi (ro + ri); a zero inner radius adds no boundary
    double boundary_length() const;

    /// Every ring radius multiplied by `factor` (the dilation R * Omega).
    RadialSet dilated(double factor) const;

private:
    std::vector<RadialRing> rings_;
};

/// The erfc plunge profile k -> 1/2 erfc(sqrt(2 pi) (k - area) / boundary).
struct ErfcProfile {
    double area;
    double boundary;

    void validate() const;

    static ErfcProfile disk(double radius);
    static ErfcProfile annulus(const AnnulusSpec& spec);
    static ErfcProfile radial(const RadialSet& set);
};

/// Constants of the difference of two erfc's, a > b > 0 and A > B > 0.
struct TwoErfcParams {
    double a;
    double b;
    double A;
    double B;

    void validate() const;

    /// a = pi R^2, b = pi (rR)^2, A = sqrt(2 pi) R, B = sqrt(2 pi) rR.
    static TwoErfcParams from_annulus(const AnnulusSpec& spec);

    /// f(x) = erfc((x - a)/A) - erfc((x - b)/B)
    double unordered(double x) const;

    /// (A + B)/(a - b): the distance allowed between f* and its leading erfc term.
    double rearrangement_bound() const;
};

double disk_eigenvalue(long k, double radius);
double disk_profile(double k, double radius);

double annulus_unordered(long k, const AnnulusSpec& spec);
double radial_unordered(long k, const RadialSet& set);

/// Non-increasing sort, stable among ties.
std::vector<double> decreasing_rearrangement(std::span<const double> samples);

/// Exact non-increasing rearrangement of the symmetrized f at x >= 0.
double two_erfc_rearranged(const TwoErfcParams& params, double x);

double erfc_profile(const ErfcProfile& profile, double k);

/// Inverse of erfc_profile: area + boundary * erfc_inv(2 lambda) / sqrt(2 pi).
double counting_function(const ErfcProfile& profile, double lambda);

/// Number of leading indices k = 0..n-1 past which every eigenvalue of a
/// radial symbol reaching out to `max_radius` is below ~1e-15.
std::size_t analytic_scan_length(double max_radius);

/// disk_eigenvalue for k = 0..count-1.
std::vector<double> disk_eigenvalues(double radius, std::size_t count);
std::vector<double> radial_unordered_eigenvalues(const RadialSet& set, std::size_t count);

/// max_k |disk_eigenvalue(k, R) - disk_profile(k, R)| over k in [0, 3 pi R^2].
double disk_profile_error(double radius);

}  // namespace plunge
