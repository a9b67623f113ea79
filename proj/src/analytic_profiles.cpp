#include "plunge/analytic_profiles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "plunge/errors.hpp"
#include "plunge/special.hpp"

namespace plunge {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);

// Relative size below which further Poisson terms cannot change a double sum.
constexpr double kTermCutoff = 1e-18;

// P(X > k) for X ~ Poisson(mean), summed away from the mode.
double poisson_upper_tail(long k, double mean) {
    if (mean == 0.0) return 0.0;
    if (static_cast<double>(k + 1) > mean) {
        // tail sum_{j>k}: terms decrease for j > mean
        long j = k + 1;
        double term = poisson_pmf(j, mean);
        double sum = 0.0;
        while (term > 0.0) {
            sum += term;
            ++j;
            term *= mean / static_cast<double>(j);
            if (term < kTermCutoff * sum) break;
        }
        return sum;
    }
    // head sum_{j<=k}: terms decrease going down from k < mean
    long j = k;
    double term = poisson_pmf(j, mean);
    double cdf = 0.0;
    while (term > 0.0) {
        cdf += term;
        if (j == 0) break;
        term *= static_cast<double>(j) / mean;
        --j;
        if (term < kTermCutoff * cdf) break;
    }
    return 1.0 - cdf;
}

}  // namespace

void DiskSpec::validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw ValidationError("disk radius must be positive and finite");
    }
}

void AnnulusSpec::validate() const {
    if (!(outer_radius > 0.0) || !std::isfinite(outer_radius)) {
        throw ValidationError("annulus outer radius must be positive and finite");
    }
    if (!(inner_ratio >= 0.0 && inner_ratio < 1.0)) {
        throw ValidationError("annulus inner ratio must lie in [0, 1)");
    }
}

RadialSet::RadialSet(std::vector<RadialRing> rings) : rings_(std::move(rings)) {
    if (rings_.empty()) throw ValidationError("radial set needs at least one annulus");
    double previous_outer = -1.0;
    for (const auto& ring : rings_) {
        if (!(ring.inner >= 0.0) || !(ring.outer > ring.inner) || !std::isfinite(ring.outer)) {
            throw ValidationError("radial set rings need 0 <= inner < outer");
        }
        if (!(ring.inner > previous_outer)) {
            throw ValidationError("radial set rings must be disjoint and ordered by radius");
        }
        previous_outer = ring.outer;
    }
}

RadialSet RadialSet::from_annulus(const AnnulusSpec& spec) {
    spec.validate();
    return RadialSet({{spec.inner_radius(), spec.outer_radius}});
}

double RadialSet::area() const {
    double total = 0.0;
    for (const auto& ring : rings_) total += kPi * (ring.outer * ring.outer - ring.inner * ring.inner);
    return total;
}

double RadialSet::boundary_length() const {
    double total = 0.0;
    for (const auto& ring : rings_) total += 2.0 * kPi * (ring.outer + ring.inner);
    return total;
}

RadialSet RadialSet::dilated(double factor) const {
    if (!(factor > 0.0)) throw ValidationError("dilation factor must be positive");
    std::vector<RadialRing> scaled = rings_;
    for (auto& ring : scaled) {
        ring.inner *= factor;
        ring.outer *= factor;
    }
    return RadialSet(std::move(scaled));
}

void ErfcProfile::validate() const {
    if (!(area >= 0.0) || !std::isfinite(area)) throw ValidationError("profile area must be nonnegative");
    if (!(boundary > 0.0) || !std::isfinite(boundary)) throw ValidationError("profile boundary must be positive");
}

ErfcProfile ErfcProfile::disk(double radius) {
    DiskSpec{radius}.validate();
    return {kPi * radius * radius, 2.0 * kPi * radius};
}

ErfcProfile ErfcProfile::annulus(const AnnulusSpec& spec) {
    spec.validate();
    const double r = spec.inner_ratio;
    const double R = spec.outer_radius;
    return {kPi * R * R * (1.0 - r * r), 2.0 * kPi * R * (1.0 + r)};
}

ErfcProfile ErfcProfile::radial(const RadialSet& set) { return {set.area(), set.boundary_length()}; }

void TwoErfcParams::validate() const {
    if (!(b > 0.0 && a > b)) throw ValidationError("two-erfc parameters need a > b > 0");
    if (!(B > 0.0 && A > B)) throw ValidationError("two-erfc parameters need A > B > 0");
}

TwoErfcParams TwoErfcParams::from_annulus(const AnnulusSpec& spec) {
    spec.validate();
    const double R = spec.outer_radius;
    const double rR = spec.inner_radius();
    TwoErfcParams params{kPi * R * R, kPi * rR * rR, kSqrt2Pi * R, kSqrt2Pi * rR};
    params.validate();
    return params;
}

double TwoErfcParams::unordered(double x) const { return erfc((x - a) / A) - erfc((x - b) / B); }

double TwoErfcParams::rearrangement_bound() const { return (A + B) / (a - b); }

double disk_eigenvalue(long k, double radius) {
    if (k < 0) throw ValidationError("eigenvalue index must be nonnegative");
    DiskSpec{radius}.validate();
    return poisson_upper_tail(k, kPi * radius * radius);
}

double disk_profile(double k, double radius) {
    DiskSpec{radius}.validate();
    return 0.5 * erfc((k - kPi * radius * radius) / (kSqrt2Pi * radius));
}

double annulus_unordered(long k, const AnnulusSpec& spec) {
    spec.validate();
    const double outer = disk_eigenvalue(k, spec.outer_radius);
    if (spec.inner_ratio == 0.0) return outer;
    return outer - disk_eigenvalue(k, spec.inner_radius());
}

double radial_unordered(long k, const RadialSet& set) {
    if (k < 0) throw ValidationError("eigenvalue index must be nonnegative");
    double total = 0.0;
    for (const auto& ring : set.rings()) {
        total += disk_eigenvalue(k, ring.outer);
        if (ring.inner > 0.0) total -= disk_eigenvalue(k, ring.inner);
    }
    return total;
}

std::vector<double> decreasing_rearrangement(std::span<const double> samples) {
    for (double v : samples) {
        if (!std::isfinite(v)) throw ValidationError("rearrangement requires finite samples");
    }
    std::vector<double> sorted(samples.begin(), samples.end());
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());
    return sorted;
}

double two_erfc_rearranged(const TwoErfcParams& params, double x) {
    params.validate();
    if (!(x >= 0.0)) throw ValidationError("rearranged profile is defined on x >= 0");
    const double gap = params.a - params.b;
    const double t = (x - gap) / (params.A + params.B);
    return erfc(t) - erfc((params.A * t + gap) / params.B);
}

double erfc_profile(const ErfcProfile& profile, double k) {
    profile.validate();
    return 0.5 * erfc(kSqrt2Pi * (k - profile.area) / profile.boundary);
}

double counting_function(const ErfcProfile& profile, double lambda) {
    profile.validate();
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw ValidationError("counting function needs lambda in (0, 1), got " + std::to_string(lambda));
    }
    return profile.area + profile.boundary * erfc_inv(2.0 * lambda) / kSqrt2Pi;
}

std::size_t analytic_scan_length(double max_radius) {
    const double mean = kPi * max_radius * max_radius;
    const double tail = mean + 10.0 * std::sqrt(mean) + 20.0;
    return static_cast<std::size_t>(std::ceil(std::max(3.0 * mean, tail)));
}

std::vector<double> disk_eigenvalues(double radius, std::size_t count) {
    std::vector<double> values(count);
    for (std::size_t k = 0; k < count; ++k) values[k] = disk_eigenvalue(static_cast<long>(k), radius);
    return values;
}

std::vector<double> radial_unordered_eigenvalues(const RadialSet& set, std::size_t count) {
    std::vector<double> values(count);
    for (std::size_t k = 0; k < count; ++k) values[k] = radial_unordered(static_cast<long>(k), set);
    return values;
}

double disk_profile_error(double radius) {
    DiskSpec{radius}.validate();
    const auto last = static_cast<long>(std::floor(3.0 * kPi * radius * radius));
    double worst = 0.0;
    for (long k = 0; k <= last; ++k) {
        worst = std::max(worst, std::abs(disk_eigenvalue(k, radius) - disk_profile(static_cast<double>(k), radius)));
    }
    return worst;
}

}  // namespace plunge
