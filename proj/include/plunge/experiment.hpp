#pragma once

/**
 * @file experiment.hpp
 * @brief End-to-end runs: symbol -> frame multiplier -> spectrum -> erfc
 * profile comparison, plus the artifact writers behind the CLI.
 */

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "plunge/analytic_profiles.hpp"
#include "plunge/csv.hpp"
#include "plunge/dgt.hpp"
#include "plunge/eigensolve.hpp"
#include "plunge/netpbm.hpp"
#include "plunge/symbol_masks.hpp"

namespace plunge {

struct ExperimentConfig {
    ShapeKind shape = ShapeKind::disk;
    ShapeOptions shape_options;
    /// When set, the symbol is read from this file instead of generated.
    std::optional<std::filesystem::path> mask_path;
    int a = 10;
    int M = 100;
    WindowKind window = WindowKind::gauss;
    int box_width = 0;  ///< 0 selects default_box_width(L)
    double delta = 0.1;
    std::filesystem::path out_dir = "out";

    /// Throws ValidationError: L = a*M must not exceed 4096, delta in (0, 1/2),
    /// window must be gauss or box.
    void validate() const;

    LatticeParams lattice() const;
    Window make_window() const;
    BinaryMask make_symbol() const;
    std::string describe() const;
};

struct ExperimentReport {
    std::string label;
    LatticeParams lattice;
    SymbolMeasure measure;
    ErfcProfile profile{};
    Spectrum spectrum;
    PlungeStats plunge;
    double linf_error = 0.0;
    /// perimeter / plunge count; NaN when the plunge region is empty
    double ratio = 0.0;
    std::filesystem::path eigenvalues_csv;
    std::filesystem::path plot_svg;
    std::filesystem::path report_json;
};

/// Symbol, multiplier, spectrum and profile error, without writing anything.
ExperimentReport run_experiment(const ExperimentConfig& config, bool want_vectors = false);

/// Same as run_experiment with a ready-made symbol.
ExperimentReport run_experiment(const ExperimentConfig& config, const BinaryMask& symbol, bool want_vectors = false);

/// run_experiment, then writes eigenvalues.csv, plot.svg and report.json
/// into config.out_dir.
ExperimentReport cmd_eig(const ExperimentConfig& config);

/// CSV of k, eigenvalue, erfc_profile, abs_error (k 1-based).
CsvTable eigenvalue_table(const ExperimentReport& report);
std::string report_json(const ExperimentReport& report);

// ---------------------------------------------------------------------------
// Closed-form spectra

enum class AnalyticKind { disk, annulus, radial };

AnalyticKind analytic_kind_from_string(const std::string& name);

struct AnalyticRequest {
    AnalyticKind kind = AnalyticKind::disk;
    double radius = 15.0;       ///< disk / annulus outer radius
    double inner_ratio = 0.6;   ///< annulus only
    std::vector<RadialRing> rings;  ///< radial only
};

/// Columns k, exact_eigenvalue, sorted_eigenvalue, erfc_profile, abs_error
/// with k 0-based; the sorted column is the decreasing rearrangement.
CsvTable cmd_analytic(const AnalyticRequest& request);

/// max |sorted - profile| of an analytic table.
double analytic_max_error(const CsvTable& table);

// ---------------------------------------------------------------------------
// Reference table

struct Table1Entry {
    std::string symbol;
    ShapeKind kind;
    int a;
    int M;
    double reference_error;
    double reference_ratio;
    double max_error;
    std::optional<double> ratio_min;
    std::optional<double> ratio_max;
    /// error must be strictly above the first disk row's error
    bool exceeds_disk;
};

/// Embedded reference rows with tolerance bands.
const std::vector<Table1Entry>& table1_reference();

struct Table1Result {
    Table1Entry entry;
    ExperimentReport report;
    bool error_ok = false;
    bool ratio_ok = false;
    bool exceeds_ok = false;
    bool pass() const { return error_ok && ratio_ok && exceeds_ok; }
};

/// Runs every reference row. `base` supplies window and seed.
std::vector<Table1Result> run_table1(const ExperimentConfig& base);
CsvTable table1_csv(const std::vector<Table1Result>& results);
std::string table1_markdown(const std::vector<Table1Result>& results);

// ---------------------------------------------------------------------------
// Plunge eigenvector spectrograms

struct RgbSpectrogram {
    RgbImage image;
    std::vector<double> eigenvalues;  ///< one per channel
    double overlap = 0.0;             ///< mean min/max channel ratio over the support
};

/// Pixels whose brightest channel is at least this level form the support.
inline constexpr double kSpectrogramSupportLevel = 0.05;

/// Channel c is |dgt(vectors[c])|^2 scaled to a peak of 1; row m, column n.
RgbSpectrogram rgb_spectrogram(const std::vector<Eigen::VectorXcd>& vectors, const Window& w, const LatticeParams& lattice);

/// Mean over support pixels of min(R,G,B)/max(R,G,B).
double channel_overlap(const RgbImage& image, double support_level = kSpectrogramSupportLevel);

/// Three eigenvectors nearest `target`, written to out_dir/spectrogram.ppm.
RgbSpectrogram cmd_spectrogram_rgb(const ExperimentConfig& config, double target = 0.5);

// ---------------------------------------------------------------------------
// Dilation sweeps

struct SweepRow {
    double scale = 0.0;
    double linf_error = 0.0;
    int plunge_count = 0;
    double ratio = 0.0;
    bool flagged = false;
    std::string note;
};

/// One experiment per scale; shapes that break the 5% margin are flagged.
std::vector<SweepRow> cmd_sweep(const ExperimentConfig& config, const std::vector<double>& scales);
CsvTable sweep_csv(const std::vector<SweepRow>& rows);

/// disk_profile_error at each radius.
std::vector<SweepRow> analytic_disk_sweep(const std::vector<double>& radii);

/// Least-squares slope of log(error) against log(scale).
double loglog_slope(const std::vector<SweepRow>& rows);

}  // namespace plunge
