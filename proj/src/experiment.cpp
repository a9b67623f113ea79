#include "plunge/experiment.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "plunge/errors.hpp"
#include "plunge/svg_plot.hpp"

namespace plunge {

namespace {

constexpr int kMaxSignalLength = 4096;

double quiet_nan() { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace

void ExperimentConfig::validate() const {
    LatticeParams::make(a, M);
    if (static_cast<long>(a) * M > kMaxSignalLength) {
        throw ValidationError("signal length a*M = " + std::to_string(static_cast<long>(a) * M) + " exceeds " +
                              std::to_string(kMaxSignalLength));
    }
    if (!(delta > 0.0 && delta < 0.5)) throw ValidationError("delta must lie in (0, 1/2)");
    if (window != WindowKind::gauss && window != WindowKind::box) throw ValidationError("window must be gauss or box");
    if (box_width < 0) throw ValidationError("box width must be positive");
}

LatticeParams ExperimentConfig::lattice() const { return LatticeParams::make(a, M); }

Window ExperimentConfig::make_window() const {
    const int L = a * M;
    if (window == WindowKind::box) return box_window(L, box_width > 0 ? box_width : default_box_width(L));
    return periodized_gaussian(L);
}

BinaryMask ExperimentConfig::make_symbol() const {
    if (mask_path) {
        BinaryMask mask = load_mask(*mask_path);
        if (mask.rows() != M || mask.cols() != M) {
            throw ValidationError("mask " + mask_path->string() + " is " + std::to_string(mask.rows()) + "x" +
                                  std::to_string(mask.cols()) + ", lattice needs " + std::to_string(M) + "x" + std::to_string(M));
        }
        return mask;
    }
    return make_shape(shape, M, shape_options);
}

std::string ExperimentConfig::describe() const {
    std::ostringstream out;
    out << (mask_path ? mask_path->filename().string() : to_string(shape)) << " a=" << a << " M=" << M << ' ' << to_string(window);
    if (window == WindowKind::box) out << " W=" << (box_width > 0 ? box_width : default_box_width(a * M));
    return out.str();
}

ExperimentReport run_experiment(const ExperimentConfig& config, bool want_vectors) {
    config.validate();
    return run_experiment(config, config.make_symbol(), want_vectors);
}

ExperimentReport run_experiment(const ExperimentConfig& config, const BinaryMask& symbol, bool want_vectors) {
    config.validate();
    ExperimentReport report;
    report.label = config.describe();
    report.lattice = config.lattice();
    report.measure = measure(symbol, report.lattice);
    if (report.measure.raw_pixels == 0) throw ValidationError("symbol is empty");

    const FrameMultiplier multiplier = frame_multiplier(symbol, config.make_window(), report.lattice, true);
    report.spectrum = hermitian_eig(multiplier.matrix, want_vectors);
    report.profile = ErfcProfile{report.measure.area, report.measure.perimeter};
    report.linf_error = linf_profile_error(report.spectrum, report.profile);
    report.plunge = plunge_stats(report.spectrum, config.delta);
    report.ratio = report.plunge.count > 0 ? report.measure.perimeter / report.plunge.count : quiet_nan();
    return report;
}

CsvTable eigenvalue_table(const ExperimentReport& report) {
    CsvTable table({"k", "eigenvalue", "erfc_profile", "abs_error"});
    for (Eigen::Index k = 0; k < report.spectrum.eigenvalues.size(); ++k) {
        const double lambda = report.spectrum.eigenvalues[k];
        const double expected = erfc_profile(report.profile, static_cast<double>(k + 1));
        table.add_row({std::to_string(k + 1), format_number(lambda), format_number(expected), format_number(std::abs(lambda - expected))});
    }
    return table;
}

std::string report_json(const ExperimentReport& report) {
    nlohmann::ordered_json j;
    auto number_or_null = [](double v) { return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr); };
    j["label"] = report.label;
    j["a"] = report.lattice.a;
    j["M"] = report.lattice.M;
    j["L"] = report.lattice.length();
    j["area"] = report.measure.area;
    j["perimeter"] = report.measure.perimeter;
    j["components"] = report.measure.components;
    j["raw_pixels"] = report.measure.raw_pixels;
    j["raw_chain"] = report.measure.raw_chain;
    j["raw_perimeter"] = report.measure.raw_perimeter;
    j["warnings"] = report.measure.warnings;
    j["linf_error"] = report.linf_error;
    j["plunge"] = {{"delta", report.plunge.delta},
                   {"count", report.plunge.count},
                   {"first_index", report.plunge.first_index},
                   {"last_index", report.plunge.last_index}};
    j["ratio"] = number_or_null(report.ratio);
    j["trace_defect"] = report.spectrum.trace_defect;
    j["eigenvalues_csv"] = report.eigenvalues_csv.filename().string();
    j["plot_svg"] = report.plot_svg.filename().string();
    return j.dump(2) + "\n";
}

ExperimentReport cmd_eig(const ExperimentConfig& config) {
    ExperimentReport report = run_experiment(config);
    const CsvTable table = eigenvalue_table(report);

    SpectrumPlot plot;
    plot.title = report.label;
    plot.delta = config.delta;
    plot.eigenvalues.assign(report.spectrum.eigenvalues.data(), report.spectrum.eigenvalues.data() + report.spectrum.eigenvalues.size());
    for (std::size_t k = 0; k < plot.eigenvalues.size(); ++k) {
        plot.profile.push_back(erfc_profile(report.profile, static_cast<double>(k + 1)));
    }

    report.eigenvalues_csv = config.out_dir / "eigenvalues.csv";
    report.plot_svg = config.out_dir / "plot.svg";
    report.report_json = config.out_dir / "report.json";
    write_file(report.eigenvalues_csv, table.str());
    write_file(report.plot_svg, render_spectrum_plot(plot));
    write_file(report.report_json, report_json(report));
    return report;
}

double channel_overlap(const RgbImage& image, double support_level) {
    double total = 0.0;
    std::size_t pixels = 0;
    const double level = support_level * 255.0;
    for (std::size_t p = 0; p + 2 < image.pixels.size(); p += 3) {
        const double r = image.pixels[p], g = image.pixels[p + 1], b = image.pixels[p + 2];
        const double hi = std::max({r, g, b});
        if (hi < level || hi == 0.0) continue;
        total += std::min({r, g, b}) / hi;
        ++pixels;
    }
    return pixels == 0 ? 0.0 : total / static_cast<double>(pixels);
}

RgbSpectrogram rgb_spectrogram(const std::vector<Eigen::VectorXcd>& vectors, const Window& w, const LatticeParams& lattice) {
    if (vectors.size() != 3) throw ValidationError("RGB spectrogram needs exactly three vectors");
    const int M = lattice.M;
    const int N = lattice.time_shifts();
    RgbSpectrogram result;
    result.image = RgbImage(N, M);
    for (std::size_t channel = 0; channel < 3; ++channel) {
        if (!(vectors[channel].norm() > 0.0)) throw ValidationError("cannot draw the spectrogram of a zero vector");
        const Eigen::MatrixXd power = dgt(vectors[channel], w, lattice).cwiseAbs2();
        const double peak = power.maxCoeff();
        if (!(peak > 0.0)) throw ValidationError("spectrogram vanishes on the lattice");
        for (int m = 0; m < M; ++m) {
            for (int n = 0; n < N; ++n) {
                const auto level = static_cast<std::uint8_t>(std::lround(255.0 * power(m, n) / peak));
                result.image.pixels[static_cast<std::size_t>(3 * (m * N + n)) + channel] = level;
            }
        }
    }
    result.overlap = channel_overlap(result.image);
    return result;
}

RgbSpectrogram cmd_spectrogram_rgb(const ExperimentConfig& config, double target) {
    if (!(target >= 0.0 && target <= 1.0)) throw ValidationError("target eigenvalue must lie in [0, 1]");
    config.validate();
    const LatticeParams lattice = config.lattice();
    const BinaryMask symbol = config.make_symbol();
    const FrameMultiplier multiplier = frame_multiplier(symbol, config.make_window(), lattice, true);
    const Spectrum spectrum = hermitian_eig(multiplier.matrix, true);
    const auto picked = eigenvectors_near(spectrum, target, 3);

    std::vector<Eigen::VectorXcd> vectors;
    std::vector<double> values;
    for (const auto& [lambda, v] : picked) {
        values.push_back(lambda);
        vectors.push_back(v);
    }
    RgbSpectrogram result = rgb_spectrogram(vectors, multiplier.window, lattice);
    result.eigenvalues = values;
    write_ppm(result.image, config.out_dir / "spectrogram.ppm");
    return result;
}

std::vector<SweepRow> cmd_sweep(const ExperimentConfig& config, const std::vector<double>& scales) {
    config.validate();
    if (config.mask_path) throw ValidationError("sweeps dilate generated shapes; --mask is not supported");
    std::vector<SweepRow> rows;
    for (double scale : scales) {
        SweepRow row;
        row.scale = scale;
        ShapeOptions options = config.shape_options;
        options.scale = scale;
        const BinaryMask symbol = render_shape(config.shape, config.M, options);
        if (!respects_margin(symbol)) {
            row.flagged = true;
            row.note = "shape reaches the 5% border margin";
        }
        if (symbol.count() == 0) {
            row.flagged = true;
            row.note = "shape is empty at this scale";
            row.linf_error = quiet_nan();
            row.ratio = quiet_nan();
            rows.push_back(row);
            continue;
        }
        const ExperimentReport report = run_experiment(config, symbol);
        row.linf_error = report.linf_error;
        row.plunge_count = report.plunge.count;
        row.ratio = report.ratio;
        rows.push_back(row);
    }
    return rows;
}

CsvTable sweep_csv(const std::vector<SweepRow>& rows) {
    CsvTable table({"scale", "linf_error", "plunge_count", "ratio", "flagged", "note"});
    for (const auto& row : rows) {
        table.add_row({format_number(row.scale), format_number(row.linf_error), std::to_string(row.plunge_count),
                       format_number(row.ratio), row.flagged ? "1" : "0", row.note});
    }
    return table;
}

std::vector<SweepRow> analytic_disk_sweep(const std::vector<double>& radii) {
    std::vector<SweepRow> rows;
    for (double radius : radii) {
        SweepRow row;
        row.scale = radius;
        row.linf_error = disk_profile_error(radius);
        rows.push_back(row);
    }
    return rows;
}

double loglog_slope(const std::vector<SweepRow>& rows) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& row : rows) {
        if (row.flagged || !(row.scale > 0.0) || !(row.linf_error > 0.0)) continue;
        const double x = std::log(row.scale), y = std::log(row.linf_error);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) throw ValidationError("slope needs at least two usable rows");
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw ValidationError("slope needs distinct scales");
    return (n * sxy - sx * sy) / denom;
}

}  // namespace plunge
