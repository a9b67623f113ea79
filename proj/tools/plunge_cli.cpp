// Command-line driver: analytic spectra, symbol generation and measurement,
// frame-multiplier spectra, the reference table, spectrogram images, sweeps.
//
// Exit codes: 0 success, 1 validation error, 2 numerical failure.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "plunge/errors.hpp"
#include "plunge/experiment.hpp"

namespace {

using namespace plunge;

struct SharedFlags {
    ExperimentConfig config;
    std::string shape = "disk";
    std::string window = "gauss";
    std::string mask;
    std::uint64_t seed = kDefaultSeed;
    double scale = 1.0;
    double aspect = 2.0;

    ExperimentConfig resolve() const {
        ExperimentConfig c = config;
        c.shape = shape_kind_from_string(shape);
        c.window = window_kind_from_string(window);
        c.shape_options.seed = seed;
        c.shape_options.scale = scale;
        c.shape_options.ellipse_aspect = aspect;
        if (!mask.empty()) c.mask_path = mask;
        c.validate();
        return c;
    }
};

void add_shared_flags(CLI::App* cmd, SharedFlags& flags) {
    cmd->add_option("--a", flags.config.a, "Time hop in samples")->capture_default_str();
    cmd->add_option("--M", flags.config.M, "Frequency channels (signal length L = a*M)")->capture_default_str();
    cmd->add_option("--window", flags.window, "Window: gauss or box")->capture_default_str();
    cmd->add_option("--box-width", flags.config.box_width, "Box window width W (0 = round(sqrt(L)) to even)");
    cmd->add_option("--delta", flags.config.delta, "Plunge threshold delta")->capture_default_str();
    cmd->add_option("--seed", flags.seed, "Seed for randomized shapes")->capture_default_str();
    cmd->add_option("--out", flags.config.out_dir, "Output directory")->capture_default_str();
    cmd->add_option("--mask", flags.mask, "Symbol from a PBM/PGM file instead of --shape");
    cmd->add_option("--shape", flags.shape,
                    "disk, annulus, ellipse, square, star, tiles, blobs, lines_and_circles")
        ->capture_default_str();
    cmd->add_option("--scale", flags.scale, "Shape scale in (0, 1]")->capture_default_str();
    cmd->add_option("--aspect", flags.aspect, "Ellipse axis ratio")->capture_default_str();
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            values.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ValidationError("cannot parse number '" + item + "'");
        }
    }
    if (values.empty()) throw ValidationError("empty number list");
    return values;
}

std::vector<RadialRing> parse_rings(const std::string& text) {
    std::vector<RadialRing> rings;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ValidationError("rings are written inner:outer, got '" + item + "'");
        try {
            rings.push_back({std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
        } catch (const std::invalid_argument&) {
            throw ValidationError("cannot parse ring '" + item + "'");
        }
    }
    return rings;
}

MaskFormat mask_format_from_string(const std::string& name) {
    if (name == "pbm") return MaskFormat::pbm_binary;
    if (name == "pbm-ascii") return MaskFormat::pbm_ascii;
    if (name == "pgm") return MaskFormat::pgm_binary;
    if (name == "pgm-ascii") return MaskFormat::pgm_ascii;
    throw ValidationError("unknown mask format '" + name + "'");
}

std::string fmt(double value, const char* spec = "%.4f") {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, spec, value);
    return buffer;
}

void print_measure_warnings(const SymbolMeasure& m) {
    for (const auto& w : m.warnings) std::cerr << "warning: " << w << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plunge-region eigenvalue laboratory for time-frequency localization"};
    app.require_subcommand(1);

    // analytic
    auto* analytic = app.add_subcommand("analytic", "Closed-form spectra of disks, annuli and unions of annuli");
    std::string analytic_kind = "disk";
    AnalyticRequest request;
    std::string rings_text;
    std::filesystem::path analytic_out = "out";
    analytic->add_option("--kind", analytic_kind, "disk, annulus or radial")->capture_default_str();
    analytic->add_option("--R", request.radius, "Disk / outer annulus radius")->capture_default_str();
    analytic->add_option("--r", request.inner_ratio, "Annulus inner ratio")->capture_default_str();
    analytic->add_option("--rings", rings_text, "Radial set as inner:outer,inner:outer,...");
    analytic->add_option("--out", analytic_out, "Output directory")->capture_default_str();

    // mask
    auto* mask_cmd = app.add_subcommand("mask", "Generate a symbol and save it as PBM/PGM");
    SharedFlags mask_flags;
    std::string mask_format = "pbm";
    add_shared_flags(mask_cmd, mask_flags);
    mask_cmd->add_option("--format", mask_format, "pbm, pbm-ascii, pgm or pgm-ascii")->capture_default_str();

    // measure
    auto* measure_cmd = app.add_subcommand("measure", "Area, boundary length and components of a symbol");
    SharedFlags measure_flags;
    add_shared_flags(measure_cmd, measure_flags);

    // eig
    auto* eig = app.add_subcommand("eig", "Frame-multiplier spectrum versus the erfc profile");
    SharedFlags eig_flags;
    add_shared_flags(eig, eig_flags);

    // table1
    auto* table = app.add_subcommand("table1", "Reference table of symbols and lattices");
    SharedFlags table_flags;
    add_shared_flags(table, table_flags);

    // spectrogram
    auto* spectrogram = app.add_subcommand("spectrogram", "RGB image of three plunge eigenvector spectrograms");
    SharedFlags spec_flags;
    double target = 0.5;
    add_shared_flags(spectrogram, spec_flags);
    spectrogram->add_option("--target", target, "Eigenvalue the three eigenvectors are closest to")->capture_default_str();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Profile error across dilations of a symbol");
    SharedFlags sweep_flags;
    std::string scales_text = "0.5,0.75,1";
    std::string radii_text = "5,10,20,40";
    bool analytic_sweep = false;
    add_shared_flags(sweep, sweep_flags);
    sweep->add_option("--scales", scales_text, "Comma-separated shape scales")->capture_default_str();
    sweep->add_flag("--analytic", analytic_sweep, "Sweep the closed-form disk instead of a multiplier");
    sweep->add_option("--radii", radii_text, "Disk radii for --analytic")->capture_default_str();

    try {
        app.parse(argc, argv);

        if (*analytic) {
            request.kind = analytic_kind_from_string(analytic_kind);
            if (request.kind == AnalyticKind::radial) request.rings = parse_rings(rings_text);
            const CsvTable csv = cmd_analytic(request);
            const auto path = analytic_out / ("analytic_" + analytic_kind + ".csv");
            write_file(path, csv.str());
            std::cout << "wrote " << path.string() << " (" << csv.rows().size() << " rows), max |sorted - erfc| = "
                      << fmt(analytic_max_error(csv), "%.6f") << '\n';
        } else if (*mask_cmd) {
            const ExperimentConfig c = mask_flags.resolve();
            const BinaryMask m = c.make_symbol();
            const bool ascii = mask_format.find("ascii") != std::string::npos;
            const std::string ext = mask_format.rfind("pgm", 0) == 0 ? ".pgm" : ".pbm";
            const auto path = c.out_dir / (to_string(c.shape) + (ascii ? "_ascii" : "") + ext);
            save_mask(m, path, mask_format_from_string(mask_format));
            std::cout << "wrote " << path.string() << " (" << m.rows() << "x" << m.cols() << ", " << m.count() << " cells)\n";
        } else if (*measure_cmd) {
            const ExperimentConfig c = measure_flags.resolve();
            const SymbolMeasure m = measure(c.make_symbol(), c.lattice());
            print_measure_warnings(m);
            nlohmann::ordered_json j{{"area", m.area},
                                     {"perimeter", m.perimeter},
                                     {"components", m.components},
                                     {"raw_pixels", m.raw_pixels},
                                     {"raw_chain", m.raw_chain},
                                     {"raw_perimeter", m.raw_perimeter},
                                     {"degenerate_components", m.degenerate_components}};
            std::cout << j.dump(2) << '\n';
        } else if (*eig) {
            const ExperimentReport r = cmd_eig(eig_flags.resolve());
            print_measure_warnings(r.measure);
            std::cout << r.label << "\n  area " << fmt(r.measure.area, "%.2f") << ", perimeter " << fmt(r.measure.perimeter, "%.3f")
                      << "\n  plunge count " << r.plunge.count << ", perimeter/count " << fmt(r.ratio)
                      << "\n  L-inf profile error " << fmt(100.0 * r.linf_error, "%.2f") << "%\n  wrote "
                      << r.eigenvalues_csv.string() << ", " << r.plot_svg.string() << ", " << r.report_json.string() << '\n';
        } else if (*table) {
            const ExperimentConfig base = table_flags.resolve();
            const auto results = run_table1(base);
            write_file(base.out_dir / "table1.csv", table1_csv(results).str());
            const std::string md = table1_markdown(results);
            write_file(base.out_dir / "table1.md", md);
            std::cout << md;
        } else if (*spectrogram) {
            const ExperimentConfig c = spec_flags.resolve();
            const RgbSpectrogram s = cmd_spectrogram_rgb(c, target);
            std::cout << "eigenvalues";
            for (double v : s.eigenvalues) std::cout << ' ' << fmt(v, "%.5f");
            std::cout << "\nchannel overlap " << fmt(s.overlap) << "\nwrote " << (c.out_dir / "spectrogram.ppm").string() << '\n';
        } else if (*sweep) {
            const ExperimentConfig c = sweep_flags.resolve();
            std::vector<SweepRow> rows;
            std::string name;
            if (analytic_sweep) {
                rows = analytic_disk_sweep(parse_list(radii_text));
                name = "sweep_analytic_disk.csv";
            } else {
                rows = cmd_sweep(c, parse_list(scales_text));
                name = "sweep_" + to_string(c.shape) + ".csv";
            }
            for (const auto& row : rows) {
                if (row.flagged) std::cerr << "warning: scale " << row.scale << ": " << row.note << '\n';
            }
            write_file(c.out_dir / name, sweep_csv(rows).str());
            std::cout << sweep_csv(rows).str();
            try {
                std::cout << "log-log slope " << fmt(loglog_slope(rows)) << '\n';
            } catch (const ValidationError&) {
            }
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
