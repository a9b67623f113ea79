#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "plunge/errors.hpp"
#include "plunge/experiment.hpp"
#include "table1_reference_data.hpp"

namespace plunge {

namespace {

std::optional<double> optional_number(const std::string& cell) {
    if (cell.empty()) return std::nullopt;
    return std::stod(cell);
}

std::string fixed(double value, int digits) {
    if (!std::isfinite(value)) return "n/a";
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
    return buffer;
}

std::string band(const Table1Entry& e) {
    if (!e.ratio_min || !e.ratio_max) return "";
    return "[" + fixed(*e.ratio_min, 2) + ", " + fixed(*e.ratio_max, 2) + "]";
}

}  // namespace

const std::vector<Table1Entry>& table1_reference() {
    static const std::vector<Table1Entry> entries = [] {
        const CsvTable table = parse_csv(std::string(kTable1ReferenceCsv));
        std::vector<Table1Entry> rows;
        for (const auto& cells : table.rows()) {
            Table1Entry e;
            e.symbol = cells[0];
            e.kind = shape_kind_from_string(cells[1]);
            e.a = std::stoi(cells[2]);
            e.M = std::stoi(cells[3]);
            e.reference_error = std::stod(cells[4]);
            e.reference_ratio = std::stod(cells[5]);
            e.max_error = std::stod(cells[6]);
            e.ratio_min = optional_number(cells[7]);
            e.ratio_max = optional_number(cells[8]);
            e.exceeds_disk = cells[9] == "1";
            rows.push_back(std::move(e));
        }
        return rows;
    }();
    return entries;
}

std::vector<Table1Result> run_table1(const ExperimentConfig& base) {
    std::vector<Table1Result> results;
    double disk_error = std::numeric_limits<double>::quiet_NaN();
    for (const auto& entry : table1_reference()) {
        ExperimentConfig config = base;
        config.mask_path.reset();
        config.shape = entry.kind;
        config.shape_options.scale = 1.0;
        config.a = entry.a;
        config.M = entry.M;
        Table1Result result{entry, run_experiment(config)};
        if (entry.kind == ShapeKind::disk && std::isnan(disk_error)) disk_error = result.report.linf_error;
        result.error_ok = result.report.linf_error <= entry.max_error;
        result.ratio_ok = true;
        if (entry.ratio_min && entry.ratio_max) {
            result.ratio_ok = result.report.ratio >= *entry.ratio_min && result.report.ratio <= *entry.ratio_max;
        }
        result.exceeds_ok = !entry.exceeds_disk || result.report.linf_error > disk_error;
        results.push_back(std::move(result));
    }
    return results;
}

CsvTable table1_csv(const std::vector<Table1Result>& results) {
    CsvTable table({"symbol", "a", "M", "linf_error", "ratio", "plunge_count", "reference_error", "reference_ratio", "error_limit",
                    "ratio_band", "pass"});
    for (const auto& r : results) {
        table.add_row({r.entry.symbol, std::to_string(r.entry.a), std::to_string(r.entry.M), format_number(r.report.linf_error),
                       format_number(r.report.ratio), std::to_string(r.report.plunge.count), format_number(r.entry.reference_error),
                       format_number(r.entry.reference_ratio), format_number(r.entry.max_error), band(r.entry), r.pass() ? "pass" : "FAIL"});
    }
    return table;
}

std::string table1_markdown(const std::vector<Table1Result>& results) {
    std::ostringstream md;
    md << "| Symbol | a | M | L∞ error | |∂Ω|/#P | reference error | reference ratio | limit | ratio band | result |\n";
    md << "|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : results) {
        md << "| " << r.entry.symbol << " | " << r.entry.a << " | " << r.entry.M << " | " << fixed(100.0 * r.report.linf_error, 2)
           << "% | " << fixed(r.report.ratio, 4) << " | " << fixed(100.0 * r.entry.reference_error, 1) << "% | "
           << fixed(r.entry.reference_ratio, 4) << " | " << fixed(100.0 * r.entry.max_error, 1) << "% | " << band(r.entry) << " | "
           << (r.pass() ? "pass" : "FAIL") << " |\n";
    }
    return md.str();
}

}  // namespace plunge
