#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "plunge/errors.hpp"
#include "plunge/experiment.hpp"

namespace plunge {

AnalyticKind analytic_kind_from_string(const std::string& name) {
    if (name == "disk") return AnalyticKind::disk;
    if (name == "annulus") return AnalyticKind::annulus;
    if (name == "radial") return AnalyticKind::radial;
    throw ValidationError("unknown analytic kind '" + name + "' (expected disk, annulus or radial)");
}

CsvTable cmd_analytic(const AnalyticRequest& request) {
    const RadialSet set = [&] {
        switch (request.kind) {
            case AnalyticKind::disk: DiskSpec{request.radius}.validate(); return RadialSet({{0.0, request.radius}});
            case AnalyticKind::annulus: return RadialSet::from_annulus({request.radius, request.inner_ratio});
            case AnalyticKind::radial: return RadialSet(request.rings);
        }
        throw ValidationError("unknown analytic kind");
    }();
    const ErfcProfile profile = ErfcProfile::radial(set);
    const std::size_t count = analytic_scan_length(set.max_radius());
    const std::vector<double> exact = radial_unordered_eigenvalues(set, count);
    const std::vector<double> sorted = decreasing_rearrangement(exact);

    CsvTable table({"k", "exact_eigenvalue", "sorted_eigenvalue", "erfc_profile", "abs_error"});
    for (std::size_t k = 0; k < count; ++k) {
        const double expected = erfc_profile(profile, static_cast<double>(k));
        table.add_row({std::to_string(k), format_number(exact[k]), format_number(sorted[k]), format_number(expected),
                       format_number(std::abs(sorted[k] - expected))});
    }
    return table;
}

double analytic_max_error(const CsvTable& table) {
    const auto& header = table.header();
    std::size_t column = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "abs_error") column = i;
    }
    if (column == header.size()) throw ValidationError("table has no abs_error column");
    double worst = 0.0;
    for (const auto& row : table.rows()) worst = std::max(worst, std::strtod(row[column].c_str(), nullptr));
    return worst;
}

}  // namespace plunge
