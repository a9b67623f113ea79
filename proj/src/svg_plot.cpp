#include "plunge/svg_plot.hpp"

#include <algorithm>
#include <sstream>

#include "plunge/csv.hpp"
#include "plunge/errors.hpp"

namespace plunge {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 24.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 48.0;
constexpr double kYMin = -0.05;
constexpr double kYMax = 1.05;

std::string escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string points(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(i + 1);
        out += ',';
        out += format_number(values[i]);
    }
    return out;
}

}  // namespace

std::string render_spectrum_plot(const SpectrumPlot& plot) {
    if (plot.eigenvalues.empty()) throw ValidationError("nothing to plot");
    if (plot.profile.size() != plot.eigenvalues.size()) throw ValidationError("profile and eigenvalues differ in length");

    const double x_max = static_cast<double>(plot.eigenvalues.size());
    const double frame_w = kWidth - kLeft - kRight;
    const double frame_h = kHeight - kTop - kBottom;
    const double sx = frame_w / x_max;
    const double sy = frame_h / (kYMax - kYMin);
    auto px = [&](double x) { return kLeft + x * sx; };
    auto py = [&](double y) { return kTop + (kYMax - y) * sy; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
        << escape(plot.title) << "</text>\n";

    // plunge band
    svg << "<rect id=\"plunge-band\" x=\"" << px(0) << "\" y=\"" << py(1.0 - plot.delta) << "\" width=\"" << frame_w
        << "\" height=\"" << py(plot.delta) - py(1.0 - plot.delta) << "\" fill=\"#bbbbbb\" fill-opacity=\"0.45\"/>\n";

    svg << "<g font-family=\"sans-serif\" font-size=\"11\" stroke=\"none\" fill=\"#333333\">\n";
    for (double y : {0.0, 0.5, 1.0}) {
        svg << "<line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(x_max) << "\" y2=\"" << py(y)
            << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << py(y) + 4 << "\" text-anchor=\"end\">" << y << "</text>\n";
    }
    for (int i = 0; i <= 4; ++i) {
        const double x = x_max * i / 4.0;
        svg << "<text x=\"" << px(x) << "\" y=\"" << kHeight - kBottom + 18 << "\" text-anchor=\"middle\">"
            << static_cast<long>(x + 0.5) << "</text>\n";
    }
    svg << "<text x=\"" << kLeft + frame_w / 2 << "\" y=\"" << kHeight - 10 << "\" text-anchor=\"middle\">k</text>\n";
    svg << "</g>\n";
    svg << "<rect x=\"" << px(0) << "\" y=\"" << kTop << "\" width=\"" << frame_w << "\" height=\"" << frame_h
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    svg << "<g transform=\"matrix(" << sx << " 0 0 " << -sy << ' ' << kLeft << ' ' << kTop + kYMax * sy
        << ")\" fill=\"none\" stroke-linejoin=\"round\">\n";
    svg << "<polyline id=\"erfc-profile\" stroke=\"#d62728\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\" "
           "vector-effect=\"non-scaling-stroke\" points=\""
        << points(plot.profile) << "\"/>\n";
    svg << "<polyline id=\"eigenvalues\" stroke=\"#1f77b4\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\" points=\""
        << points(plot.eigenvalues) << "\"/>\n";
    svg << "</g>\n";

    const double lx = kWidth - kRight - 170;
    svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<line x1=\"" << lx << "\" y1=\"" << kTop + 16 << "\" x2=\"" << lx + 24 << "\" y2=\"" << kTop + 16
        << "\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
    svg << "<text x=\"" << lx + 30 << "\" y=\"" << kTop + 20 << "\">eigenvalues</text>\n";
    svg << "<line x1=\"" << lx << "\" y1=\"" << kTop + 34 << "\" x2=\"" << lx + 24 << "\" y2=\"" << kTop + 34
        << "\" stroke=\"#d62728\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
    svg << "<text x=\"" << lx + 30 << "\" y=\"" << kTop + 38 << "\">erfc profile</text>\n";
    svg << "</g>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace plunge
