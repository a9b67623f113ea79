#pragma once

#include <string>
#include <vector>

namespace plunge {

struct SpectrumPlot {
    std::string title;
    std::vector<double> eigenvalues;  ///< plotted at k = 1, 2, ...
    std::vector<double> profile;      ///< same length, drawn dashed
    double delta = 0.1;               ///< band [delta, 1 - delta] is shaded
};

/// SVG 1.1 document. Both curves are `<polyline>` elements (ids
/// "eigenvalues" and "erfc-profile") whose points are the raw (k, value)
/// pairs; a group transform maps them into the frame.
std::string render_spectrum_plot(const SpectrumPlot& plot);

}  // namespace plunge
