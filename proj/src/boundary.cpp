#include <array>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <numbers>
#include <string>

#include "plunge/errors.hpp"
#include "plunge/symbol_masks.hpp"

namespace plunge {

namespace {

// Neighbour offsets, counterclockwise starting east (rows grow downwards).
constexpr std::array<int, 8> kDRow{0, -1, -1, -1, 0, 1, 1, 1};
constexpr std::array<int, 8> kDCol{1, 1, 0, -1, -1, -1, 0, 1};

constexpr double kAxisWeight = 0.980;
constexpr double kDiagonalWeight = 1.406;
constexpr double kCornerWeight = 0.091;

int direction_to(int from_r, int from_c, int to_r, int to_c) {
    for (int d = 0; d < 8; ++d) {
        if (from_r + kDRow[d] == to_r && from_c + kDCol[d] == to_c) return d;
    }
    throw std::logic_error("border follower stepped to a non-adjacent pixel");
}

// Zero-padded label image used by the border follower.
class LabelImage {
public:
    explicit LabelImage(const BinaryMask& mask) : rows_(mask.rows() + 2), cols_(mask.cols() + 2), cells_(static_cast<std::size_t>(rows_ * cols_), 0) {
        for (int r = 0; r < mask.rows(); ++r) {
            for (int c = 0; c < mask.cols(); ++c) at(r + 1, c + 1) = mask(r, c) ? 1 : 0;
        }
    }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int& at(int r, int c) { return cells_[static_cast<std::size_t>(r * cols_ + c)]; }

private:
    int rows_;
    int cols_;
    std::vector<int> cells_;
};

// Follows one border starting at (r, c), entered from neighbour (from_r, from_c).
std::vector<std::pair<int, int>> follow_border(LabelImage& img, int r, int c, int from_r, int from_c, int nbd) {
    std::vector<std::pair<int, int>> points;
    const int start_dir = direction_to(r, c, from_r, from_c);
    int first = -1;
    for (int t = 0; t < 8; ++t) {
        const int d = (start_dir - t + 8) % 8;  // clockwise
        if (img.at(r + kDRow[d], c + kDCol[d]) != 0) {
            first = d;
            break;
        }
    }
    if (first < 0) {
        img.at(r, c) = -nbd;
        points.emplace_back(r - 1, c - 1);
        return points;
    }
    const int r1 = r + kDRow[first], c1 = c + kDCol[first];
    int r2 = r1, c2 = c1;
    int r3 = r, c3 = c;
    while (true) {
        const int back = direction_to(r3, c3, r2, c2);
        bool east_was_zero = false;
        int r4 = r3, c4 = c3;
        for (int t = 1; t <= 8; ++t) {
            const int d = (back + t) % 8;  // counterclockwise
            if (img.at(r3 + kDRow[d], c3 + kDCol[d]) != 0) {
                r4 = r3 + kDRow[d];
                c4 = c3 + kDCol[d];
                break;
            }
            if (d == 0) east_was_zero = true;
        }
        if (east_was_zero) {
            img.at(r3, c3) = -nbd;
        } else if (img.at(r3, c3) == 1) {
            img.at(r3, c3) = nbd;
        }
        points.emplace_back(r3 - 1, c3 - 1);
        if (r4 == r && c4 == c && r3 == r1 && c3 == c1) break;
        r2 = r3;
        c2 = c3;
        r3 = r4;
        c3 = c4;
    }
    return points;
}

// 8-connected component labels (-1 for background) and pixel counts.
std::pair<std::vector<int>, std::vector<std::size_t>> label_components(const BinaryMask& mask) {
    const int rows = mask.rows(), cols = mask.cols();
    std::vector<int> labels(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), -1);
    std::vector<std::size_t> sizes;
    std::deque<std::pair<int, int>> queue;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (!mask(r, c) || labels[static_cast<std::size_t>(r * cols + c)] >= 0) continue;
            const int label = static_cast<int>(sizes.size());
            sizes.push_back(0);
            labels[static_cast<std::size_t>(r * cols + c)] = label;
            queue.emplace_back(r, c);
            while (!queue.empty()) {
                const auto [pr, pc] = queue.front();
                queue.pop_front();
                ++sizes.back();
                for (int d = 0; d < 8; ++d) {
                    const int nr = pr + kDRow[d], nc = pc + kDCol[d];
                    if (nr < 0 || nr >= rows || nc < 0 || nc >= cols || !mask(nr, nc)) continue;
                    auto& slot = labels[static_cast<std::size_t>(nr * cols + nc)];
                    if (slot < 0) {
                        slot = label;
                        queue.emplace_back(nr, nc);
                    }
                }
            }
        }
    }
    return {std::move(labels), std::move(sizes)};
}

std::size_t step_count(const Boundary& b) { return b.points.size() < 2 ? 0 : b.points.size(); }

}  // namespace

std::vector<Boundary> trace_boundaries(const BinaryMask& mask) {
    std::vector<Boundary> borders;
    if (mask.empty()) return borders;
    const auto [labels, sizes] = label_components(mask);
    LabelImage img(mask);
    int nbd = 1;
    for (int r = 1; r < img.rows() - 1; ++r) {
        for (int c = 1; c < img.cols() - 1; ++c) {
            const int value = img.at(r, c);
            if (value == 0) continue;
            const bool outer = value == 1 && img.at(r, c - 1) == 0;
            const bool hole = !outer && value >= 1 && img.at(r, c + 1) == 0;
            if (!outer && !hole) continue;
            ++nbd;
            Boundary border;
            border.hole = hole;
            border.component = labels[static_cast<std::size_t>((r - 1) * mask.cols() + (c - 1))];
            border.points = outer ? follow_border(img, r, c, r, c - 1, nbd) : follow_border(img, r, c, r, c + 1, nbd);
            borders.push_back(std::move(border));
        }
    }
    return borders;
}

double chain_length(const Boundary& boundary) {
    const std::size_t n = step_count(boundary);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = boundary.points[i];
        const auto& q = boundary.points[(i + 1) % n];
        const bool diagonal = p.first != q.first && p.second != q.second;
        total += diagonal ? std::numbers::sqrt2 : 1.0;
    }
    return total;
}

double weighted_chain_length(const Boundary& boundary) {
    const std::size_t n = step_count(boundary);
    if (n < 2) return 0.0;
    // squared step components; a corner is a change in this pair
    std::vector<std::pair<int, int>> steps(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = boundary.points[i];
        const auto& q = boundary.points[(i + 1) % n];
        const int dr = q.first - p.first, dc = q.second - p.second;
        steps[i] = {dr * dr, dc * dc};
    }
    std::size_t axis = 0, corners = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (steps[i].first == 0 || steps[i].second == 0) ++axis;
        if (steps[i] != steps[(i + 1) % n]) ++corners;
    }
    const std::size_t diagonal = n - axis;
    return kAxisWeight * static_cast<double>(axis) + kDiagonalWeight * static_cast<double>(diagonal) -
           kCornerWeight * static_cast<double>(corners);
}

SymbolMeasure measure_pixels(const BinaryMask& mask) {
    SymbolMeasure result;
    if (mask.empty()) return result;
    result.raw_pixels = mask.count();
    const auto [labels, sizes] = label_components(mask);
    result.components = static_cast<int>(sizes.size());

    const auto borders = trace_boundaries(mask);
    for (const auto& border : borders) {
        const std::size_t pixels = sizes[static_cast<std::size_t>(border.component)];
        // An isolated pixel or one-pixel-wide open curve: its single border
        // walks out and back.
        const bool degenerate = !border.hole && step_count(border) == 2 * (pixels - 1);
        if (degenerate) {
            const double length = 2.0 * static_cast<double>(pixels - 1);
            result.raw_chain += length;
            result.raw_perimeter += length;
            ++result.degenerate_components;
            result.warnings.push_back("component " + std::to_string(border.component) + " (" + std::to_string(pixels) +
                                      " pixels) has no interior; boundary length set to 2(n-1)");
            continue;
        }
        result.raw_chain += chain_length(border);
        result.raw_perimeter += weighted_chain_length(border);
    }
    result.area = static_cast<double>(result.raw_pixels);
    result.perimeter = result.raw_perimeter;
    return result;
}

SymbolMeasure measure(const BinaryMask& mask, const LatticeParams& lattice) {
    lattice.validate();
    if (mask.rows() != lattice.M || mask.cols() != lattice.time_shifts()) {
        throw ValidationError("mask is " + std::to_string(mask.rows()) + "x" + std::to_string(mask.cols()) + ", lattice needs " +
                              std::to_string(lattice.M) + "x" + std::to_string(lattice.time_shifts()));
    }
    SymbolMeasure result = measure_pixels(mask);
    result.area = static_cast<double>(result.raw_pixels) * lattice.cell_area();
    result.perimeter = result.raw_perimeter * std::sqrt(lattice.cell_area());
    return result;
}

}  // namespace plunge
