#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "plunge/errors.hpp"
#include "plunge/symbol_masks.hpp"

namespace plunge {

namespace {

constexpr double kPi = std::numbers::pi;

// Shape sizes in units of the grid side M, at scale 1.
constexpr double kDiskRadius = 0.35;
constexpr double kAnnulusOuter = 0.42;
constexpr double kEllipseMajor = 0.44;
constexpr double kSquareHalfSide = 0.30;
constexpr double kStarOuter = 0.45;
constexpr double kStarInner = 0.26;
constexpr int kStarPoints = 5;
constexpr double kTilesHalfExtent = 0.42;
constexpr int kTilesPerSide = 6;
constexpr double kTilesFill = 0.7;
constexpr int kBlobCount = 6;
constexpr double kBlobFootprint = 0.35;
constexpr double kBlobClip = 0.45;
constexpr std::array<double, 3> kRingRadii{0.12, 0.24, 0.36};
constexpr double kStrokeWidth = 0.03;

struct Blob {
    double x, y, sigma;
};

double uniform(std::mt19937_64& gen, double lo, double hi) {
    // 53 random bits mapped to [0, 1)
    const double unit = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

std::vector<Blob> make_blobs(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<Blob> blobs;
    for (int i = 0; i < kBlobCount; ++i) {
        const double x = uniform(gen, -0.22, 0.22);
        const double y = uniform(gen, -0.22, 0.22);
        blobs.push_back({x, y, uniform(gen, 0.08, 0.12)});
    }
    return blobs;
}

double blob_field(const std::vector<Blob>& blobs, double x, double y) {
    double total = 0.0;
    for (const auto& b : blobs) {
        const double dx = x - b.x;
        const double dy = y - b.y;
        total += std::exp(-(dx * dx + dy * dy) / (2.0 * b.sigma * b.sigma));
    }
    return total;
}

// Polar radius of the star outline along direction theta.
double star_radius(double theta, double outer, double inner) {
    const double sector = 2.0 * kPi / kStarPoints;
    double t = std::fmod(theta + kPi / 2.0, sector);
    if (t < 0.0) t += sector;
    const double from_tip = std::min(t, sector - t);
    // edge from the tip (outer, 0) to the inner vertex at angle sector/2
    const double px = outer, py = 0.0;
    const double qx = inner * std::cos(sector / 2.0), qy = inner * std::sin(sector / 2.0);
    const double dx = qx - px, dy = qy - py;
    return (px * dy - py * dx) / (std::cos(from_tip) * dy - std::sin(from_tip) * dx);
}

// Distance from (x, y) to the line through the origin with direction angle.
double line_distance(double x, double y, double angle) { return std::abs(-std::sin(angle) * x + std::cos(angle) * y); }

using Predicate = std::function<bool(double, double)>;

Predicate shape_predicate(ShapeKind kind, int M, const ShapeOptions& opt) {
    const double s = opt.scale;
    switch (kind) {
        case ShapeKind::disk:
            return [s](double x, double y) { return std::hypot(x, y) <= kDiskRadius * s; };
        case ShapeKind::annulus:
            return [s](double x, double y) {
                const double r = std::hypot(x, y);
                return r <= kAnnulusOuter * s && r >= kAnnulusInnerRatio * kAnnulusOuter * s;
            };
        case ShapeKind::ellipse: {
            const double major = kEllipseMajor * s;
            const double minor = major / opt.ellipse_aspect;
            return [major, minor](double x, double y) { return (x / major) * (x / major) + (y / minor) * (y / minor) <= 1.0; };
        }
        case ShapeKind::square:
            return [s](double x, double y) { return std::abs(x) <= kSquareHalfSide * s && std::abs(y) <= kSquareHalfSide * s; };
        case ShapeKind::star:
            return [s](double x, double y) {
                return std::hypot(x, y) <= star_radius(std::atan2(y, x), kStarOuter * s, kStarInner * s);
            };
        case ShapeKind::tiles:
            return [s](double x, double y) {
                const double half = kTilesHalfExtent * s;
                if (std::abs(x) > half || std::abs(y) > half) return false;
                const double cell = 2.0 * half / kTilesPerSide;
                const double fx = (x + half) / cell - std::floor((x + half) / cell);
                const double fy = (y + half) / cell - std::floor((y + half) / cell);
                return fx < kTilesFill && fy < kTilesFill;
            };
        case ShapeKind::blobs: {
            auto blobs = make_blobs(opt.seed);
            // level set of the scale-1 field
            std::vector<double> field;
            field.reserve(static_cast<std::size_t>(M) * static_cast<std::size_t>(M));
            const double c = (M - 1) / 2.0;
            for (int i = 0; i < M; ++i) {
                for (int j = 0; j < M; ++j) field.push_back(blob_field(blobs, (j - c) / M, (i - c) / M));
            }
            std::sort(field.begin(), field.end());
            const auto cut = static_cast<std::size_t>(std::floor((1.0 - kBlobFootprint) * static_cast<double>(field.size())));
            const double threshold = field[std::min(cut, field.size() - 1)];
            return [blobs = std::move(blobs), threshold, s](double x, double y) {
                if (std::abs(x) > kBlobClip * s || std::abs(y) > kBlobClip * s) return false;
                return blob_field(blobs, x / s, y / s) >= threshold;
            };
        }
        case ShapeKind::lines_and_circles:
            return [s](double x, double y) {
                const double half_width = kStrokeWidth * s / 2.0;
                const double r = std::hypot(x, y);
                for (double ring : kRingRadii) {
                    if (std::abs(r - ring * s) <= half_width) return true;
                }
                if (r > kRingRadii.back() * s) return false;
                for (double angle : {0.0, kPi / 2.0, kPi / 4.0, -kPi / 4.0}) {
                    if (line_distance(x, y, angle) <= half_width) return true;
                }
                return false;
            };
    }
    throw ValidationError("unknown shape kind");
}

}  // namespace

std::string to_string(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::disk: return "disk";
        case ShapeKind::annulus: return "annulus";
        case ShapeKind::ellipse: return "ellipse";
        case ShapeKind::square: return "square";
        case ShapeKind::star: return "star";
        case ShapeKind::tiles: return "tiles";
        case ShapeKind::blobs: return "blobs";
        case ShapeKind::lines_and_circles: return "lines_and_circles";
    }
    return "unknown";
}

ShapeKind shape_kind_from_string(const std::string& name) {
    for (ShapeKind kind : all_shape_kinds()) {
        if (to_string(kind) == name) return kind;
    }
    throw ValidationError("unknown shape kind '" + name + "'");
}

const std::vector<ShapeKind>& all_shape_kinds() {
    static const std::vector<ShapeKind> kinds{ShapeKind::disk,  ShapeKind::annulus, ShapeKind::ellipse, ShapeKind::square,
                                              ShapeKind::star,  ShapeKind::tiles,   ShapeKind::blobs,   ShapeKind::lines_and_circles};
    return kinds;
}

double shape_radius_fraction(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::disk: return kDiskRadius;
        case ShapeKind::annulus: return kAnnulusOuter;
        case ShapeKind::ellipse: return kEllipseMajor;
        case ShapeKind::square: return kSquareHalfSide;
        case ShapeKind::star: return kStarOuter;
        case ShapeKind::tiles: return kTilesHalfExtent;
        case ShapeKind::blobs: return kBlobClip;
        case ShapeKind::lines_and_circles: return kRingRadii.back();
    }
    return 0.0;
}

BinaryMask render_shape(ShapeKind kind, int M, const ShapeOptions& options) {
    if (M < 16) throw ValidationError("shapes need M >= 16");
    if (!(options.scale > 0.0) || !std::isfinite(options.scale)) throw ValidationError("shape scale must be positive");
    if (!(options.ellipse_aspect >= 1.0)) throw ValidationError("ellipse aspect ratio must be at least 1");
    const auto inside = shape_predicate(kind, M, options);
    BinaryMask mask(M, M);
    const double c = (M - 1) / 2.0;
    for (int i = 0; i < M; ++i) {
        for (int j = 0; j < M; ++j) {
            // column is the time axis x, row the frequency axis y
            mask.set(i, j, inside((j - c) / M, (i - c) / M));
        }
    }
    return mask;
}

BinaryMask make_shape(ShapeKind kind, int M, const ShapeOptions& options) {
    if (!(options.scale > 0.0 && options.scale <= 1.0)) throw ValidationError("shape scale must lie in (0, 1]");
    return render_shape(kind, M, options);
}

bool respects_margin(const BinaryMask& mask, double fraction) {
    const int row_margin = static_cast<int>(std::floor(fraction * mask.rows()));
    const int col_margin = static_cast<int>(std::floor(fraction * mask.cols()));
    for (int r = 0; r < mask.rows(); ++r) {
        for (int c = 0; c < mask.cols(); ++c) {
            if (!mask(r, c)) continue;
            if (r < row_margin || r >= mask.rows() - row_margin || c < col_margin || c >= mask.cols() - col_margin) return false;
        }
    }
    return true;
}

BinaryMask complement(const BinaryMask& mask) {
    BinaryMask out(mask.rows(), mask.cols());
    for (int r = 0; r < mask.rows(); ++r) {
        for (int c = 0; c < mask.cols(); ++c) out.set(r, c, !mask(r, c));
    }
    return out;
}

BinaryMask shift(const BinaryMask& mask, int dm, int dn) {
    BinaryMask out(mask.rows(), mask.cols());
    for (int r = 0; r < mask.rows(); ++r) {
        for (int c = 0; c < mask.cols(); ++c) {
            const int rr = ((r + dm) % mask.rows() + mask.rows()) % mask.rows();
            const int cc = ((c + dn) % mask.cols() + mask.cols()) % mask.cols();
            out.set(rr, cc, mask(r, c));
        }
    }
    return out;
}

BinaryMask rotate90(const BinaryMask& mask) {
    BinaryMask out(mask.cols(), mask.rows());
    for (int r = 0; r < mask.rows(); ++r) {
        for (int c = 0; c < mask.cols(); ++c) out.set(mask.cols() - 1 - c, r, mask(r, c));
    }
    return out;
}

}  // namespace plunge
