#pragma once

/**
 * @file symbol_masks.hpp
 * @brief Binary symbols on the lattice grid: generators, netpbm I/O, and the
 * area / boundary-length measurement used to build the erfc profile.
 *
 * Geometry is measured on the pixel grid and mapped to phase space with the
 * lattice cell: area scales by a/M and lengths by sqrt(a/M).
 */

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "plunge/binary_mask.hpp"
#include "plunge/dgt.hpp"

namespace plunge {

enum class ShapeKind { disk, annulus, ellipse, square, star, tiles, blobs, lines_and_circles };

std::string to_string(ShapeKind kind);
ShapeKind shape_kind_from_string(const std::string& name);
const std::vector<ShapeKind>& all_shape_kinds();

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;
/// Inner-to-outer radius ratio of the generated annulus.
inline constexpr double kAnnulusInnerRatio = 0.6;

struct ShapeOptions {
    double scale = 1.0;
    std::uint64_t seed = kDefaultSeed;
    /// Major to minor semi-axis ratio of the ellipse.
    double ellipse_aspect = 2.0;
};

/// Characteristic pixel radius of a shape at scale 1, as a fraction of M.
double shape_radius_fraction(ShapeKind kind);

/// Centered M x M symbol. Requires M >= 16 and scale in (0, 1]; the result
/// keeps a margin of at least 5% of M on every side.
BinaryMask make_shape(ShapeKind kind, int M, const ShapeOptions& options = {});

/// make_shape without the scale restriction. Large scales may run into the
/// border; check with `respects_margin`.
BinaryMask render_shape(ShapeKind kind, int M, const ShapeOptions& options = {});

/// True when no set cell lies within floor(fraction * size) of an edge.
bool respects_margin(const BinaryMask& mask, double fraction = 0.05);

enum class MaskFormat { pbm_ascii, pbm_binary, pgm_ascii, pgm_binary };

/// Reads PBM (P1/P4) or PGM (P2/P5). PBM 1 bits are set cells; PGM values at
/// or above half of maxval are set cells.
BinaryMask load_mask(const std::filesystem::path& path);
void save_mask(const BinaryMask& mask, const std::filesystem::path& path, MaskFormat format = MaskFormat::pbm_binary);

/// Parses netpbm bytes already in memory.
BinaryMask parse_mask(const std::string& bytes);
std::string serialize_mask(const BinaryMask& mask, MaskFormat format);

BinaryMask complement(const BinaryMask& mask);
/// Circular shift: result(m + dm, n + dn) = mask(m, n).
BinaryMask shift(const BinaryMask& mask, int dm, int dn);
BinaryMask rotate90(const BinaryMask& mask);

/// One closed border of an 8-connected component, as a cyclic sequence of
/// foreground pixel coordinates (row, col).
struct Boundary {
    std::vector<std::pair<int, int>> points;
    bool hole = false;
    int component = -1;  ///< 0-based label of the owning component
};

/// Outer and hole borders of every 8-connected component (border following
/// in raster order).
std::vector<Boundary> trace_boundaries(const BinaryMask& mask);

/// Unweighted chain length: 1 per axis step, sqrt(2) per diagonal step.
double chain_length(const Boundary& boundary);

/// Chain length with the corner-corrected weights 0.980 (axis step), 1.406
/// (diagonal step) and -0.091 per change of step class.
double weighted_chain_length(const Boundary& boundary);

struct SymbolMeasure {
    double area = 0.0;       ///< raw_pixels * a/M
    double perimeter = 0.0;  ///< raw_perimeter * sqrt(a/M)
    int components = 0;
    std::size_t raw_pixels = 0;
    double raw_chain = 0.0;      ///< unweighted chain length over all borders
    double raw_perimeter = 0.0;  ///< corner-corrected chain length over all borders
    int degenerate_components = 0;
    std::vector<std::string> warnings;
};

SymbolMeasure measure(const BinaryMask& mask, const LatticeParams& lattice);

/// Pixel-level measurement with unit cell scaling.
SymbolMeasure measure_pixels(const BinaryMask& mask);

}  // namespace plunge
