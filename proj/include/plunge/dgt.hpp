#pragma once

/**
 * @file dgt.hpp
 * @brief Finite discrete Gabor transform on a separable lattice and the
 * frame multipliers built from it.
 *
 * Signals have length L = a * M. The atom with time index n and frequency
 * channel m is
 *
 *     atom[l] = exp(2 pi i m l / M) * w[(l - n a) mod L],
 *
 * so the lattice steps are a samples in time and L/M = a bins in frequency.
 * Coefficient grids are M x N with N = L / a = M (row m, column n).
 */

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "plunge/binary_mask.hpp"

namespace plunge {

using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

struct LatticeParams {
    int a = 0;  ///< time hop in samples
    int M = 0;  ///< frequency channels

    /// Throws ValidationError unless a >= 1 and a < M.
    static LatticeParams make(int a, int M);

    int length() const { return a * M; }
    int time_shifts() const { return M; }
    /// Phase-space area of one lattice cell when the Gaussian is standard.
    double cell_area() const { return static_cast<double>(a) / static_cast<double>(M); }

    void validate() const;
};

enum class WindowKind { gauss, box, custom };

std::string to_string(WindowKind kind);
WindowKind window_kind_from_string(const std::string& name);

struct Window {
    ComplexVector values;
    WindowKind kind = WindowKind::custom;
    int box_width = 0;   ///< only meaningful for WindowKind::box
    bool tight = false;  ///< set by tight_window; norm is then sqrt(a/M), not 1

    int length() const { return static_cast<int>(values.size()); }

    /// Unit-norm copy of arbitrary samples. Throws on an all-zero vector.
    static Window custom(ComplexVector values);
};

Window periodized_gaussian(int L);
Window box_window(int L, int W);
/// round(sqrt(L)) rounded to the nearest even number, at least 2.
int default_box_width(int L);

ComplexVector gabor_atom(const Window& w, const LatticeParams& lattice, int n, int m);

/// c(m, n) = <f, atom(n, m)>
ComplexMatrix dgt(const ComplexVector& f, const Window& w, const LatticeParams& lattice);

/// S = sum over all lattice points of atom * atom^H.
ComplexMatrix frame_operator(const Window& w, const LatticeParams& lattice);

/// S^{-1/2} w; the generated frame is Parseval. Throws NumericalError when the
/// window does not generate a frame on this lattice.
Window tight_window(const Window& w, const LatticeParams& lattice);

struct FrameMultiplier {
    ComplexMatrix matrix;
    LatticeParams lattice;
    BinaryMask symbol;
    Window window;  ///< window actually used on both sides (tight when normalized)
    bool normalized = false;
};

/// A = sum_{m,n} symbol(m, n) atom(n, m) atom(n, m)^H, with the tight window
/// on both sides when `normalize` is set.
FrameMultiplier frame_multiplier(const BinaryMask& symbol, const Window& w, const LatticeParams& lattice, bool normalize);

/// Same sum with a precomputed window used as is.
ComplexMatrix multiplier_matrix(const BinaryMask& symbol, const Window& w, const LatticeParams& lattice);

}  // namespace plunge
