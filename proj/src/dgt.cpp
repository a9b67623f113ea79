#include "plunge/dgt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "plunge/errors.hpp"

namespace plunge {

namespace {

// Window samples below this fraction of the peak are skipped during assembly.
constexpr double kSupportCutoff = 1e-17;

// exp(2 pi i j / M) for j = 0..M-1
std::vector<std::complex<double>> unit_roots(int M) {
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) {
        roots[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * std::numbers::pi * j / M);
    }
    return roots;
}

void check_window(const Window& w, const LatticeParams& lattice) {
    lattice.validate();
    if (w.length() != lattice.length()) {
        throw ValidationError("window length " + std::to_string(w.length()) + " does not match L = " +
                              std::to_string(lattice.length()));
    }
}

int positive_mod(long value, int modulus) {
    const long r = value % modulus;
    return static_cast<int>(r < 0 ? r + modulus : r);
}

}  // namespace

LatticeParams LatticeParams::make(int a, int M) {
    LatticeParams lattice{a, M};
    lattice.validate();
    return lattice;
}

void LatticeParams::validate() const {
    if (a < 1 || M < 1) throw ValidationError("lattice needs a >= 1 and M >= 1");
    if (a >= M) throw ValidationError("lattice needs a < M (redundancy above one)");
}

std::string to_string(WindowKind kind) {
    switch (kind) {
        case WindowKind::gauss: return "gauss";
        case WindowKind::box: return "box";
        case WindowKind::custom: return "custom";
    }
    return "custom";
}

WindowKind window_kind_from_string(const std::string& name) {
    if (name == "gauss") return WindowKind::gauss;
    if (name == "box") return WindowKind::box;
    if (name == "custom") return WindowKind::custom;
    throw ValidationError("unknown window kind '" + name + "'");
}

Window Window::custom(ComplexVector values) {
    const double norm = values.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) throw ValidationError("window must be nonzero and finite");
    Window w;
    w.values = values / norm;
    w.kind = WindowKind::custom;
    return w;
}

Window periodized_gaussian(int L) {
    if (L < 4) throw ValidationError("periodized Gaussian needs L >= 4");
    const double length = static_cast<double>(L);
    const int wraps = static_cast<int>(std::ceil(std::sqrt(36.0 * length / std::numbers::pi) / length)) + 1;
    Window w;
    w.kind = WindowKind::gauss;
    w.values.resize(L);
    for (int l = 0; l < L; ++l) {
        // centred representative in [-L/2, L/2)
        const double t = (l < (L + 1) / 2) ? l : l - L;
        double sum = 0.0;
        for (int j = -wraps; j <= wraps; ++j) {
            const double shifted = t + j * length;
            sum += std::exp(-std::numbers::pi * shifted * shifted / length);
        }
        w.values[l] = sum;
    }
    w.values /= w.values.norm();
    return w;
}

Window box_window(int L, int W) {
    if (L < 1) throw ValidationError("box window needs L >= 1");
    if (W < 1 || W > L) {
        throw ValidationError("box width must lie in [1, L], got W = " + std::to_string(W));
    }
    Window w;
    w.kind = WindowKind::box;
    w.box_width = W;
    w.values = ComplexVector::Zero(L);
    const double height = 1.0 / std::sqrt(static_cast<double>(W));
    const int first = -(W / 2);
    for (int i = 0; i < W; ++i) w.values[positive_mod(first + i, L)] = height;
    return w;
}

int default_box_width(int L) {
    const long even = 2 * std::lround(std::sqrt(static_cast<double>(L)) / 2.0);
    return static_cast<int>(std::clamp<long>(even, 2, std::max(2, L)));
}

ComplexVector gabor_atom(const Window& w, const LatticeParams& lattice, int n, int m) {
    check_window(w, lattice);
    if (n < 0 || n >= lattice.time_shifts() || m < 0 || m >= lattice.M) {
        throw ValidationError("atom index (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ") out of range");
    }
    const int L = lattice.length();
    const auto roots = unit_roots(lattice.M);
    ComplexVector atom(L);
    for (int l = 0; l < L; ++l) {
        const int phase = static_cast<int>((static_cast<long>(m) * l) % lattice.M);
        atom[l] = roots[static_cast<std::size_t>(phase)] * w.values[positive_mod(l - static_cast<long>(n) * lattice.a, L)];
    }
    return atom;
}

ComplexMatrix dgt(const ComplexVector& f, const Window& w, const LatticeParams& lattice) {
    check_window(w, lattice);
    const int L = lattice.length();
    const int M = lattice.M;
    if (f.size() != L) throw ValidationError("signal length does not match L");
    const auto roots = unit_roots(M);
    ComplexMatrix coefficients(M, lattice.time_shifts());
    std::vector<std::complex<double>> folded(static_cast<std::size_t>(M));
    for (int n = 0; n < lattice.time_shifts(); ++n) {
        std::fill(folded.begin(), folded.end(), std::complex<double>{});
        for (int l = 0; l < L; ++l) {
            folded[static_cast<std::size_t>(l % M)] += f[l] * std::conj(w.values[positive_mod(l - static_cast<long>(n) * lattice.a, L)]);
        }
        for (int m = 0; m < M; ++m) {
            std::complex<double> acc{};
            for (int r = 0; r < M; ++r) {
                const auto phase = static_cast<std::size_t>((static_cast<long>(m) * r) % M);
                acc += folded[static_cast<std::size_t>(r)] * std::conj(roots[phase]);
            }
            coefficients(m, n) = acc;
        }
    }
    return coefficients;
}

ComplexMatrix multiplier_matrix(const BinaryMask& symbol, const Window& w, const LatticeParams& lattice) {
    check_window(w, lattice);
    const int L = lattice.length();
    const int M = lattice.M;
    const int N = lattice.time_shifts();
    if (symbol.rows() != M || symbol.cols() != N) {
        throw ValidationError("symbol is " + std::to_string(symbol.rows()) + "x" + std::to_string(symbol.cols()) +
                              ", lattice needs " + std::to_string(M) + "x" + std::to_string(N));
    }

    const double peak = w.values.cwiseAbs().maxCoeff();
    std::vector<int> support;
    for (int j = 0; j < L; ++j) {
        if (std::abs(w.values[j]) > kSupportCutoff * peak) support.push_back(j);
    }
    const auto roots = unit_roots(M);

    ComplexMatrix A = ComplexMatrix::Zero(L, L);
    std::vector<std::complex<double>> kernel(static_cast<std::size_t>(M));
    for (int n = 0; n < N; ++n) {
        // kernel[d] = sum_m symbol(m, n) exp(2 pi i m d / M)
        bool any = false;
        std::fill(kernel.begin(), kernel.end(), std::complex<double>{});
        for (int m = 0; m < M; ++m) {
            if (!symbol(m, n)) continue;
            any = true;
            for (int d = 0; d < M; ++d) {
                kernel[static_cast<std::size_t>(d)] += roots[static_cast<std::size_t>((static_cast<long>(m) * d) % M)];
            }
        }
        if (!any) continue;
        const long offset = static_cast<long>(n) * lattice.a;
        for (int j1 : support) {
            const int k = positive_mod(j1 + offset, L);
            const std::complex<double> left = w.values[j1];
            for (int j2 : support) {
                const int l = positive_mod(j2 + offset, L);
                A(k, l) += left * std::conj(w.values[j2]) * kernel[static_cast<std::size_t>(positive_mod(j1 - j2, M))];
            }
        }
    }
    ComplexMatrix hermitian = 0.5 * (A + A.adjoint());
    return hermitian;
}

ComplexMatrix frame_operator(const Window& w, const LatticeParams& lattice) {
    lattice.validate();
    return multiplier_matrix(BinaryMask(lattice.M, lattice.time_shifts(), true), w, lattice);
}

Window tight_window(const Window& w, const LatticeParams& lattice) {
    const ComplexMatrix S = frame_operator(w, lattice);
    const int M = lattice.M;
    const int blocks_per_residue = lattice.a;  // L / M

    // S only couples indices congruent mod M, so S^{-1/2} acts block by block.
    std::vector<Eigen::SelfAdjointEigenSolver<ComplexMatrix>> solvers;
    solvers.reserve(static_cast<std::size_t>(M));
    double largest = 0.0;
    double smallest = std::numeric_limits<double>::infinity();
    for (int r = 0; r < M; ++r) {
        ComplexMatrix block(blocks_per_residue, blocks_per_residue);
        for (int q = 0; q < blocks_per_residue; ++q) {
            for (int p = 0; p < blocks_per_residue; ++p) block(q, p) = S(r + q * M, r + p * M);
        }
        solvers.emplace_back(block);
        if (solvers.back().info() != Eigen::Success) throw NumericalError("frame operator block decomposition failed");
        largest = std::max(largest, solvers.back().eigenvalues().maxCoeff());
        smallest = std::min(smallest, solvers.back().eigenvalues().minCoeff());
    }
    if (!(smallest > 1e-10 * largest)) {
        throw NumericalError("window does not generate a frame on this lattice (frame bounds " + std::to_string(smallest) +
                             ", " + std::to_string(largest) + ")");
    }

    Window tight = w;
    tight.tight = true;
    for (int r = 0; r < M; ++r) {
        const auto& solver = solvers[static_cast<std::size_t>(r)];
        ComplexVector local(blocks_per_residue);
        for (int q = 0; q < blocks_per_residue; ++q) local[q] = w.values[r + q * M];
        const Eigen::VectorXd inv_sqrt = solver.eigenvalues().cwiseSqrt().cwiseInverse();
        const ComplexVector mapped =
            solver.eigenvectors() * (inv_sqrt.cast<std::complex<double>>().asDiagonal() * (solver.eigenvectors().adjoint() * local));
        for (int q = 0; q < blocks_per_residue; ++q) tight.values[r + q * M] = mapped[q];
    }
    return tight;
}

FrameMultiplier frame_multiplier(const BinaryMask& symbol, const Window& w, const LatticeParams& lattice, bool normalize) {
    FrameMultiplier result;
    result.lattice = lattice;
    result.symbol = symbol;
    result.normalized = normalize;
    result.window = normalize ? tight_window(w, lattice) : w;
    result.matrix = multiplier_matrix(symbol, result.window, lattice);
    return result;
}

}  // namespace plunge
