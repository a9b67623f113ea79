#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace plunge {

/// Boolean symbol on the lattice grid. Row index is the frequency channel m,
/// column index is the time shift n.
class BinaryMask {
public:
    BinaryMask() = default;
    BinaryMask(int rows, int cols, bool value = false);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    bool operator()(int r, int c) const { return cells_[index(r, c)] != 0; }
    void set(int r, int c, bool value) { cells_[index(r, c)] = value ? 1 : 0; }

    /// Number of true cells.
    std::size_t count() const;

    bool operator==(const BinaryMask&) const = default;

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c); }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> cells_;
};

}  // namespace plunge
