#include "plunge/binary_mask.hpp"

#include <algorithm>

#include "plunge/errors.hpp"

namespace plunge {

BinaryMask::BinaryMask(int rows, int cols, bool value) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw ValidationError("mask dimensions must be positive");
    cells_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), value ? 1 : 0);
}

std::size_t BinaryMask::count() const {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

}  // namespace plunge
