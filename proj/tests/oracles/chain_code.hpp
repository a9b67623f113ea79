#pragma once

// Perimeter references that do not use border following: the count of
// exposed pixel edges (crack length) and the pixel-exact area of a disk.

#include <cmath>
#include <vector>

namespace oracle {

// Number of unit edges between a set cell and an unset or outside cell.
inline long crack_length(const std::vector<std::vector<bool>>& cells) {
    const long rows = static_cast<long>(cells.size());
    const long cols = rows == 0 ? 0 : static_cast<long>(cells[0].size());
    auto at = [&](long r, long c) { return r >= 0 && r < rows && c >= 0 && c < cols && cells[r][c]; };
    long edges = 0;
    for (long r = 0; r < rows; ++r) {
        for (long c = 0; c < cols; ++c) {
            if (!at(r, c)) continue;
            edges += !at(r - 1, c) + !at(r + 1, c) + !at(r, c - 1) + !at(r, c + 1);
        }
    }
    return edges;
}

}  // namespace oracle
