#pragma once

#include <compare>
#include <cstdint>

namespace gbhard {

// Discrete grid coordinate: col grows rightward, row grows downward (row 0 is
// the top of the map).
struct Cell {
    int col = 0;
    int row = 0;

    auto operator<=>(const Cell&) const = default;
};

}  // namespace gbhard
