#pragma once

#include <array>
#include <vector>

#include "ringcoul/model.hpp"

namespace ringcoul::grid {

// Density on the x = 0 plane (yoz), rescaled so the maximum is exactly 100,
// with the contour levels {10, 20, ..., 100}. Values are evaluated
// analytically on the plane, never interpolated from a 3D block, so nodal
// lines stay exact.
struct ContourSlice {
    model::QuantumState state;
    int n_points = 81;
    double half_extent = 0.0;
    std::vector<double> values;  // row-major, y fastest within each z row
    std::array<double, 10> levels{10, 20, 30, 40, 50, 60, 70, 80, 90, 100};

    double spacing() const { return 2.0 * half_extent / (n_points - 1); }
    double coord(int idx) const { return -half_extent + spacing() * idx; }
    std::size_t index(int iy, int iz) const {
        return static_cast<std::size_t>(iy) + static_cast<std::size_t>(n_points) * iz;
    }
};

ContourSlice contour_slice(const model::QuantumState& qs, int n_points, double half_extent);

} // namespace ringcoul::grid
