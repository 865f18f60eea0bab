#include "ringcoul/slice.hpp"

#include <stdexcept>

namespace ringcoul::grid {

ContourSlice contour_slice(const model::QuantumState& qs, int n_points, double half_extent) {
    qs.validate();
    if (n_points < 2)
        throw std::domain_error("contour_slice: n_points must be >= 2");
    if (!(half_extent > 0.0))
        throw std::domain_error("contour_slice: half_extent must be > 0");

    ContourSlice slice;
    slice.state = qs;
    slice.n_points = n_points;
    slice.half_extent = half_extent;
    slice.values.resize(static_cast<std::size_t>(n_points) * n_points);

    const model::DensityEvaluator rho(qs);
    double mx = 0.0;
    for (int iz = 0; iz < n_points; ++iz) {
        const double z = slice.coord(iz);
        for (int iy = 0; iy < n_points; ++iy) {
            const double v = rho(0.0, slice.coord(iy), z);
            slice.values[slice.index(iy, iz)] = v;
            if (v > mx)
                mx = v;
        }
    }
    if (!(mx > 0.0))
        throw std::runtime_error("contour_slice: density vanished on the whole plane");
    for (double& v : slice.values)
        v = v / mx * 100.0;  // the max cell lands on exactly 100
    return slice;
}

} // namespace ringcoul::grid
