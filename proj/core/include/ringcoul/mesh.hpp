#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ringcoul/grid.hpp"

namespace ringcoul::grid {

struct TriangleMesh {
    std::vector<std::array<double, 3>> vertices;       // a0 units
    std::vector<std::array<std::int32_t, 3>> triangles;  // 0-based indices
    // true when the superlevel set reaches the box surface, i.e. the
    // extracted surface is clipped open at the box rather than closed
    bool touches_boundary = false;
};

// Isosurface of the block at `level` (0 < level < rho_max), linear
// interpolation along cell edges. Cells are triangulated through the
// six-tetrahedron split with a shared main diagonal, which makes closed
// surfaces watertight without an ambiguity decider; topology at saddle
// levels follows the split, not the trilinear field.
//
// With cut = true, cells whose centers lie in the open octant
// {x<0, y<0, z>0} are dropped before triangulation and the exposed
// boundary is left open (no capping).
//
// Superlevel classification is closed (value >= level) and triangles of
// area <= 1e-12 are not emitted.
TriangleMesh marching_cubes(const DensityBlock& block, double level, bool cut = false);

} // namespace ringcoul::grid
