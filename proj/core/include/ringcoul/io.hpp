#pragma once

#include <filesystem>
#include <stdexcept>

#include "ringcoul/expand.hpp"
#include "ringcoul/mesh.hpp"
#include "ringcoul/slice.hpp"

// File formats:
//  - density block: raw little-endian IEEE f64, x-fastest order, plus a JSON
//    sidecar {n_points, half_extent, state{n,l,m,b,Z}, rho_max,
//    riemann_mass, version}
//  - mesh: Wavefront OBJ, v/f records only, 1-based indices
//  - contour slice: CSV `y,z,value_normalized` (y fastest), optional PGM
//    (P2, maxval 100)
//  - expansion: CSV `l,m,a_lm,a_lm_squared` plus a comment footer with the
//    completeness defect and node count
// All writers emit byte-identical output for identical inputs.

namespace ringcoul::io {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_block(const grid::DensityBlock& block, const std::filesystem::path& f64_path,
                 const std::filesystem::path& json_path);
grid::DensityBlock read_block(const std::filesystem::path& f64_path,
                              const std::filesystem::path& json_path);

void write_obj(const grid::TriangleMesh& mesh, const std::filesystem::path& path);

void write_slice_csv(const grid::ContourSlice& slice, const std::filesystem::path& path,
                     bool quadrant1 = false);
void write_slice_pgm(const grid::ContourSlice& slice, const std::filesystem::path& path,
                     bool quadrant1 = false);

void write_expansion_csv(const expand::ExpansionTable& table, const std::filesystem::path& path);

} // namespace ringcoul::io
