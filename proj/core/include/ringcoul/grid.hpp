#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ringcoul/model.hpp"

// Cartesian sampling of the density and the derived level-set quantities.

namespace ringcoul::grid {

struct GridSpec {
    model::QuantumState state;
    int n_points = 81;         // per axis, odd so the origin is a sample
    double half_extent = 0.0;  // box is [-L, L]^3 in a0

    void validate() const;
    double spacing() const { return 2.0 * half_extent / (n_points - 1); }
    double coord(int idx) const { return -half_extent + spacing() * idx; }
};

struct DensityBlock {
    GridSpec spec;
    std::vector<double> values;  // x fastest, then y, then z
    double rho_max = 0.0;
    double riemann_mass = 0.0;   // sum(rho) * spacing^3

    std::size_t index(int i, int j, int k) const {
        const auto n = static_cast<std::size_t>(spec.n_points);
        return static_cast<std::size_t>(i) + n * (static_cast<std::size_t>(j) + n * k);
    }
    double at(int i, int j, int k) const { return values[index(i, j, k)]; }
};

// Fills the block slab-by-slab in k. The partition across workers never
// changes a value (each sample is an independent pure evaluation) and the
// max/mass reductions run in a fixed serial order, so output is
// byte-identical for any worker count.
DensityBlock sample_block(const GridSpec& spec, int workers = 1);

// Smallest rung of the geometric ladder L = 2^{k/32} whose radial mass
// int_0^L u^2 dr reaches `coverage`.
double auto_extent(const model::QuantumState& qs, double coverage = 0.99);

struct IsoLevelSet {
    std::vector<double> p_values;  // in (0, 1]; 1 is the degenerate top
    std::vector<double> levels;    // p_i * rho_max
};

IsoLevelSet iso_levels(const DensityBlock& block, const std::vector<double>& p_values);

// Mean |z|/r over grid samples with rho >= p * rho_max, for p_low and
// p_high. The origin sample is excluded (|z|/r undefined there); an empty
// sample set is an error.
std::pair<double, double> polar_drift(const DensityBlock& block, double p_low, double p_high);

} // namespace ringcoul::grid
