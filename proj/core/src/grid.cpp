#include "ringcoul/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "ringcoul/quadrature.hpp"

namespace ringcoul::grid {

void GridSpec::validate() const {
    state.validate();
    if (n_points < 3 || n_points % 2 == 0)
        throw std::domain_error("grid n_points must be odd and >= 3 (got " +
                                std::to_string(n_points) + ")");
    if (!(half_extent > 0.0))
        throw std::domain_error("grid half_extent must be > 0");
}

DensityBlock sample_block(const GridSpec& spec, int workers) {
    spec.validate();
    if (workers < 1)
        throw std::domain_error("workers must be >= 1");

    const int n = spec.n_points;
    DensityBlock block;
    block.spec = spec;
    block.values.assign(static_cast<std::size_t>(n) * n * n, 0.0);

    const model::DensityEvaluator rho(spec.state);
    auto fill_slab = [&](int k_begin, int k_end) {
        for (int k = k_begin; k < k_end; ++k) {
            const double z = spec.coord(k);
            for (int j = 0; j < n; ++j) {
                const double y = spec.coord(j);
                std::size_t idx = block.index(0, j, k);
                for (int i = 0; i < n; ++i, ++idx)
                    block.values[idx] = rho(spec.coord(i), y, z);
            }
        }
    };

    const int nthreads = std::min(workers, n);
    if (nthreads == 1) {
        fill_slab(0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        const int per = (n + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            const int k0 = t * per;
            const int k1 = std::min(n, k0 + per);
            if (k0 < k1)
                pool.emplace_back(fill_slab, k0, k1);
        }
        for (auto& th : pool)
            th.join();
    }

    // serial reductions in index order keep the metadata bit-stable
    double mx = 0.0;
    double sum = 0.0, carry = 0.0;
    for (const double v : block.values) {
        mx = std::max(mx, v);
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    block.rho_max = mx;
    const double h = spec.spacing();
    block.riemann_mass = sum * h * h * h;
    if (!(block.riemann_mass > 0.0) || block.riemann_mass > 1.05)
        throw std::runtime_error("density block mass " + std::to_string(block.riemann_mass) +
                                 " outside (0, 1.05]");
    return block;
}

double auto_extent(const model::QuantumState& qs, double coverage) {
    qs.validate();
    if (!(coverage > 0.0) || !(coverage < 1.0))
        throw std::domain_error("coverage must lie in (0, 1)");

    const model::DensityEvaluator ev(qs);
    const auto& rule = quad::gauss_legendre(32);
    // radial mass on [0, L] by panels of width ~ n'/Z, enough to resolve
    // every oscillation of u^2
    auto mass_up_to = [&](double L) {
        const double panel = std::max(0.25, ev.quasi().nprime / qs.Z / 4.0);
        double total = 0.0;
        for (double a = 0.0; a < L; a += panel) {
            const double b = std::min(L, a + panel);
            total += quad::integrate([&](double r) { const double u = ev.radial(r); return u * u; },
                                     a, b, rule);
        }
        return total;
    };

    for (int k = -160; k <= 640; ++k) {
        const double L = std::exp2(static_cast<double>(k) / 32.0);
        if (mass_up_to(L) >= coverage)
            return L;
    }
    throw std::runtime_error("auto_extent: coverage not reached on the extent ladder");
}

IsoLevelSet iso_levels(const DensityBlock& block, const std::vector<double>& p_values) {
    if (p_values.empty())
        throw std::domain_error("iso_levels: empty p list");
    IsoLevelSet out;
    out.p_values = p_values;
    std::sort(out.p_values.begin(), out.p_values.end());
    out.p_values.erase(std::unique(out.p_values.begin(), out.p_values.end()),
                       out.p_values.end());
    out.levels.reserve(out.p_values.size());
    for (double p : out.p_values) {
        if (!(p > 0.0) || p > 1.0)
            throw std::domain_error("iso_levels: relative probability p must lie in (0, 1]");
        out.levels.push_back(p * block.rho_max);
    }
    return out;
}

namespace {

double mean_polar_fraction(const DensityBlock& block, double level) {
    const int n = block.spec.n_points;
    double acc = 0.0;
    std::size_t count = 0;
    for (int k = 0; k < n; ++k) {
        const double z = block.spec.coord(k);
        for (int j = 0; j < n; ++j) {
            const double y = block.spec.coord(j);
            for (int i = 0; i < n; ++i) {
                if (block.at(i, j, k) < level)
                    continue;
                const double x = block.spec.coord(i);
                const double r = std::sqrt(x * x + y * y + z * z);
                if (r == 0.0)
                    continue;
                acc += std::abs(z) / r;
                ++count;
            }
        }
    }
    if (count == 0)
        throw std::runtime_error("polar_drift: empty superlevel set");
    return acc / static_cast<double>(count);
}

} // namespace

std::pair<double, double> polar_drift(const DensityBlock& block, double p_low, double p_high) {
    if (!(p_low > 0.0) || !(p_high < 1.0) || !(p_low < p_high))
        throw std::domain_error("polar_drift: require 0 < p_low < p_high < 1");
    return {mean_polar_fraction(block, p_low * block.rho_max),
            mean_polar_fraction(block, p_high * block.rho_max)};
}

} // namespace ringcoul::grid
