#include "ringcoul/mesh.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace ringcoul::grid {

namespace {

// corner bit layout: bit0 = +x, bit1 = +y, bit2 = +z
constexpr int kTets[6][4] = {
    {0, 1, 3, 7}, {0, 1, 5, 7}, {0, 2, 3, 7},
    {0, 2, 6, 7}, {0, 4, 5, 7}, {0, 4, 6, 7},
};

struct Builder {
    const DensityBlock& block;
    double level;
    TriangleMesh mesh;
    std::unordered_map<std::uint64_t, std::int32_t> edge_vertex;

    std::uint64_t point_id(int i, int j, int k) const {
        const auto n = static_cast<std::uint64_t>(block.spec.n_points);
        return static_cast<std::uint64_t>(i) + n * (static_cast<std::uint64_t>(j) + n * k);
    }

    std::int32_t vertex_on_edge(const std::array<int, 3>& a, const std::array<int, 3>& b,
                                double va, double vb) {
        std::uint64_t ia = point_id(a[0], a[1], a[2]);
        std::uint64_t ib = point_id(b[0], b[1], b[2]);
        const bool swap = ia > ib;
        const std::uint64_t key = swap ? (ib << 32 | ia) : (ia << 32 | ib);
        auto it = edge_vertex.find(key);
        if (it != edge_vertex.end())
            return it->second;
        // interpolate from the canonical (lower-id) endpoint for bit stability
        const std::array<int, 3>& lo = swap ? b : a;
        const std::array<int, 3>& hi = swap ? a : b;
        const double vlo = swap ? vb : va;
        const double vhi = swap ? va : vb;
        const double t = (level - vlo) / (vhi - vlo);
        std::array<double, 3> pos;
        for (int d = 0; d < 3; ++d) {
            const double clo = block.spec.coord(lo[d]);
            const double chi = block.spec.coord(hi[d]);
            pos[d] = clo + t * (chi - clo);
        }
        const auto idx = static_cast<std::int32_t>(mesh.vertices.size());
        mesh.vertices.push_back(pos);
        edge_vertex.emplace(key, idx);
        return idx;
    }

    void emit(std::int32_t v0, std::int32_t v1, std::int32_t v2) {
        if (v0 == v1 || v1 == v2 || v0 == v2)
            return;
        const auto& a = mesh.vertices[v0];
        const auto& b = mesh.vertices[v1];
        const auto& c = mesh.vertices[v2];
        const double ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
        const double vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
        const double nx = uy * vz - uz * vy;
        const double ny = uz * vx - ux * vz;
        const double nz = ux * vy - uy * vx;
        if (0.5 * std::sqrt(nx * nx + ny * ny + nz * nz) <= 1e-12)
            return;
        mesh.triangles.push_back({v0, v1, v2});
    }

    void do_tet(const std::array<int, 3> (&corner)[8], const double (&value)[8], const int (&tet)[4]) {
        bool in[4];
        int count = 0;
        for (int t = 0; t < 4; ++t) {
            in[t] = value[tet[t]] >= level;
            count += in[t] ? 1 : 0;
        }
        if (count == 0 || count == 4)
            return;
        int ins[4], outs[4];
        int ni = 0, no = 0;
        for (int t = 0; t < 4; ++t)
            (in[t] ? ins[ni++] : outs[no++]) = tet[t];
        auto mk = [&](int p, int q) {
            return vertex_on_edge(corner[p], corner[q], value[p], value[q]);
        };
        if (count == 1) {
            emit(mk(ins[0], outs[0]), mk(ins[0], outs[1]), mk(ins[0], outs[2]));
        } else if (count == 3) {
            emit(mk(outs[0], ins[0]), mk(outs[0], ins[1]), mk(outs[0], ins[2]));
        } else {
            // quad cycle: (a,c) (a,d) (b,d) (b,c) for in {a,b}, out {c,d}
            const std::int32_t e0 = mk(ins[0], outs[0]);
            const std::int32_t e1 = mk(ins[0], outs[1]);
            const std::int32_t e2 = mk(ins[1], outs[1]);
            const std::int32_t e3 = mk(ins[1], outs[0]);
            emit(e0, e1, e2);
            emit(e0, e2, e3);
        }
    }
};

} // namespace

TriangleMesh marching_cubes(const DensityBlock& block, double level, bool cut) {
    if (!(level > 0.0) || !(level < block.rho_max))
        throw std::domain_error("marching_cubes: level must lie in (0, rho_max)");
    const int n = block.spec.n_points;
    Builder builder{block, level, {}, {}};

    for (int k = 0; k < n && !builder.mesh.touches_boundary; ++k)
        for (int j = 0; j < n && !builder.mesh.touches_boundary; ++j)
            for (int i = 0; i < n; ++i)
                if ((i == 0 || i == n - 1 || j == 0 || j == n - 1 || k == 0 || k == n - 1) &&
                    block.at(i, j, k) >= level) {
                    builder.mesh.touches_boundary = true;
                    break;
                }

    for (int k = 0; k + 1 < n; ++k) {
        for (int j = 0; j + 1 < n; ++j) {
            for (int i = 0; i + 1 < n; ++i) {
                if (cut) {
                    const double cx = block.spec.coord(i) + 0.5 * block.spec.spacing();
                    const double cy = block.spec.coord(j) + 0.5 * block.spec.spacing();
                    const double cz = block.spec.coord(k) + 0.5 * block.spec.spacing();
                    if (cx < 0.0 && cy < 0.0 && cz > 0.0)
                        continue;
                }
                std::array<int, 3> corner[8];
                double value[8];
                for (int c = 0; c < 8; ++c) {
                    corner[c] = {i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1)};
                    value[c] = block.at(corner[c][0], corner[c][1], corner[c][2]);
                }
                for (const auto& tet : kTets)
                    builder.do_tet(corner, value, tet);
            }
        }
    }
    return std::move(builder.mesh);
}

} // namespace ringcoul::grid
