#include "ringcoul/io.hpp"

#include <bit>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "ringcoul/version.hpp"

static_assert(std::endian::native == std::endian::little,
              "block files are little-endian; big-endian hosts unsupported");

namespace ringcoul::io {

namespace {

std::ofstream open_out(const std::filesystem::path& path, std::ios_base::openmode mode) {
    std::ofstream out(path, mode);
    if (!out)
        throw IoError("cannot open for writing: " + path.string());
    return out;
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

} // namespace

void write_block(const grid::DensityBlock& block, const std::filesystem::path& f64_path,
                 const std::filesystem::path& json_path) {
    {
        auto out = open_out(f64_path, std::ios::binary);
        out.write(reinterpret_cast<const char*>(block.values.data()),
                  static_cast<std::streamsize>(block.values.size() * sizeof(double)));
        if (!out)
            throw IoError("short write: " + f64_path.string());
    }
    nlohmann::ordered_json meta;
    meta["n_points"] = block.spec.n_points;
    meta["half_extent"] = block.spec.half_extent;
    meta["state"] = {{"n", block.spec.state.n}, {"l", block.spec.state.l},
                     {"m", block.spec.state.m}, {"b", block.spec.state.b},
                     {"Z", block.spec.state.Z}};
    meta["rho_max"] = block.rho_max;
    meta["riemann_mass"] = block.riemann_mass;
    meta["version"] = RINGCOUL_VERSION;
    auto out = open_out(json_path, std::ios::out);
    out << meta.dump(2) << '\n';
}

grid::DensityBlock read_block(const std::filesystem::path& f64_path,
                              const std::filesystem::path& json_path) {
    std::ifstream js(json_path);
    if (!js)
        throw IoError("cannot open sidecar: " + json_path.string());
    nlohmann::json meta;
    try {
        js >> meta;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("bad sidecar " + json_path.string() + ": " + e.what());
    }
    grid::DensityBlock block;
    try {
        block.spec.n_points = meta.at("n_points").get<int>();
        block.spec.half_extent = meta.at("half_extent").get<double>();
        const auto& st = meta.at("state");
        block.spec.state = {st.at("n").get<int>(), st.at("l").get<int>(), st.at("m").get<int>(),
                            st.at("b").get<double>(), st.at("Z").get<double>()};
        block.rho_max = meta.at("rho_max").get<double>();
        block.riemann_mass = meta.at("riemann_mass").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw IoError("sidecar missing field in " + json_path.string() + ": " + e.what());
    }
    block.spec.validate();
    const auto n = static_cast<std::size_t>(block.spec.n_points);
    const std::size_t count = n * n * n;
    std::ifstream raw(f64_path, std::ios::binary);
    if (!raw)
        throw IoError("cannot open block: " + f64_path.string());
    block.values.resize(count);
    raw.read(reinterpret_cast<char*>(block.values.data()),
             static_cast<std::streamsize>(count * sizeof(double)));
    if (raw.gcount() != static_cast<std::streamsize>(count * sizeof(double)))
        throw IoError("block truncated: " + f64_path.string());
    return block;
}

void write_obj(const grid::TriangleMesh& mesh, const std::filesystem::path& path) {
    auto out = open_out(path, std::ios::out);
    for (const auto& v : mesh.vertices)
        out << "v " << fmt("%.10g", v[0]) << ' ' << fmt("%.10g", v[1]) << ' '
            << fmt("%.10g", v[2]) << '\n';
    for (const auto& t : mesh.triangles)
        out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    if (!out)
        throw IoError("short write: " + path.string());
}

void write_slice_csv(const grid::ContourSlice& slice, const std::filesystem::path& path,
                     bool quadrant1) {
    auto out = open_out(path, std::ios::out);
    out << "y,z,value_normalized\n";
    for (int iz = 0; iz < slice.n_points; ++iz) {
        const double z = slice.coord(iz);
        if (quadrant1 && z < 0.0)
            continue;
        for (int iy = 0; iy < slice.n_points; ++iy) {
            const double y = slice.coord(iy);
            if (quadrant1 && y < 0.0)
                continue;
            out << fmt("%.10g", y) << ',' << fmt("%.10g", z) << ','
                << fmt("%.10g", slice.values[slice.index(iy, iz)]) << '\n';
        }
    }
    if (!out)
        throw IoError("short write: " + path.string());
}

void write_slice_pgm(const grid::ContourSlice& slice, const std::filesystem::path& path,
                     bool quadrant1) {
    const int n = slice.n_points;
    const int lo = quadrant1 ? n / 2 : 0;  // first index with coord >= 0
    const int width = n - lo;
    auto out = open_out(path, std::ios::out);
    out << "P2\n" << width << ' ' << width << "\n100\n";
    for (int iz = n - 1; iz >= lo; --iz) {  // +z up
        for (int iy = lo; iy < n; ++iy) {
            const int v = static_cast<int>(slice.values[slice.index(iy, iz)] + 0.5);
            out << v << (iy + 1 < n ? ' ' : '\n');
        }
    }
    if (!out)
        throw IoError("short write: " + path.string());
}

void write_expansion_csv(const expand::ExpansionTable& table, const std::filesystem::path& path) {
    auto out = open_out(path, std::ios::out);
    out << "l,m,a_lm,a_lm_squared\n";
    for (const auto& e : table.entries)
        out << e.l << ',' << table.state.m << ',' << fmt("%.17g", e.a_lm) << ','
            << fmt("%.17g", e.a_lm * e.a_lm) << '\n';
    out << "# completeness_defect=" << fmt("%.17g", table.completeness_defect)
        << " quad_nodes=" << table.quad_nodes << " converged=" << (table.converged ? 1 : 0)
        << '\n';
    if (!out)
        throw IoError("short write: " + path.string());
}

} // namespace ringcoul::io
