#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ringcoul/io.hpp"

using namespace ringcoul;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    auto dir = fs::temp_directory_path() / "ringcoul_io_test";
    fs::create_directories(dir);
    return dir;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("density block round trip preserves every byte of the payload") {
    const grid::GridSpec spec{{2, 1, 1, 0.5, 1.0}, 21, 12.0};
    const auto block = grid::sample_block(spec, 2);
    const auto dir = temp_dir();
    io::write_block(block, dir / "b.f64", dir / "b.json");

    const auto loaded = io::read_block(dir / "b.f64", dir / "b.json");
    CHECK(loaded.spec.n_points == 21);
    CHECK(loaded.spec.half_extent == 12.0);
    CHECK(loaded.spec.state.n == 2);
    CHECK(loaded.spec.state.b == 0.5);
    CHECK(loaded.rho_max == block.rho_max);
    CHECK(loaded.riemann_mass == block.riemann_mass);
    REQUIRE(loaded.values.size() == block.values.size());
    CHECK(std::memcmp(loaded.values.data(), block.values.data(),
                      block.values.size() * sizeof(double)) == 0);

    const std::string sidecar = read_file(dir / "b.json");
    for (const char* key : {"n_points", "half_extent", "state", "rho_max", "riemann_mass", "version"})
        CHECK(sidecar.find(key) != std::string::npos);
    // payload is raw f64, x fastest: file size must be exactly N^3 * 8
    CHECK(fs::file_size(dir / "b.f64") == 21u * 21u * 21u * 8u);

    CHECK_THROWS_AS(io::read_block(dir / "missing.f64", dir / "b.json"), io::IoError);
    CHECK_THROWS_AS(io::read_block(dir / "b.f64", dir / "missing.json"), io::IoError);
}

TEST_CASE("OBJ writer emits v/f records with 1-based indices") {
    grid::TriangleMesh mesh;
    mesh.vertices = {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.5}};
    mesh.triangles = {{0, 1, 2}};
    const auto dir = temp_dir();
    io::write_obj(mesh, dir / "m.obj");
    const std::string text = read_file(dir / "m.obj");
    CHECK(text == "v 0 0 0\nv 1 0 0\nv 0 1 0.5\nf 1 2 3\n");
}

TEST_CASE("slice CSV layout: header, y-fastest rows, quadrant restriction") {
    const auto slice = grid::contour_slice({1, 0, 0, 0.0, 1.0}, 5, 2.0);
    const auto dir = temp_dir();
    io::write_slice_csv(slice, dir / "s.csv", false);
    std::ifstream in(dir / "s.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == "y,z,value_normalized");
    std::getline(in, line);
    CHECK(line.rfind("-2,-2,", 0) == 0);
    std::getline(in, line);
    CHECK(line.rfind("-1,-2,", 0) == 0);  // y advances first
    std::size_t rows = 2;
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == 25);

    io::write_slice_csv(slice, dir / "q.csv", true);
    std::ifstream qin(dir / "q.csv");
    std::getline(qin, line);
    rows = 0;
    while (std::getline(qin, line)) {
        CHECK(line[0] != '-');
        ++rows;
    }
    CHECK(rows == 9);  // y,z >= 0 on the 5-point grid
}

TEST_CASE("slice PGM is a valid P2 with maxval 100") {
    const auto slice = grid::contour_slice({1, 0, 0, 0.0, 1.0}, 81, 4.0);
    const auto dir = temp_dir();
    io::write_slice_pgm(slice, dir / "s.pgm", false);
    std::ifstream in(dir / "s.pgm");
    std::string magic;
    int w = 0, h = 0, maxval = 0;
    in >> magic >> w >> h >> maxval;
    CHECK(magic == "P2");
    CHECK(w == 81);
    CHECK(h == 81);
    CHECK(maxval == 100);
    int v = 0, biggest = 0, count = 0;
    while (in >> v) {
        CHECK(v >= 0);
        CHECK(v <= 100);
        biggest = std::max(biggest, v);
        ++count;
    }
    CHECK(count == 81 * 81);
    CHECK(biggest == 100);

    io::write_slice_pgm(slice, dir / "q.pgm", true);
    std::ifstream qin(dir / "q.pgm");
    qin >> magic >> w >> h >> maxval;
    CHECK(w == 41);
    CHECK(h == 41);
}

TEST_CASE("expansion CSV: rows per retained l and a defect footer") {
    const auto tab = expand::table(expand::AngularState{1, 2, 0.5}, 13);
    const auto dir = temp_dir();
    io::write_expansion_csv(tab, dir / "e.csv");
    std::ifstream in(dir / "e.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == "l,m,a_lm,a_lm_squared");
    std::size_t rows = 0;
    std::string footer;
    while (std::getline(in, line)) {
        if (line.rfind("#", 0) == 0)
            footer = line;
        else
            ++rows;
    }
    CHECK(rows == tab.entries.size());
    CHECK(footer.find("completeness_defect=") != std::string::npos);
    CHECK(footer.find("quad_nodes=") != std::string::npos);
}

TEST_CASE("writers are deterministic") {
    const auto slice = grid::contour_slice({3, 2, 1, 0.5, 1.0}, 41, 20.0);
    const auto dir = temp_dir();
    io::write_slice_csv(slice, dir / "d1.csv", false);
    io::write_slice_csv(slice, dir / "d2.csv", false);
    CHECK(read_file(dir / "d1.csv") == read_file(dir / "d2.csv"));

    const grid::GridSpec spec{{2, 1, 0, 0.0, 1.0}, 21, 10.0};
    const auto block = grid::sample_block(spec);
    io::write_block(block, dir / "w1.f64", dir / "w1.json");
    io::write_block(block, dir / "w2.f64", dir / "w2.json");
    CHECK(read_file(dir / "w1.f64") == read_file(dir / "w2.f64"));
    CHECK(read_file(dir / "w1.json") == read_file(dir / "w2.json"));
}
