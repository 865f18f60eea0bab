// Command-line surface: density block export, isosurface meshes, yoz
// contour slices, harmonic-expansion tables, and the invariant check suite.
//
// Exit codes: 0 success, 2 validation error, 3 numerical non-convergence,
// 4 I/O error. Every run writes its resolved configuration as config.json
// next to the outputs; re-running with --config <that file> reproduces the
// outputs byte for byte.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringcoul/grid.hpp"
#include "ringcoul/io.hpp"
#include "ringcoul/mesh.hpp"
#include "ringcoul/slice.hpp"
#include "ringcoul/expand.hpp"
#include "ringcoul/version.hpp"
#include "check_suite.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace ringcoul;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitIo = 4;

struct RunConfig {
    std::string subcommand;
    int n = 1, l = 0, m = 0;
    double b = 0.0, Z = 1.0;
    int grid_n = 81;
    double extent = 0.0;  // 0 selects auto_extent(coverage)
    double coverage = 0.99;
    std::vector<double> p_values;
    std::vector<double> levels;  // absolute density levels (mesh)
    bool cut = false;
    bool quadrant1 = false;
    int workers = 1;
    std::string out = ".";
    std::vector<std::string> format = {"csv"};
    int ntheta = 0;
    int lmax = -1;
    std::vector<double> b_list;
    std::string roster;  // path to a roster JSON; empty = default roster
    double perturb = 1.0;
};

model::QuantumState state_of(const RunConfig& cfg) {
    return {cfg.n, cfg.l, cfg.m, cfg.b, cfg.Z};
}

ordered_json to_json(const RunConfig& cfg) {
    ordered_json j;
    j["version"] = RINGCOUL_VERSION;
    j["subcommand"] = cfg.subcommand;
    j["n"] = cfg.n;
    j["l"] = cfg.l;
    j["m"] = cfg.m;
    j["b"] = cfg.b;
    j["Z"] = cfg.Z;
    j["grid_n"] = cfg.grid_n;
    j["extent"] = cfg.extent;
    j["coverage"] = cfg.coverage;
    j["p_values"] = cfg.p_values;
    j["levels"] = cfg.levels;
    j["cut"] = cfg.cut;
    j["quadrant1"] = cfg.quadrant1;
    j["workers"] = cfg.workers;
    j["out"] = cfg.out;
    j["format"] = cfg.format;
    j["ntheta"] = cfg.ntheta;
    j["lmax"] = cfg.lmax;
    j["b_list"] = cfg.b_list;
    j["roster"] = cfg.roster;
    j["perturb"] = cfg.perturb;
    return j;
}

void load_config_file(const std::string& path, RunConfig& cfg, const std::string& subcommand) {
    std::ifstream in(path);
    if (!in)
        throw io::IoError("cannot open config: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::domain_error("config parse error in " + path + ": " + e.what());
    }
    static const std::set<std::string> known = {
        "version", "subcommand", "n", "l", "m", "b", "Z", "grid_n", "extent",
        "coverage", "p_values", "levels", "cut", "quadrant1", "workers", "out",
        "format", "ntheta", "lmax", "b_list", "roster", "perturb"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            throw std::domain_error("config " + path + " has unknown key '" + it.key() + "'");
    try {
        if (j.contains("subcommand") && j["subcommand"].get<std::string>() != subcommand)
            throw std::domain_error("config " + path + " was written for subcommand '" +
                                    j["subcommand"].get<std::string>() + "'");
        auto get = [&](const char* key, auto& field) {
            if (j.contains(key))
                field = j[key].get<std::decay_t<decltype(field)>>();
        };
        get("n", cfg.n); get("l", cfg.l); get("m", cfg.m);
        get("b", cfg.b); get("Z", cfg.Z);
        get("grid_n", cfg.grid_n); get("extent", cfg.extent); get("coverage", cfg.coverage);
        get("p_values", cfg.p_values); get("levels", cfg.levels);
        get("cut", cfg.cut); get("quadrant1", cfg.quadrant1);
        get("workers", cfg.workers); get("out", cfg.out); get("format", cfg.format);
        get("ntheta", cfg.ntheta); get("lmax", cfg.lmax); get("b_list", cfg.b_list);
        get("roster", cfg.roster); get("perturb", cfg.perturb);
    } catch (const nlohmann::json::exception& e) {
        throw std::domain_error("config " + path + " field type error: " + e.what());
    }
}

fs::path resolve_out_dir(RunConfig& cfg) {
    if (const char* env = std::getenv("RINGCOUL_OUT"); env != nullptr && *env != '\0')
        cfg.out = env;  // environment override wins, by contract
    fs::path dir(cfg.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw io::IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    return dir;
}

void write_config(const RunConfig& cfg, const fs::path& dir) {
    std::ofstream out(dir / "config.json");
    if (!out)
        throw io::IoError("cannot write config.json in " + dir.string());
    out << to_json(cfg).dump(2) << '\n';
}

double resolve_extent(const RunConfig& cfg, const model::QuantumState& qs) {
    if (cfg.extent > 0.0)
        return cfg.extent;
    return grid::auto_extent(qs, cfg.coverage);
}

std::string format_double_token(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

// ------------------------------------------------------------------ density

int cmd_density(RunConfig cfg) {
    const auto qs = state_of(cfg);
    qs.validate();
    const fs::path dir = resolve_out_dir(cfg);
    const double L = resolve_extent(cfg, qs);
    const grid::GridSpec spec{qs, cfg.grid_n, L};
    const grid::DensityBlock block = grid::sample_block(spec, cfg.workers);
    io::write_block(block, dir / "density.f64", dir / "density.json");
    write_config(cfg, dir);
    std::cout << "density: N=" << spec.n_points << " L=" << L
              << " rho_max=" << block.rho_max
              << " riemann_mass=" << block.riemann_mass << '\n';
    return kExitOk;
}

// --------------------------------------------------------------------- mesh

int cmd_mesh(RunConfig cfg) {
    const auto qs = state_of(cfg);
    qs.validate();
    if (cfg.p_values.empty() && cfg.levels.empty())
        cfg.p_values = {0.5};
    const fs::path dir = resolve_out_dir(cfg);
    const double L = resolve_extent(cfg, qs);
    const grid::GridSpec spec{qs, cfg.grid_n, L};
    const grid::DensityBlock block = grid::sample_block(spec, cfg.workers);

    if (!cfg.p_values.empty()) {
        const grid::IsoLevelSet set = grid::iso_levels(block, cfg.p_values);
        for (std::size_t i = 0; i < set.levels.size(); ++i) {
            const double p = set.p_values[i];
            if (p >= 1.0)
                throw std::domain_error("mesh: p = 1 is a degenerate level with no surface");
            const auto mesh = grid::marching_cubes(block, set.levels[i], cfg.cut);
            const fs::path path = dir / ("mesh_p" + format_double_token(100.0 * p) + ".obj");
            io::write_obj(mesh, path);
            std::cout << "mesh: p=" << p << " level=" << set.levels[i]
                      << " vertices=" << mesh.vertices.size()
                      << " triangles=" << mesh.triangles.size() << " -> " << path.string() << '\n';
        }
    }
    for (double level : cfg.levels) {
        const auto mesh = grid::marching_cubes(block, level, cfg.cut);
        const fs::path path = dir / ("mesh_level" + format_double_token(level) + ".obj");
        io::write_obj(mesh, path);
        std::cout << "mesh: level=" << level << " vertices=" << mesh.vertices.size()
                  << " triangles=" << mesh.triangles.size() << " -> " << path.string() << '\n';
    }
    write_config(cfg, dir);
    return kExitOk;
}

// -------------------------------------------------------------------- slice

int cmd_slice(RunConfig cfg) {
    const auto qs = state_of(cfg);
    qs.validate();
    for (const auto& f : cfg.format)
        if (f != "csv" && f != "pgm")
            throw std::domain_error("slice: unknown format '" + f + "' (csv, pgm)");
    const fs::path dir = resolve_out_dir(cfg);
    const double L = resolve_extent(cfg, qs);
    const grid::ContourSlice slice = grid::contour_slice(qs, cfg.grid_n, L);
    for (const auto& f : cfg.format) {
        if (f == "csv")
            io::write_slice_csv(slice, dir / "slice.csv", cfg.quadrant1);
        else
            io::write_slice_pgm(slice, dir / "slice.pgm", cfg.quadrant1);
    }
    write_config(cfg, dir);
    std::cout << "slice: N=" << slice.n_points << " L=" << L
              << " levels=10..100 quadrant1=" << (cfg.quadrant1 ? 1 : 0) << '\n';
    return kExitOk;
}

// ------------------------------------------------------------------- expand

int cmd_expand(RunConfig cfg) {
    if (cfg.b_list.empty())
        cfg.b_list = {cfg.b};
    const fs::path dir = resolve_out_dir(cfg);
    bool all_converged = true;
    for (double b : cfg.b_list) {
        const expand::AngularState st{cfg.m, cfg.ntheta, b};
        const expand::ExpansionTable tab = expand::table(st, cfg.lmax);
        const fs::path path = dir / ("expand_b" + format_double_token(b) + ".csv");
        io::write_expansion_csv(tab, path);
        all_converged = all_converged && tab.converged;
        std::cout << "expand: m=" << cfg.m << " ntheta=" << cfg.ntheta << " b=" << b
                  << " entries=" << tab.entries.size()
                  << " defect=" << tab.completeness_defect
                  << " nodes=" << tab.quad_nodes
                  << (tab.converged ? "" : " NOT-CONVERGED") << '\n';
    }
    write_config(cfg, dir);
    if (!all_converged) {
        std::cerr << "expand: quadrature did not converge at the node cap\n";
        return kExitNonConvergence;
    }
    return kExitOk;
}

// -------------------------------------------------------------------- check

std::vector<model::QuantumState> load_roster(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io::IoError("cannot open roster: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::domain_error("roster parse error: " + std::string(e.what()));
    }
    if (!j.is_array())
        throw std::domain_error("roster must be a JSON array of {n,l,m,b[,Z]}");
    std::vector<model::QuantumState> roster;
    for (const auto& e : j) {
        model::QuantumState qs{e.at("n").get<int>(), e.at("l").get<int>(), e.at("m").get<int>(),
                               e.at("b").get<double>(), e.value("Z", 1.0)};
        qs.validate();
        roster.push_back(qs);
    }
    if (roster.empty())
        throw std::domain_error("roster is empty");
    return roster;
}

int cmd_check(RunConfig cfg) {
    const auto roster = cfg.roster.empty() ? checks::default_roster() : load_roster(cfg.roster);
    const checks::CheckReport report = checks::run_checks(roster, cfg.perturb);

    const fs::path dir = resolve_out_dir(cfg);
    ordered_json j;
    j["version"] = RINGCOUL_VERSION;
    j["roster_size"] = roster.size();
    j["checks_run"] = report.results.size();
    j["failures"] = report.failures;
    j["passed"] = (report.failures == 0);
    ordered_json arr = ordered_json::array();
    for (const auto& r : report.results) {
        ordered_json e;
        e["check"] = r.check;
        e["state"] = r.state;
        e["metric"] = r.metric;
        e["bound"] = r.bound;
        e["pass"] = r.pass;
        arr.push_back(e);
    }
    j["results"] = arr;
    {
        std::ofstream out(dir / "check_report.json");
        if (!out)
            throw io::IoError("cannot write check_report.json");
        out << j.dump(2) << '\n';
    }
    write_config(cfg, dir);

    std::cout << "check: " << report.results.size() << " checks over " << roster.size()
              << " states, " << report.failures << " failures\n";
    for (const auto& r : report.results)
        if (!r.pass)
            std::cout << "  FAIL " << r.check << " [" << r.state << "] metric=" << r.metric
                      << " bound=" << r.bound << '\n';
    std::cout << (report.failures == 0 ? "CHECK PASSED" : "CHECK FAILED") << '\n';
    return report.failures == 0 ? kExitOk : 1;
}

// ---------------------------------------------------------------------- cli

void add_state_flags(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--n", cfg.n, "principal quantum number");
    sub->add_option("--l", cfg.l, "orbital quantum number");
    sub->add_option("--m", cfg.m, "magnetic quantum number");
    sub->add_option("--b", cfg.b, "ring-shape strength");
    sub->add_option("--Z", cfg.Z, "nuclear charge");
}

void add_grid_flags(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--grid-n", cfg.grid_n, "samples per axis (odd)");
    sub->add_option("--extent", cfg.extent, "half extent in a0 (0 = auto)");
    sub->add_option("--coverage", cfg.coverage, "radial mass coverage for auto extent");
    sub->add_option("--workers", cfg.workers, "sampling threads");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bound states in a ring-shaped Coulomb potential: density grids, "
                 "isosurfaces, contour slices, harmonic expansions"};
    app.set_version_flag("--version", RINGCOUL_VERSION);
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;

    auto* density = app.add_subcommand("density", "sample the density on a cubic grid");
    auto* mesh = app.add_subcommand("mesh", "extract isosurface meshes");
    auto* slice = app.add_subcommand("slice", "normalized contour slice on the yoz plane");
    auto* expand_cmd = app.add_subcommand("expand", "spherical-harmonic expansion coefficients");
    auto* check = app.add_subcommand("check", "run the invariant suite over a roster");

    for (auto* sub : {density, mesh, slice, expand_cmd, check}) {
        sub->add_option("--out", cfg.out, "output directory");
        sub->add_option("--config", config_path, "JSON config to start from");
    }
    for (auto* sub : {density, mesh, slice}) {
        add_state_flags(sub, cfg);
        add_grid_flags(sub, cfg);
    }

    mesh->add_option("--p", cfg.p_values, "relative probability values in (0,1)")->delimiter(',');
    mesh->add_option("--levels", cfg.levels, "absolute density levels")->delimiter(',');
    mesh->add_flag("--cut", cfg.cut, "drop cells in the open octant x<0, y<0, z>0");

    slice->add_flag("--quadrant1", cfg.quadrant1, "restrict export to y,z >= 0");
    slice->add_option("--format", cfg.format, "csv and/or pgm")->delimiter(',');

    expand_cmd->add_option("--m", cfg.m, "magnetic quantum number");
    expand_cmd->add_option("--ntheta", cfg.ntheta, "polar node count l - |m|");
    expand_cmd->add_option("--b", cfg.b_list, "ring strengths (comma list)")->delimiter(',');
    expand_cmd->add_option("--lmax", cfg.lmax, "largest expansion l (-1 = default headroom)");

    check->add_option("--roster", cfg.roster, "roster JSON path (default: built-in roster)");
    check->add_option("--perturb", cfg.perturb,
                      "scale factor injected into the polar normalization (mutation sanity)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitValidation;
    }

    CLI::App* sub = app.get_subcommands().front();
    cfg.subcommand = sub->get_name();

    try {
        if (!config_path.empty()) {
            // options given on the command line override the file
            RunConfig from_file = cfg;
            load_config_file(config_path, from_file, cfg.subcommand);
            auto passed = [&](const char* flag) {
                const CLI::Option* opt = sub->get_option_no_throw(flag);
                return opt != nullptr && opt->count() > 0;
            };
            auto keep = [&](const char* flag, auto member) {
                if (passed(flag))
                    from_file.*member = cfg.*member;
            };
            keep("--n", &RunConfig::n); keep("--l", &RunConfig::l); keep("--m", &RunConfig::m);
            keep("--Z", &RunConfig::Z);
            keep("--grid-n", &RunConfig::grid_n); keep("--extent", &RunConfig::extent);
            keep("--coverage", &RunConfig::coverage); keep("--workers", &RunConfig::workers);
            keep("--out", &RunConfig::out);
            if (cfg.subcommand == "expand") {
                if (passed("--b")) from_file.b_list = cfg.b_list;
            } else {
                keep("--b", &RunConfig::b);
            }
            keep("--p", &RunConfig::p_values);
            keep("--levels", &RunConfig::levels);
            keep("--cut", &RunConfig::cut);
            keep("--quadrant1", &RunConfig::quadrant1);
            keep("--format", &RunConfig::format);
            keep("--ntheta", &RunConfig::ntheta);
            keep("--lmax", &RunConfig::lmax);
            keep("--roster", &RunConfig::roster);
            keep("--perturb", &RunConfig::perturb);
            cfg = from_file;
        }

        if (cfg.subcommand == "density") return cmd_density(cfg);
        if (cfg.subcommand == "mesh") return cmd_mesh(cfg);
        if (cfg.subcommand == "slice") return cmd_slice(cfg);
        if (cfg.subcommand == "expand") return cmd_expand(cfg);
        if (cfg.subcommand == "check") return cmd_check(cfg);
        std::cerr << "unknown subcommand\n";
        return kExitValidation;
    } catch (const io::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    }
}
