// ws-spectra: bound states of the D-dimensional Woods-Saxon well.
//
// Subcommands:
//   solve    solve the channels given by --l/--nr/--D or --scan-l
//   table1   56Fe preset, D = 3
//   table2   56Fe preset, D = 4
//   curves   write effective-potential and wavefunction CSV data files
//   oracle   compare the closed-form energy with the shooting integrator
//
// Exit codes: 0 success, 1 configuration error, 2 cross-check failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "wsspectra/io.hpp"

namespace {

struct CliArgs {
    std::string config_file;
    std::string constants_file;
    double V0 = -1.0, R0 = -1.0, a = -1.0, mu = -1.0;
    int A = 0;
    int D = -1, l = -1, nr = -1;
    std::string scan_l;
    bool oracle = false;
    std::string format;
    std::string out;
    int curve_samples = 0;
};

void add_common(CLI::App* cmd, CliArgs& args) {
    cmd->add_option("--config", args.config_file, "flat key = value configuration file");
    cmd->add_option("--constants", args.constants_file, "physical constants override file");
    cmd->add_option("--V0", args.V0, "well depth [MeV]");
    cmd->add_option("--R0", args.R0, "well radius [fm]");
    cmd->add_option("--a", args.a, "surface diffuseness [fm]");
    cmd->add_option("--mu", args.mu, "reduced mass [u]");
    cmd->add_option("--A", args.A, "mass number (sets V0, R0, a, mu)");
    cmd->add_option("--D", args.D, "dimension");
    cmd->add_option("--l", args.l, "orbital quantum number");
    cmd->add_option("--nr", args.nr, "radial quantum number");
    cmd->add_option("--scan-l", args.scan_l, "solve a range of l, LO:HI");
    cmd->add_flag("--oracle", args.oracle, "run the shooting integrator per channel");
    cmd->add_option("--format", args.format, "json | csv | pretty-table");
    cmd->add_option("--out", args.out, "output file (or directory for curves)");
    cmd->add_option("--curve-samples", args.curve_samples, "samples per curve file");
}

// File first, then flags on top (flags win).
bool build_config(ws::RunConfig& cfg, const CliArgs& args, std::string& err) {
    try {
        cfg.constants = ws::PhysicalConstants::from_env_or_default();
    } catch (const std::exception& e) {
        err = e.what();
        return false;
    }
    if (!args.config_file.empty() && !ws::apply_config_file(cfg, args.config_file, err))
        return false;
    auto set = [&](const char* key, const std::string& value) {
        return ws::apply_key_value(cfg, key, value, err);
    };
    if (!args.constants_file.empty() && !set("constants", args.constants_file)) return false;
    if (args.A > 0 && !set("A", std::to_string(args.A))) return false;
    if (args.V0 >= 0.0 && !set("V0", ws::fmt12(args.V0))) return false;
    if (args.R0 >= 0.0 && !set("R0", ws::fmt12(args.R0))) return false;
    if (args.a >= 0.0 && !set("a", ws::fmt12(args.a))) return false;
    if (args.mu >= 0.0 && !set("mu", ws::fmt12(args.mu))) return false;
    if (args.D >= 0 && !set("D", std::to_string(args.D))) return false;
    if (args.l >= 0 && !set("l", std::to_string(args.l))) return false;
    if (args.nr >= 0 && !set("nr", std::to_string(args.nr))) return false;
    if (!args.scan_l.empty() && !set("scan-l", args.scan_l)) return false;
    if (args.oracle && !set("oracle", "true")) return false;
    if (!args.format.empty() && !set("format", args.format)) return false;
    if (!args.out.empty() && !set("out", args.out)) return false;
    if (args.curve_samples > 0 && !set("curve-samples", std::to_string(args.curve_samples)))
        return false;
    return true;
}

int emit(const std::vector<ws::ChannelSolution>& rows, const ws::RunConfig& cfg) {
    const std::string text = ws::serialize(rows, cfg);
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << cfg.out_path << "\n";
            return 1;
        }
        out << text;
    }
    for (const auto& r : rows)
        if (!r.cross_check_ok) {
            std::cerr << "error: closed-form cross-check failed for (nr=" << r.channel.nr
                      << ", l=" << r.channel.l << ", D=" << r.channel.D << ")\n";
            return 2;
        }
    return 0;
}

int run_solve(const ws::RunConfig& cfg) {
    ws::SolveOptions opt;
    opt.oracle = cfg.oracle;
    try {
        return emit(ws::solve_channels(cfg.potential, cfg.channels, cfg.constants, opt), cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound states of the D-dimensional Woods-Saxon potential"};
    app.require_subcommand(1);

    CliArgs args;
    auto* solve = app.add_subcommand("solve", "solve configured channels");
    auto* table1 = app.add_subcommand("table1", "56Fe D=3 preset");
    auto* table2 = app.add_subcommand("table2", "56Fe D=4 preset");
    auto* curves = app.add_subcommand("curves", "write potential / wavefunction data files");
    auto* oracle = app.add_subcommand("oracle", "closed form vs shooting integrator");
    for (auto* cmd : {solve, table1, table2, curves, oracle}) add_common(cmd, args);

    CLI11_PARSE(app, argc, argv);

    std::string err;
    ws::RunConfig cfg;
    if (app.got_subcommand(table1)) cfg = ws::table1_config();
    if (app.got_subcommand(table2)) cfg = ws::table2_config();

    if (app.got_subcommand(table1) || app.got_subcommand(table2)) {
        // presets fix the physics; only presentation flags apply
        ws::RunConfig overlay = cfg;
        if (!build_config(overlay, args, err)) {
            std::cerr << "error: " << err << "\n";
            return 1;
        }
        overlay.potential = cfg.potential;
        overlay.channels = cfg.channels;
        if (args.constants_file.empty() && std::getenv("WS_SPECTRA_CONSTANTS") == nullptr)
            overlay.constants = cfg.constants;
        return run_solve(overlay);
    }

    if (!build_config(cfg, args, err)) {
        std::cerr << "error: " << err << "\n";
        return 1;
    }

    if (app.got_subcommand(curves)) {
        if (cfg.channels.empty()) {
            std::cerr << "usage: provide at least one channel (--l or --scan-l)\n";
            return 1;
        }
        for (const auto& c : cfg.channels)
            if (c.l < 0) {
                std::cerr << "usage: --l (or --scan-l) is required\n";
                return 1;
            }
        const std::string dir = cfg.out_path.empty() ? "." : cfg.out_path;
        const auto files = ws::write_curves(cfg, dir, err);
        if (!err.empty()) {
            std::cerr << "error: " << err << "\n";
            return 1;
        }
        for (const auto& f : files) std::cout << f << "\n";
        return 0;
    }

    if (app.got_subcommand(oracle)) {
        if (cfg.channels.empty() || cfg.channels.front().l < 0) {
            std::cerr << "usage: provide a channel (--l, --nr, --D)\n";
            return 1;
        }
        cfg.oracle = true;
        const auto c = cfg.channels.front();
        try {
            ws::SolveOptions opt;
            opt.oracle = true;
            const auto sol = ws::solve_channel(cfg.potential, c, cfg.constants, opt);
            std::cout << "channel nr=" << c.nr << " l=" << c.l << " D=" << c.D << "\n";
            std::cout << "closed-form energy [MeV]: "
                      << (sol.energy ? ws::fmt12(*sol.energy) : "n/a") << "\n";
            if (sol.oracle)
                std::cout << "shooting (matched expansion) [MeV]: " << ws::fmt12(sol.oracle->energy)
                          << "  nodes=" << sol.oracle->node_count
                          << " residual=" << ws::fmt12(sol.oracle->matching_residual)
                          << (sol.oracle->converged ? "" : "  NOT CONVERGED") << "\n";
            else
                std::cout << "shooting (matched expansion): no eigenvalue in bracket\n";
            if (sol.oracle_exact_energy)
                std::cout << "shooting (exact effective) [MeV]: "
                          << ws::fmt12(*sol.oracle_exact_energy) << "\n";
            if (sol.energy && sol.oracle)
                std::cout << "gap closed-form vs shooting [MeV]: "
                          << ws::fmt12(*sol.energy - sol.oracle->energy) << "\n";
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
        return 0;
    }

    // solve
    if (cfg.channels.empty()) {
        std::cerr << "usage: provide at least one channel (--l [--nr --D] or --scan-l)\n";
        return 1;
    }
    for (const auto& c : cfg.channels)
        if (c.l < 0) {
            std::cerr << "usage: --l (or --scan-l) is required\n";
            return 1;
        }
    return run_solve(cfg);
}
