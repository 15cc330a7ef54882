#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracspec/commands.hpp"

namespace {

std::vector<fracspec::OutputFormat> parse_format_list(const std::string& csv) {
    std::vector<fracspec::OutputFormat> out;
    std::string tok;
    for (const char c : csv + ",") {
        if (c == ',') {
            if (!tok.empty()) out.push_back(fracspec::parse_format(tok));
            tok.clear();
        } else {
            tok += c;
        }
    }
    if (out.empty()) throw fracspec::ConfigError("formats: empty format list");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fracspec: Petrov-Galerkin spectral solver for the fractional "
                 "diffusion, advection, reaction two-point boundary value problem on (0,1)"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string format_list;
    int nodes = 0;
    int nref = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "config file path")->required();
        cmd->add_option("--out", out_dir, "output directory (overrides the config)");
        cmd->add_option("--nodes", nodes, "quadrature node count override");
        cmd->add_option("--nref", nref, "reference degree override");
        cmd->add_option("--format", format_list, "comma-separated formats: csv,json,plot-data,svg");
    };

    CLI::App* solve = app.add_subcommand("solve", "solve at the reference degree and write u_N");
    add_common(solve);
    CLI::App* converge = app.add_subcommand("converge", "run a convergence study");
    add_common(converge);

    double alpha = 0.0, r = 0.0;
    CLI::App* params = app.add_subcommand("params", "print beta, c** and leading eigenvalues");
    params->add_option("alpha", alpha, "fractional order in (1,2)")->required();
    params->add_option("r", r, "diffusion skew weight in [0,1]")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    if (params->parsed()) return fracspec::cmd_params(alpha, r);

    fracspec::CommandOverrides overrides;
    if (!out_dir.empty()) overrides.out_dir = out_dir;
    if (nodes > 0) overrides.quad_nodes = nodes;
    if (nref > 0) overrides.n_ref = nref;

    try {
        if (!format_list.empty()) overrides.formats = parse_format_list(format_list);
        const fracspec::RunConfig config = fracspec::load_run_config(config_path, overrides);
        if (solve->parsed()) return fracspec::cmd_solve(config);
        return fracspec::cmd_converge(config);
    } catch (const fracspec::ConfigError& e) {
        std::cerr << "fracspec: config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "fracspec: error: " << e.what() << "\n";
        return 2;
    }
}
