#include "fracspec/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "fracspec/format.hpp"
#include "fracspec/svg_plot.hpp"

namespace fracspec {

namespace fs = std::filesystem;

namespace {

bool wants(const RunConfig& config, OutputFormat f) {
    return std::find(config.formats.begin(), config.formats.end(), f) != config.formats.end();
}

std::vector<double> sample_grid(int points) {
    std::vector<double> xs(points);
    for (int i = 0; i < points; ++i) xs[i] = static_cast<double>(i) / (points - 1);
    return xs;
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open output file '" + path.string() + "'");
    out << contents;
}

}  // namespace

RunConfig load_run_config(const std::string& path, const CommandOverrides& overrides) {
    RunConfig config = load_config(path);
    if (overrides.out_dir) config.out_dir = *overrides.out_dir;
    if (overrides.quad_nodes) config.experiment.quad_nodes = *overrides.quad_nodes;
    if (overrides.n_ref) config.experiment.n_ref = *overrides.n_ref;
    if (overrides.formats) config.formats = *overrides.formats;
    if (config.out_dir.empty()) throw ConfigError("output dir: must not be empty");
    if (const char* env = std::getenv("FRACSPEC_CACHE"); env && *env)
        config.experiment.cache_dir = env;
    else
        config.experiment.cache_dir = (fs::path(config.out_dir) / "cache").string();
    try {
        config.experiment.validate();
    } catch (const std::exception& ex) {
        throw ConfigError(ex.what());
    }
    return config;
}

int cmd_solve(const RunConfig& config) {
    const auto& e = config.experiment;
    Solution sol;
    try {
        const QuadRule rule = gauss_legendre(e.quad_nodes);
        sol = solve(assemble(e.problem, e.n_ref, rule));
    } catch (const std::exception& ex) {
        std::cerr << "fracspec: solver error: " << ex.what() << "\n";
        return 2;
    }

    fs::create_directories(config.out_dir);
    const auto xs = sample_grid(config.grid_points);
    const auto us = evaluate_u(sol, xs);

    if (wants(config, OutputFormat::json)) {
        const fs::path p = fs::path(config.out_dir) / "solution.json";
        write_file(p, nlohmann::json(sol).dump(2) + "\n");
        std::cout << "wrote " << p.string() << "\n";
    }
    if (wants(config, OutputFormat::csv) || wants(config, OutputFormat::plot_data)) {
        std::string csv = "x,u\n";
        for (size_t i = 0; i < xs.size(); ++i)
            csv += fmt_shortest(xs[i]) + "," + fmt_shortest(us[i]) + "\n";
        const fs::path p = fs::path(config.out_dir) / "solution.csv";
        write_file(p, csv);
        std::cout << "wrote " << p.string() << "\n";
    }
    if (wants(config, OutputFormat::svg)) {
        const fs::path p = fs::path(config.out_dir) / "solution.svg";
        write_svg_plot(p.string(), "u_N(x), N = " + std::to_string(e.n_ref),
                       {{"u_" + std::to_string(e.n_ref), xs, us}});
        std::cout << "wrote " << p.string() << "\n";
    }
    return 0;
}

int cmd_converge(const RunConfig& config) {
    ExperimentRun run;
    try {
        run = run_experiment_full(config.experiment);
    } catch (const std::exception& ex) {
        std::cerr << "fracspec: solver error: " << ex.what() << "\n";
        return 2;
    }

    fs::create_directories(config.out_dir);
    if (wants(config, OutputFormat::csv)) {
        const fs::path p = fs::path(config.out_dir) / "report.csv";
        write_file(p, report_csv(run.report));
        std::cout << "wrote " << p.string() << "\n";
    }
    if (wants(config, OutputFormat::json)) {
        const fs::path p = fs::path(config.out_dir) / "report.json";
        write_file(p, nlohmann::json(run.report).dump(2) + "\n");
        std::cout << "wrote " << p.string() << "\n";
    }

    if (wants(config, OutputFormat::plot_data) || wants(config, OutputFormat::svg)) {
        const auto xs = sample_grid(config.grid_points);
        const auto u_ref = evaluate_u(run.reference, xs);
        std::vector<PlotSeries> series;
        for (size_t k = 0; k < run.solutions.size(); ++k) {
            const auto u_n = evaluate_u(run.solutions[k], xs);
            PlotSeries s;
            s.label = "N = " + std::to_string(config.experiment.n_values[k]);
            s.x = xs;
            s.y.resize(xs.size());
            for (size_t i = 0; i < xs.size(); ++i) s.y[i] = u_ref[i] - u_n[i];
            series.push_back(std::move(s));
        }
        if (wants(config, OutputFormat::plot_data)) {
            std::string csv = "x";
            for (const int n : config.experiment.n_values) csv += ",err_N" + std::to_string(n);
            csv += "\n";
            for (size_t i = 0; i < xs.size(); ++i) {
                csv += fmt_shortest(xs[i]);
                for (const auto& s : series) csv += "," + fmt_shortest(s.y[i]);
                csv += "\n";
            }
            const fs::path p = fs::path(config.out_dir) / "errors.csv";
            write_file(p, csv);
            std::cout << "wrote " << p.string() << "\n";
        }
        if (wants(config, OutputFormat::svg)) {
            const fs::path p = fs::path(config.out_dir) / "errors.svg";
            write_svg_plot(p.string(),
                           "u_" + std::to_string(config.experiment.n_ref) + " - u_N", series);
            std::cout << "wrote " << p.string() << "\n";
        }
    }
    return 0;
}

nlohmann::json params_json(double alpha, double r) {
    const FractionalParams p = fractional_params(alpha, r, 5);
    return nlohmann::json{{"alpha", p.alpha},
                          {"r", p.r},
                          {"beta", p.beta},
                          {"c_star_star", p.c_star_star},
                          {"lambda", p.lambda}};
}

int cmd_params(double alpha, double r) {
    try {
        std::cout << params_json(alpha, r).dump(2) << "\n";
    } catch (const std::exception& ex) {
        std::cerr << "fracspec: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace fracspec
