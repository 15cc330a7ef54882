#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fracspec/commands.hpp"
#include "fracspec/config.hpp"

using namespace fracspec;

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* kFullConfig = R"(# all features exercised
[problem]
alpha = 1.7
r = 0.3
b = poly 0 2 -0.5
c = constant 5
f = piecewise 0.5 : 0 1

[experiment]
N_values = 4 6 8
N_ref = 12
nodes = 96
f_regularity = 0.5

[output]
dir = out/full
formats = csv json plot-data svg
grid = 201
)";

RunConfig tiny_config(const fs::path& out_dir) {
    RunConfig config;
    config.experiment.problem = {1.5, 0.5, Constant{1.0}, Constant{2.0}, Constant{1.0}};
    config.experiment.n_values = {4, 6};
    config.experiment.n_ref = 12;
    config.experiment.quad_nodes = 64;
    config.out_dir = out_dir.string();
    return config;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config round trip") {
    const RunConfig parsed = parse_config(kFullConfig);
    CHECK(parsed.experiment.problem.alpha == 1.7);
    CHECK(parsed.experiment.n_values == std::vector<int>{4, 6, 8});
    CHECK(parsed.experiment.f_regularity == 0.5);
    CHECK(parsed.formats.size() == 4);
    CHECK(parsed.grid_points == 201);
    CHECK(std::get<PiecewiseConstant>(parsed.experiment.problem.source).breakpoints ==
          std::vector<double>{0.5});

    const RunConfig again = parse_config(serialize_config(parsed));
    CHECK(again == parsed);

    // a second round trip is byte-stable
    CHECK(serialize_config(again) == serialize_config(parsed));
}

TEST_CASE("config round trip preserves awkward doubles") {
    RunConfig config = tiny_config("out");
    config.experiment.problem.alpha = 1.0 + 2.0 / 3.0;
    config.experiment.problem.r = 0.1;
    config.experiment.problem.advection = Polynomial{{1e-17, -2.5e300}};
    const RunConfig again = parse_config(serialize_config(config));
    CHECK(again == config);
}

TEST_CASE("malformed configs name the offending key") {
    CHECK_THROWS_WITH_AS(parse_config("[problem]\nalpha = fast\n"),
                         doctest::Contains("alpha"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[problem]\nalpha = 1.5\nr = 0.5\nwhat = 1\n"),
                         doctest::Contains("what"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[problem]\nalpha = 1.5\n"), doctest::Contains("r"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[problem]\nalpha = 1.5\nr = 0.5\n"),
                         doctest::Contains("N_values"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config("[problem]\nalpha = 1.5\nr = 0.5\n[experiment]\nN_values =\n"),
        doctest::Contains("N_values"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[weird]\nx = 1\n"), doctest::Contains("weird"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config("[problem]\nalpha = 1.5\nr = 0.5\nf = piecewise 0.5 0 1\n"),
        doctest::Contains(":"), ConfigError);
}

TEST_CASE("params JSON carries beta, c** and six eigenvalues") {
    const nlohmann::json j = params_json(1.6, 0.2);
    CHECK(j["beta"].get<double>() == doctest::Approx(0.93).epsilon(0.005));
    CHECK(j["lambda"].size() == 6);
    CHECK(j["c_star_star"].get<double>() < 0.0);
    CHECK(cmd_params(1.5, 0.5) == 0);
    CHECK(cmd_params(2.5, 0.5) == 1);
}

TEST_CASE("cmd_solve writes solution files with boundary zeros") {
    const fs::path dir = fs::temp_directory_path() / "fracspec_cli_solve";
    fs::remove_all(dir);
    RunConfig config = tiny_config(dir);
    config.formats = {OutputFormat::csv, OutputFormat::json, OutputFormat::svg};
    config.grid_points = 41;
    REQUIRE(cmd_solve(config) == 0);
    CHECK(fs::exists(dir / "solution.json"));
    CHECK(fs::exists(dir / "solution.svg"));

    const std::string csv = slurp(dir / "solution.csv");
    CHECK(csv.rfind("x,u\n", 0) == 0);
    CHECK(csv.find("\n0,0\n") != std::string::npos);    // u(0) = 0
    CHECK(csv.find("\n1,0\n") != std::string::npos);    // u(1) = 0
    fs::remove_all(dir);
}

TEST_CASE("cmd_converge is idempotent byte for byte") {
    const fs::path dir = fs::temp_directory_path() / "fracspec_cli_converge";
    fs::remove_all(dir);
    RunConfig config = tiny_config(dir);
    config.experiment.cache_dir = (dir / "cache").string();
    config.formats = {OutputFormat::csv, OutputFormat::json, OutputFormat::plot_data};
    config.grid_points = 21;

    REQUIRE(cmd_converge(config) == 0);
    const std::string report1 = slurp(dir / "report.csv");
    const std::string errors1 = slurp(dir / "errors.csv");
    REQUIRE(cmd_converge(config) == 0);
    CHECK(slurp(dir / "report.csv") == report1);
    CHECK(slurp(dir / "errors.csv") == errors1);
    CHECK(!report1.empty());
    CHECK(errors1.rfind("x,err_N4,err_N6\n", 0) == 0);
    fs::remove_all(dir);
}

TEST_CASE("skewed drift solution peaks right of the midpoint") {
    const QuadRule rule = gauss_legendre(200);
    const ProblemSpec p{1.4, 0.4, Constant{2.0}, Constant{5.0}, Constant{1.0}};
    const Solution sol = solve(assemble(p, 20, rule));
    std::vector<double> xs(1001);
    for (int i = 0; i <= 1000; ++i) xs[i] = i / 1000.0;
    const auto u = evaluate_u(sol, xs);
    int arg = 0;
    for (int i = 0; i <= 1000; ++i)
        if (u[i] > u[arg]) arg = i;
    CHECK(xs[arg] > 0.5);
}

TEST_CASE("step-source error curve peaks near the discontinuity") {
    ExperimentSpec spec;
    spec.problem = {1.7, 0.3, Constant{2.0}, Constant{5.0}, PiecewiseConstant{{0.5}, {0.0, 1.0}}};
    spec.n_values = {12};
    spec.n_ref = 24;
    spec.f_regularity = 0.5;
    const ExperimentRun run = run_experiment_full(spec);
    std::vector<double> xs(1001);
    for (int i = 0; i <= 1000; ++i) xs[i] = i / 1000.0;
    const auto u_ref = evaluate_u(run.reference, xs);
    const auto u_n = evaluate_u(run.solutions[0], xs);
    int arg = 0;
    double best = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double mag = std::abs(u_ref[i] - u_n[i]);
        if (mag > best) {
            best = mag;
            arg = i;
        }
    }
    CHECK(std::abs(xs[arg] - 0.5) <= 0.2);
}

TEST_CASE("load_run_config applies overrides and cache resolution") {
    const fs::path dir = fs::temp_directory_path() / "fracspec_cli_cfg";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path cfg = dir / "exp.cfg";
    std::ofstream(cfg) << kFullConfig;

    CommandOverrides overrides;
    overrides.out_dir = (dir / "results").string();
    overrides.quad_nodes = 48;
    overrides.n_ref = 10;
    const RunConfig config = load_run_config(cfg.string(), overrides);
    CHECK(config.out_dir == (dir / "results").string());
    CHECK(config.experiment.quad_nodes == 48);
    CHECK(config.experiment.n_ref == 10);
    CHECK(config.experiment.cache_dir == (fs::path(config.out_dir) / "cache").string());

    setenv("FRACSPEC_CACHE", (dir / "elsewhere").c_str(), 1);
    const RunConfig with_env = load_run_config(cfg.string(), overrides);
    CHECK(with_env.experiment.cache_dir == (dir / "elsewhere").string());
    unsetenv("FRACSPEC_CACHE");

    // an override that breaks validation is a config error
    CommandOverrides bad;
    bad.n_ref = 4;  // below max(N_values)
    CHECK_THROWS_AS(load_run_config(cfg.string(), bad), ConfigError);
    CHECK_THROWS_AS(load_run_config((dir / "missing.cfg").string(), {}), ConfigError);
    fs::remove_all(dir);
}

}  // TEST_SUITE
