#ifndef FRACSPEC_COMMANDS_HPP
#define FRACSPEC_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracspec/config.hpp"

namespace fracspec {

/// Command-line overrides applied on top of a parsed config file.
struct CommandOverrides {
    std::optional<std::string> out_dir;
    std::optional<int> quad_nodes;
    std::optional<int> n_ref;
    std::optional<std::vector<OutputFormat>> formats;
};

/// Load a config, apply the overrides, re-validate, and resolve the
/// reference-solution cache directory (FRACSPEC_CACHE when set, otherwise
/// <out_dir>/cache).  Throws ConfigError on any problem.
RunConfig load_run_config(const std::string& path, const CommandOverrides& overrides);

/// Solve at N_ref and write solution.json, solution.csv (x,u columns) and
/// optionally solution.svg into out_dir.  Returns the process exit status:
/// 0 success, 2 solver failure.
int cmd_solve(const RunConfig& config);

/// Run the convergence study and write report.csv / report.json, optionally
/// errors.csv (x and one u_ref - u_N column per N) and errors.svg.
int cmd_converge(const RunConfig& config);

/// beta, c** and the first six eigenvalues for (alpha, r), as JSON on stdout.
/// Returns 0, or 1 when (alpha, r) is out of domain.
int cmd_params(double alpha, double r);

nlohmann::json params_json(double alpha, double r);

}  // namespace fracspec

#endif
