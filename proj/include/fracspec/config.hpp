#ifndef FRACSPEC_CONFIG_HPP
#define FRACSPEC_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "fracspec/analysis.hpp"

namespace fracspec {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json, plot_data, svg };

std::string format_name(OutputFormat f);
OutputFormat parse_format(const std::string& name);  // throws ConfigError

/// One run: an experiment plus output destination, formats and sampling grid.
/// Parsed from a sectioned key-value file, e.g.
///
///   [problem]
///   alpha = 1.6
///   r = 0.2
///   b = constant 0
///   c = constant 5
///   f = constant 1
///
///   [experiment]
///   N_values = 6 8 10 12 14
///   N_ref = 40
///   nodes = 200
///   f_regularity = inf
///
///   [output]
///   dir = out/experiment1
///   formats = csv json
///   grid = 1001
///
/// Coefficients are written as `constant V`, `poly C0 C1 ...`, or
/// `piecewise B1 ... Bm : V0 V1 ... Vm`.
struct RunConfig {
    ExperimentSpec experiment;
    std::string out_dir = "out";
    std::vector<OutputFormat> formats{OutputFormat::csv, OutputFormat::json};
    int grid_points = 1001;
    bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& config);

}  // namespace fracspec

#endif
