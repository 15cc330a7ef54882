#ifndef FRACSPEC_ANALYSIS_HPP
#define FRACSPEC_ANALYSIS_HPP

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fracspec/solver.hpp"

namespace fracspec {

/// One convergence study: a problem, the degrees to solve at, and the
/// reference degree standing in for the unknown exact solution.
struct ExperimentSpec {
    ProblemSpec problem;
    std::vector<int> n_values;
    int n_ref = 40;
    int quad_nodes = 200;
    /// Declared Sobolev index of f in the test-weight space (infinity for
    /// constants and polynomials, 1/2 for a step; never inferred).
    double f_regularity = std::numeric_limits<double>::infinity();
    /// Directory for cached reference solutions; empty disables caching.
    std::string cache_dir;
    bool operator==(const ExperimentSpec&) const = default;

    void validate() const;
};

struct ConvergenceRow {
    int n = 0;
    double e_l2 = 0.0;
    double e_h = 0.0;
    std::optional<double> kappa_l2;  // absent on the first row
    std::optional<double> kappa_h;
};

struct PredictedRates {
    double beta = 0.0;
    double s_tilde = 0.0;
    double kappa_l2 = 0.0;
    double kappa_h = 0.0;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    PredictedRates predicted;
};

/// Coefficient-decay error norms between a reference solution and a lower
/// degree one sharing the same basis: the approximation is padded with zeros,
/// e_l2 is the Euclidean norm of the coefficient difference (equal to the
/// omega^{-1}-weighted L2 norm of u_ref - u_N) and e_h applies the decay
/// weight (1+j^2)^{alpha/2}.
std::pair<double, double> error_norms(const Solution& ref, const Solution& approx);

/// kappa_k = ln(e_{k-1}/e_k) / ln(N_k/N_{k-1}) for each consecutive pair.
std::vector<double> fit_rate(std::span<const std::pair<int, double>> errors);

/// Regularity index s~ = min{s, alpha+(alpha-beta)+1, alpha+beta+1} without
/// advection, with the +1 replaced by -1 when b is not identically zero, and
/// the rates s~+alpha (weighted L2) and s~+alpha/2 (energy) it predicts.
PredictedRates predicted_rates(const ProblemSpec& problem, double s);

/// Reference solve at n_ref (cached when cache_dir is set), one solve per
/// entry of n_values, error norms, fitted and predicted rates.
ConvergenceReport run_experiment(const ExperimentSpec& spec);

/// Same, but also hands back the solutions for plotting.
struct ExperimentRun {
    ConvergenceReport report;
    Solution reference;
    std::vector<Solution> solutions;
};
ExperimentRun run_experiment_full(const ExperimentSpec& spec);

/// CSV with columns N,e_L2,kappa_L2,e_H,kappa_H; errors in scientific
/// notation with 3 significant digits, rates with 2 decimals.
std::string report_csv(const ConvergenceReport& report);

void to_json(nlohmann::json& j, const ConvergenceReport& report);

}  // namespace fracspec

#endif
