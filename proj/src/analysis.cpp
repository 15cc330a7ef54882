#include "fracspec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "fracspec/format.hpp"

namespace fracspec {

namespace {

uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string cache_file_name(const ProblemSpec& problem, int n_ref, int nodes) {
    nlohmann::json key{{"problem", problem}, {"n_ref", n_ref}, {"nodes", nodes}};
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(key.dump())));
    return std::string("ref-") + hex + ".json";
}

Solution reference_solution(const ExperimentSpec& spec, const QuadRule& rule) {
    namespace fs = std::filesystem;
    fs::path cache_path;
    if (!spec.cache_dir.empty()) {
        cache_path = fs::path(spec.cache_dir) /
                     cache_file_name(spec.problem, spec.n_ref, spec.quad_nodes);
        if (fs::exists(cache_path)) {
            try {
                std::ifstream in(cache_path);
                const auto j = nlohmann::json::parse(in);
                Expansion phi = j.get<Expansion>();
                if (phi.degree() == spec.n_ref) {
                    Solution sol;
                    sol.phi = std::move(phi);
                    sol.params = fractional_params(spec.problem.alpha, spec.problem.r, spec.n_ref);
                    sol.problem = spec.problem;
                    return sol;
                }
            } catch (const std::exception&) {
                // unreadable cache entry: fall through and recompute
            }
        }
    }
    Solution sol = solve(assemble(spec.problem, spec.n_ref, rule));
    if (!cache_path.empty()) {
        fs::create_directories(cache_path.parent_path());
        std::ofstream out(cache_path);
        out << nlohmann::json(sol.phi).dump(2) << "\n";
    }
    return sol;
}

}  // namespace

void ExperimentSpec::validate() const {
    problem.validate();
    if (n_values.empty()) throw std::invalid_argument("experiment: N_values must be nonempty");
    for (size_t k = 0; k < n_values.size(); ++k) {
        if (n_values[k] < 0) throw std::invalid_argument("experiment: N_values must be >= 0");
        if (k > 0 && n_values[k] <= n_values[k - 1])
            throw std::invalid_argument("experiment: N_values must be strictly ascending");
    }
    if (n_values.back() >= n_ref)
        throw std::invalid_argument("experiment: max(N_values) must be below N_ref");
    if (quad_nodes < 1) throw std::invalid_argument("experiment: nodes must be >= 1");
    if (f_regularity < -problem.alpha / 2.0)
        throw std::invalid_argument("experiment: f_regularity must be >= -alpha/2");
}

std::pair<double, double> error_norms(const Solution& ref, const Solution& approx) {
    if (!(ref.phi.basis == approx.phi.basis))
        throw std::invalid_argument("error_norms: solutions use different bases");
    if (ref.params.alpha != approx.params.alpha || ref.params.r != approx.params.r ||
        ref.params.beta != approx.params.beta)
        throw std::invalid_argument("error_norms: solutions come from different problems");
    if (approx.phi.degree() > ref.phi.degree())
        throw std::invalid_argument("error_norms: reference degree below approximation degree");

    Expansion diff = ref.phi;
    for (int j = 0; j <= approx.phi.degree(); ++j) diff.coeffs[j] -= approx.phi.coeffs[j];
    return {sobolev_norm(diff, 0.0), sobolev_norm(diff, ref.params.alpha / 2.0)};
}

std::vector<double> fit_rate(std::span<const std::pair<int, double>> errors) {
    std::vector<double> kappa;
    for (size_t k = 1; k < errors.size(); ++k) {
        const auto& [n0, e0] = errors[k - 1];
        const auto& [n1, e1] = errors[k];
        if (!(e0 > 0.0) || !(e1 > 0.0))
            throw std::domain_error("fit_rate: error values must be positive");
        if (!(n1 > n0 && n0 > 0))
            throw std::invalid_argument("fit_rate: N values must be positive and ascending");
        kappa.push_back(std::log(e0 / e1) / std::log(static_cast<double>(n1) / n0));
    }
    return kappa;
}

PredictedRates predicted_rates(const ProblemSpec& problem, double s) {
    problem.validate();
    if (s < -problem.alpha / 2.0)
        throw std::invalid_argument("predicted_rates: s must be >= -alpha/2");
    const double alpha = problem.alpha;
    const double beta = solve_beta(alpha, problem.r);
    const double shift = coeff_is_zero(problem.advection) ? 1.0 : -1.0;
    const double s_tilde = std::min({s, alpha + (alpha - beta) + shift, alpha + beta + shift});
    return {beta, s_tilde, s_tilde + alpha, s_tilde + alpha / 2.0};
}

ExperimentRun run_experiment_full(const ExperimentSpec& spec) {
    spec.validate();
    const QuadRule rule = gauss_legendre(spec.quad_nodes);

    ExperimentRun run;
    run.reference = reference_solution(spec, rule);

    for (const int n : spec.n_values) {
        Solution sol;
        try {
            sol = solve(assemble(spec.problem, n, rule));
        } catch (const std::exception& ex) {
            throw std::runtime_error("run_experiment: N=" + std::to_string(n) + ": " + ex.what());
        }
        const auto [e_l2, e_h] = error_norms(run.reference, sol);
        run.report.rows.push_back({n, e_l2, e_h, std::nullopt, std::nullopt});
        run.solutions.push_back(std::move(sol));
    }

    const bool all_positive = std::all_of(run.report.rows.begin(), run.report.rows.end(),
                                          [](const ConvergenceRow& r) { return r.e_l2 > 0.0 && r.e_h > 0.0; });
    if (all_positive && run.report.rows.size() > 1) {
        std::vector<std::pair<int, double>> l2s, hs;
        for (const auto& row : run.report.rows) {
            l2s.emplace_back(row.n, row.e_l2);
            hs.emplace_back(row.n, row.e_h);
        }
        const auto k2 = fit_rate(l2s);
        const auto kh = fit_rate(hs);
        for (size_t k = 1; k < run.report.rows.size(); ++k) {
            run.report.rows[k].kappa_l2 = k2[k - 1];
            run.report.rows[k].kappa_h = kh[k - 1];
        }
    }

    run.report.predicted = predicted_rates(spec.problem, spec.f_regularity);
    return run;
}

ConvergenceReport run_experiment(const ExperimentSpec& spec) {
    return run_experiment_full(spec).report;
}

std::string report_csv(const ConvergenceReport& report) {
    std::string out = "N,e_L2,kappa_L2,e_H,kappa_H\n";
    for (const auto& row : report.rows) {
        out += std::to_string(row.n);
        out += ',';
        out += fmt_sci3(row.e_l2);
        out += ',';
        if (row.kappa_l2) out += fmt_fixed(*row.kappa_l2, 2);
        out += ',';
        out += fmt_sci3(row.e_h);
        out += ',';
        if (row.kappa_h) out += fmt_fixed(*row.kappa_h, 2);
        out += '\n';
    }
    return out;
}

void to_json(nlohmann::json& j, const ConvergenceReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json r{{"N", row.n}, {"e_L2", row.e_l2}, {"e_H", row.e_h}};
        r["kappa_L2"] = row.kappa_l2 ? nlohmann::json(*row.kappa_l2) : nlohmann::json(nullptr);
        r["kappa_H"] = row.kappa_h ? nlohmann::json(*row.kappa_h) : nlohmann::json(nullptr);
        rows.push_back(std::move(r));
    }
    j = nlohmann::json{{"beta", report.predicted.beta},
                       {"s_tilde", report.predicted.s_tilde},
                       {"kappa_L2_pred", report.predicted.kappa_l2},
                       {"kappa_H_pred", report.predicted.kappa_h},
                       {"rows", std::move(rows)}};
}

}  // namespace fracspec
