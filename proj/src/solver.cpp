#include "fracspec/solver.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace fracspec {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

double coeff_eval(const CoefficientFn& fn, double x) {
    return std::visit(
        overloaded{
            [](const Constant& c) { return c.value; },
            [x](const PiecewiseConstant& p) {
                const auto it = std::lower_bound(p.breakpoints.begin(), p.breakpoints.end(), x);
                return p.values[static_cast<size_t>(it - p.breakpoints.begin())];
            },
            [x](const Polynomial& p) {
                double acc = 0.0;
                for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + *it;
                return acc;
            },
        },
        fn);
}

double coeff_deriv(const CoefficientFn& fn, double x) {
    return std::visit(
        overloaded{
            [](const Constant&) { return 0.0; },
            [](const PiecewiseConstant&) { return 0.0; },
            [x](const Polynomial& p) {
                double acc = 0.0;
                for (size_t k = p.coeffs.size(); k-- > 1;)
                    acc = acc * x + static_cast<double>(k) * p.coeffs[k];
                return acc;
            },
        },
        fn);
}

std::vector<double> coeff_breakpoints(const CoefficientFn& fn) {
    if (const auto* p = std::get_if<PiecewiseConstant>(&fn)) return p->breakpoints;
    return {};
}

bool coeff_is_zero(const CoefficientFn& fn) {
    return std::visit(
        overloaded{
            [](const Constant& c) { return c.value == 0.0; },
            [](const PiecewiseConstant& p) {
                return std::all_of(p.values.begin(), p.values.end(),
                                   [](double v) { return v == 0.0; });
            },
            [](const Polynomial& p) {
                return std::all_of(p.coeffs.begin(), p.coeffs.end(),
                                   [](double v) { return v == 0.0; });
            },
        },
        fn);
}

void coeff_validate(const CoefficientFn& fn, const char* name) {
    if (const auto* p = std::get_if<PiecewiseConstant>(&fn)) {
        if (p->values.size() != p->breakpoints.size() + 1)
            throw std::invalid_argument(std::string(name) +
                                        ": piecewise values must number breakpoints + 1");
        double prev = 0.0;
        for (const double b : p->breakpoints) {
            if (!(b > prev && b < 1.0))
                throw std::invalid_argument(
                    std::string(name) + ": breakpoints must be strictly increasing inside (0,1)");
            prev = b;
        }
    }
}

void ProblemSpec::validate() const {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw std::invalid_argument("problem: alpha must lie in (1,2), got " +
                                    std::to_string(alpha));
    if (!(r >= 0.0 && r <= 1.0))
        throw std::invalid_argument("problem: r must lie in [0,1], got " + std::to_string(r));
    coeff_validate(advection, "problem b");
    coeff_validate(reaction, "problem c");
    coeff_validate(source, "problem f");
}

bool ProblemSpec::sign_condition_ok() const {
    constexpr int grid = 1000;
    for (int i = 0; i < grid; ++i) {
        const double x = (i + 0.5) / grid;
        if (coeff_eval(reaction, x) - 0.5 * coeff_deriv(advection, x) < -1e-12) return false;
    }
    return true;
}

DiscreteSystem assemble(const ProblemSpec& problem, int degree, const QuadRule& rule) {
    problem.validate();
    if (degree < 0) throw std::invalid_argument("assemble: degree must be >= 0");
    if (!problem.sign_condition_ok())
        std::cerr << "fracspec: warning: c(x) - Db(x)/2 < 0 somewhere on (0,1); "
                     "well-posedness is not guaranteed\n";

    DiscreteSystem sys;
    sys.problem = problem;
    sys.params = fractional_params(problem.alpha, problem.r, degree);
    const double beta = sys.params.beta;
    const JacobiBasis trial{problem.alpha - beta, beta};
    const JacobiBasis test{beta, problem.alpha - beta};
    const int m = degree + 1;

    sys.A = Eigen::MatrixXd::Zero(m, m);
    sys.rhs = Eigen::VectorXd::Zero(m);
    for (int k = 0; k < m; ++k) sys.A(k, k) = sys.params.lambda[k];

    std::vector<double> trial_norm(m), test_norm(m);
    for (int k = 0; k < m; ++k) {
        trial_norm[k] = jacobi_norm(trial, k);
        test_norm[k] = jacobi_norm(test, k);
    }

    auto entry = [&](const CoefficientFn& coeff, std::span<const double> breaks,
                     const std::function<double(int, double)>& trial_factor, int i, int j,
                     const char* block) {
        double value;
        try {
            value = integrate(
                rule,
                [&](double x) {
                    return weight_eval(test, x) * coeff_eval(coeff, x) * trial_factor(j, x) *
                           jacobi_eval(test, i, x) / test_norm[i];
                },
                breaks);
        } catch (const std::exception& ex) {
            throw std::runtime_error("assemble: " + std::string(block) + " entry (" +
                                     std::to_string(i) + "," + std::to_string(j) +
                                     "): " + ex.what());
        }
        if (!std::isfinite(value))
            throw std::runtime_error("assemble: non-finite " + std::string(block) + " entry (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
        return value;
    };

    if (!coeff_is_zero(problem.advection)) {
        // D[omega Ghat_j] by the product rule; the endpoint-singular weight
        // factors are only ever sampled at interior Gauss nodes.
        const double wa = trial.a, wb = trial.b;
        auto d_weighted_trial = [&](int j, double x) {
            const double dw = -wa * weight_eval({wa - 1.0, wb}, x) +
                              wb * weight_eval({wa, wb - 1.0}, x);
            return (dw * jacobi_eval(trial, j, x) +
                    weight_eval(trial, x) * jacobi_deriv(trial, j, 1, x)) /
                   trial_norm[j];
        };
        const auto breaks = coeff_breakpoints(problem.advection);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                sys.A(i, j) += entry(problem.advection, breaks, d_weighted_trial, i, j, "advection");
    }

    if (!coeff_is_zero(problem.reaction)) {
        auto weighted_trial = [&](int j, double x) {
            return weight_eval(trial, x) * jacobi_eval(trial, j, x) / trial_norm[j];
        };
        const auto breaks = coeff_breakpoints(problem.reaction);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                sys.A(i, j) += entry(problem.reaction, breaks, weighted_trial, i, j, "reaction");
    }

    {
        const auto breaks = coeff_breakpoints(problem.source);
        for (int i = 0; i < m; ++i) {
            try {
                sys.rhs(i) = integrate(
                    rule,
                    [&](double x) {
                        return weight_eval(test, x) * coeff_eval(problem.source, x) *
                               jacobi_eval(test, i, x) / test_norm[i];
                    },
                    breaks);
            } catch (const std::exception& ex) {
                throw std::runtime_error("assemble: rhs entry " + std::to_string(i) + ": " +
                                         ex.what());
            }
            if (!std::isfinite(sys.rhs(i)))
                throw std::runtime_error("assemble: non-finite rhs entry " + std::to_string(i));
        }
    }

    return sys;
}

Solution solve(const DiscreteSystem& system) {
    const auto m = system.A.rows();
    if (m < 1 || system.A.cols() != m || system.rhs.size() != m)
        throw std::invalid_argument("solve: malformed system");
    if (!system.A.allFinite() || !system.rhs.allFinite())
        throw std::runtime_error("solve: system contains non-finite entries");

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(system.A);
    const Eigen::VectorXd c = lu.solve(system.rhs);
    const double rhs_norm = system.rhs.lpNorm<Eigen::Infinity>();
    const double residual = (system.A * c - system.rhs).lpNorm<Eigen::Infinity>();
    const double rel = rhs_norm > 0.0 ? residual / rhs_norm : residual;
    if (!c.allFinite() || rel > 1e-10) {
        std::ostringstream msg;
        msg << "solve: system is singular or too ill-conditioned (relative residual " << rel
            << "); the degree may be too small for the data";
        throw std::runtime_error(msg.str());
    }

    Solution sol;
    sol.params = system.params;
    sol.problem = system.problem;
    sol.phi.basis = {system.problem.alpha - system.params.beta, system.params.beta};
    sol.phi.coeffs.assign(c.data(), c.data() + m);
    return sol;
}

std::vector<double> evaluate_u(const Solution& sol, std::span<const double> xs) {
    std::vector<double> out(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        if (!(x >= 0.0 && x <= 1.0))
            throw std::domain_error("evaluate_u: x must lie in [0,1], got " + std::to_string(x));
        out[i] = (x == 0.0 || x == 1.0)
                     ? 0.0
                     : weight_eval(sol.phi.basis, x) * synthesize(sol.phi, x);
    }
    return out;
}

void to_json(nlohmann::json& j, const CoefficientFn& fn) {
    std::visit(overloaded{
                   [&](const Constant& c) {
                       j = nlohmann::json{{"type", "constant"}, {"value", c.value}};
                   },
                   [&](const PiecewiseConstant& p) {
                       j = nlohmann::json{{"type", "piecewise"},
                                          {"breakpoints", p.breakpoints},
                                          {"values", p.values}};
                   },
                   [&](const Polynomial& p) {
                       j = nlohmann::json{{"type", "polynomial"}, {"coeffs", p.coeffs}};
                   },
               },
               fn);
}

void from_json(const nlohmann::json& j, CoefficientFn& fn) {
    const auto type = j.at("type").get<std::string>();
    if (type == "constant") {
        fn = Constant{j.at("value").get<double>()};
    } else if (type == "piecewise") {
        PiecewiseConstant p;
        j.at("breakpoints").get_to(p.breakpoints);
        j.at("values").get_to(p.values);
        fn = std::move(p);
    } else if (type == "polynomial") {
        Polynomial p;
        j.at("coeffs").get_to(p.coeffs);
        fn = std::move(p);
    } else {
        throw std::invalid_argument("coefficient: unknown type '" + type + "'");
    }
    coeff_validate(fn, "coefficient");
}

void to_json(nlohmann::json& j, const ProblemSpec& p) {
    j = nlohmann::json{
        {"alpha", p.alpha}, {"r", p.r}, {"b", p.advection}, {"c", p.reaction}, {"f", p.source}};
}

void from_json(const nlohmann::json& j, ProblemSpec& p) {
    j.at("alpha").get_to(p.alpha);
    j.at("r").get_to(p.r);
    j.at("b").get_to(p.advection);
    j.at("c").get_to(p.reaction);
    j.at("f").get_to(p.source);
    p.validate();
}

void to_json(nlohmann::json& j, const FractionalParams& p) {
    j = nlohmann::json{{"alpha", p.alpha},
                       {"r", p.r},
                       {"beta", p.beta},
                       {"c_star_star", p.c_star_star},
                       {"lambda", p.lambda}};
}

void from_json(const nlohmann::json& j, FractionalParams& p) {
    j.at("alpha").get_to(p.alpha);
    j.at("r").get_to(p.r);
    j.at("beta").get_to(p.beta);
    j.at("c_star_star").get_to(p.c_star_star);
    j.at("lambda").get_to(p.lambda);
}

void to_json(nlohmann::json& j, const DiscreteSystem& s) {
    std::vector<std::vector<double>> rows(s.A.rows());
    for (Eigen::Index i = 0; i < s.A.rows(); ++i) {
        rows[i].resize(s.A.cols());
        for (Eigen::Index k = 0; k < s.A.cols(); ++k) rows[i][k] = s.A(i, k);
    }
    j = nlohmann::json{{"problem", s.problem},
                       {"params", s.params},
                       {"A", rows},
                       {"rhs", std::vector<double>(s.rhs.data(), s.rhs.data() + s.rhs.size())}};
}

void to_json(nlohmann::json& j, const Solution& s) {
    j = nlohmann::json{{"problem", s.problem}, {"params", s.params}, {"phi", s.phi}};
}

void from_json(const nlohmann::json& j, Solution& s) {
    j.at("problem").get_to(s.problem);
    j.at("params").get_to(s.params);
    j.at("phi").get_to(s.phi);
}

}  // namespace fracspec
