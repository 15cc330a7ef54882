#ifndef FRACSPEC_SOLVER_HPP
#define FRACSPEC_SOLVER_HPP

#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "fracspec/quadrature.hpp"
#include "fracspec/special_fn.hpp"
#include "fracspec/spectral.hpp"

namespace fracspec {

/// Problem coefficients b(x), c(x) and source f(x): a constant, a piecewise
/// constant with interior breakpoints, or a polynomial in monomial form.
struct Constant {
    double value = 0.0;
    bool operator==(const Constant&) const = default;
};

struct PiecewiseConstant {
    std::vector<double> breakpoints;  // ascending, strictly inside (0,1)
    std::vector<double> values;       // one per piece, size = breakpoints.size() + 1
    bool operator==(const PiecewiseConstant&) const = default;
};

struct Polynomial {
    std::vector<double> coeffs;  // monomial coefficients, ascending degree
    bool operator==(const Polynomial&) const = default;
};

using CoefficientFn = std::variant<Constant, PiecewiseConstant, Polynomial>;

double coeff_eval(const CoefficientFn& fn, double x);
/// Pointwise derivative; the distributional part of a piecewise constant at
/// its breakpoints is ignored.
double coeff_deriv(const CoefficientFn& fn, double x);
std::vector<double> coeff_breakpoints(const CoefficientFn& fn);
bool coeff_is_zero(const CoefficientFn& fn);
/// Throws if breakpoints are malformed or piece counts do not line up.
void coeff_validate(const CoefficientFn& fn, const char* name);

/// One two-point boundary value problem
///   L_r^alpha u + b Du + c u = f on (0,1), u(0) = u(1) = 0.
struct ProblemSpec {
    double alpha = 1.5;
    double r = 0.5;
    CoefficientFn advection = Constant{0.0};  // b
    CoefficientFn reaction = Constant{0.0};   // c
    CoefficientFn source = Constant{0.0};     // f
    bool operator==(const ProblemSpec&) const = default;

    void validate() const;
    /// c(x) - Db(x)/2 >= 0 sampled on a 1000-point grid.  Advisory only:
    /// the theory needs it for well-posedness, assembly does not.
    bool sign_condition_ok() const;
};

/// Petrov-Galerkin system A c = rhs of order degree+1.  The diffusion block
/// is exactly diag(lambda) from the eigenrelation; advection and reaction
/// blocks and the load vector are assembled by quadrature.
struct DiscreteSystem {
    Eigen::MatrixXd A;
    Eigen::VectorXd rhs;
    FractionalParams params;
    ProblemSpec problem;
};

/// phi_N in the trial basis (alpha-beta, beta); u_N(x) = omega(x) phi_N(x).
struct Solution {
    Expansion phi;
    FractionalParams params;
    ProblemSpec problem;
};

DiscreteSystem assemble(const ProblemSpec& problem, int degree, const QuadRule& rule);

/// Dense direct solve with partial pivoting; rejects the system when the
/// relative residual exceeds 1e-10.
Solution solve(const DiscreteSystem& system);

/// u_N on a grid; exactly 0 at x = 0 and x = 1.
std::vector<double> evaluate_u(const Solution& sol, std::span<const double> xs);

void to_json(nlohmann::json& j, const CoefficientFn& fn);
void from_json(const nlohmann::json& j, CoefficientFn& fn);
void to_json(nlohmann::json& j, const ProblemSpec& p);
void from_json(const nlohmann::json& j, ProblemSpec& p);
void to_json(nlohmann::json& j, const FractionalParams& p);
void from_json(const nlohmann::json& j, FractionalParams& p);
void to_json(nlohmann::json& j, const DiscreteSystem& s);
void to_json(nlohmann::json& j, const Solution& s);
void from_json(const nlohmann::json& j, Solution& s);

}  // namespace fracspec

#endif
