#include "fracspec/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracspec {

Expansion analyze(const std::function<double(double)>& f, const JacobiBasis& basis, int degree,
                  const QuadRule& rule, std::span<const double> breakpoints) {
    if (degree < 0) throw std::invalid_argument("analyze: degree must be >= 0");
    Expansion e;
    e.basis = basis;
    e.coeffs.resize(degree + 1);
    for (int j = 0; j <= degree; ++j) {
        const double nrm = jacobi_norm(basis, j);
        e.coeffs[j] = integrate(
            rule,
            [&](double x) { return weight_eval(basis, x) * f(x) * jacobi_eval(basis, j, x) / nrm; },
            breakpoints);
    }
    return e;
}

double synthesize(const Expansion& e, double x) {
    const int n = e.degree();
    if (n < 0) return 0.0;
    std::vector<double> vals(n + 1);
    jacobi_eval_all(e.basis, n, x, vals);
    double acc = 0.0;
    for (int j = 0; j <= n; ++j) acc += e.coeffs[j] * vals[j] / jacobi_norm(e.basis, j);
    return acc;
}

double sobolev_norm(const Expansion& e, double s) {
    double acc = 0.0;
    for (size_t j = 0; j < e.coeffs.size(); ++j) {
        const double jj = static_cast<double>(j);
        acc += std::pow(1.0 + jj * jj, s) * e.coeffs[j] * e.coeffs[j];
    }
    return std::sqrt(acc);
}

double weight_eval(const JacobiBasis& basis, double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("weight_eval: x must lie in [0,1], got " + std::to_string(x));
    if (x == 0.0 && basis.b < 0.0)
        throw std::domain_error("weight_eval: weight is singular at x = 0 for b < 0");
    if (x == 1.0 && basis.a < 0.0)
        throw std::domain_error("weight_eval: weight is singular at x = 1 for a < 0");
    return std::pow(1.0 - x, basis.a) * std::pow(x, basis.b);
}

void to_json(nlohmann::json& j, const JacobiBasis& basis) {
    j = nlohmann::json{{"a", basis.a}, {"b", basis.b}};
}

void from_json(const nlohmann::json& j, JacobiBasis& basis) {
    j.at("a").get_to(basis.a);
    j.at("b").get_to(basis.b);
    if (!(basis.a > -1.0 && basis.b > -1.0))
        throw std::domain_error("JacobiBasis: exponents must be > -1");
}

void to_json(nlohmann::json& j, const Expansion& e) {
    j = nlohmann::json{{"basis", e.basis}, {"coeffs", e.coeffs}};
}

void from_json(const nlohmann::json& j, Expansion& e) {
    j.at("basis").get_to(e.basis);
    j.at("coeffs").get_to(e.coeffs);
}

}  // namespace fracspec
