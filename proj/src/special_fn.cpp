#include "fracspec/special_fn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fracspec {

namespace {

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
constexpr double lanczos_g = 7.0;
constexpr double lanczos_coef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double log_gamma_lanczos(double x) {
    // valid for x >= 0.5
    double series = lanczos_coef[0];
    for (int k = 1; k < 9; ++k) series += lanczos_coef[k] / (x - 1.0 + k);
    const double t = x + lanczos_g - 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (x - 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: requires x > 0, got " + std::to_string(x));
    if (x < 0.5)
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
               log_gamma_lanczos(1.0 - x);
    return log_gamma_lanczos(x);
}

double jacobi_eval(const JacobiBasis& basis, int n, double x) {
    if (n < 0) throw std::invalid_argument("jacobi_eval: degree must be >= 0");
    const double a = basis.a, b = basis.b;
    const double t = 2.0 * x - 1.0;
    if (n == 0) return 1.0;
    double ykm1 = 1.0;
    double yk = (a + 1.0) + 0.5 * (a + b + 2.0) * (t - 1.0);
    for (int k = 2; k <= n; ++k) {
        const double s = 2.0 * k + a + b;
        const double denom = 2.0 * k * (k + a + b) * (s - 2.0);
        const double c1 = (s - 1.0) * (s * (s - 2.0) * t + a * a - b * b);
        const double c0 = -2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        const double ykp1 = (c1 * yk + c0 * ykm1) / denom;
        ykm1 = yk;
        yk = ykp1;
    }
    return yk;
}

void jacobi_eval_all(const JacobiBasis& basis, int n, double x, std::span<double> out) {
    if (n < 0) throw std::invalid_argument("jacobi_eval_all: degree must be >= 0");
    if (out.size() != static_cast<size_t>(n) + 1)
        throw std::invalid_argument("jacobi_eval_all: output span has wrong size");
    const double a = basis.a, b = basis.b;
    const double t = 2.0 * x - 1.0;
    out[0] = 1.0;
    if (n == 0) return;
    out[1] = (a + 1.0) + 0.5 * (a + b + 2.0) * (t - 1.0);
    for (int k = 2; k <= n; ++k) {
        const double s = 2.0 * k + a + b;
        const double denom = 2.0 * k * (k + a + b) * (s - 2.0);
        const double c1 = (s - 1.0) * (s * (s - 2.0) * t + a * a - b * b);
        const double c0 = -2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        out[k] = (c1 * out[k - 1] + c0 * out[k - 2]) / denom;
    }
}

double jacobi_norm(const JacobiBasis& basis, int n) {
    if (n < 0) throw std::invalid_argument("jacobi_norm: degree must be >= 0");
    const double a = basis.a, b = basis.b;
    const double lg = log_gamma(n + a + 1.0) + log_gamma(n + b + 1.0) -
                      log_gamma(n + 1.0) - log_gamma(n + a + b + 1.0) -
                      std::log(2.0 * n + a + b + 1.0);
    return std::exp(0.5 * lg);
}

double jacobi_deriv(const JacobiBasis& basis, int n, int k, double x) {
    if (n < 0 || k < 0) throw std::invalid_argument("jacobi_deriv: degree and order must be >= 0");
    if (k == 0) return jacobi_eval(basis, n, x);
    if (k > n) return 0.0;
    const double apb = basis.a + basis.b;
    const double factor = std::exp(log_gamma(n + k + apb + 1.0) - log_gamma(n + apb + 1.0));
    return factor * jacobi_eval({basis.a + k, basis.b + k}, n - k, x);
}

double solve_beta(double alpha, double r) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw std::domain_error("solve_beta: alpha must lie in (1,2), got " + std::to_string(alpha));
    if (!(r >= 0.0 && r <= 1.0))
        throw std::domain_error("solve_beta: r must lie in [0,1], got " + std::to_string(r));
    // limit cases: the sine ratio hits 1 at beta = alpha-1 and 0 at beta = 1
    if (r == 1.0) return alpha - 1.0;
    if (r == 0.0) return 1.0;

    constexpr double pi = std::numbers::pi;
    auto ratio = [alpha](double beta) {
        const double sb = std::sin(pi * beta);
        return sb / (std::sin(pi * (alpha - beta)) + sb);
    };

    constexpr double eps = 1e-12;
    double lo = alpha - 1.0 + eps;
    double hi = 1.0 - eps;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (ratio(mid) > r)
            lo = mid;
        else
            hi = mid;
    }
    const double beta = 0.5 * (lo + hi);
    if (std::abs(r - ratio(beta)) > 1e-14)
        throw std::runtime_error("solve_beta: residual above 1e-14 at beta = " + std::to_string(beta));
    return beta;
}

FractionalParams fractional_params(double alpha, double r, int degree) {
    if (degree < 0) throw std::invalid_argument("fractional_params: degree must be >= 0");
    FractionalParams p;
    p.alpha = alpha;
    p.r = r;
    p.beta = solve_beta(alpha, r);
    constexpr double pi = std::numbers::pi;
    p.c_star_star =
        std::sin(pi * alpha) / (std::sin(pi * (alpha - p.beta)) + std::sin(pi * p.beta));
    p.lambda.resize(degree + 1);
    for (int k = 0; k <= degree; ++k)
        p.lambda[k] = -p.c_star_star * std::exp(log_gamma(k + 1.0 + alpha) - log_gamma(k + 1.0));
    return p;
}

}  // namespace fracspec
