#include "fracspec/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fracspec {

namespace {

// P_n(t) and P_{n-1}(t) on (-1,1) by the Legendre recurrence.
void legendre_pair(int n, double t, double& pn, double& pnm1) {
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
    }
    pn = p1;
    pnm1 = p0;
}

}  // namespace

QuadRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: node count must be >= 1");
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // i-th root counted from t = +1, Chebyshev-point initial guess
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            double pn, pnm1;
            legendre_pair(n, t, pn, pnm1);
            const double dpn = n * (t * pn - pnm1) / (t * t - 1.0);
            const double dt = pn / dpn;
            t -= dt;
            if (std::abs(dt) <= 1e-15) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw std::runtime_error("gauss_legendre: Newton iteration failed for root " +
                                     std::to_string(i) + " of " + std::to_string(n));
        double pn, pnm1;
        legendre_pair(n, t, pn, pnm1);
        const double dpn = n * (t * pn - pnm1) / (t * t - 1.0);
        const double node_hi = 0.5 * (1.0 + t);
        const double w = 1.0 / ((1.0 - t * t) * dpn * dpn);
        rule.nodes[n - 1 - i] = node_hi;
        rule.nodes[i] = 1.0 - node_hi;  // exact mirror
        rule.weights[n - 1 - i] = w;
        rule.weights[i] = w;
    }
    return rule;
}

double integrate(const QuadRule& rule, const std::function<double(double)>& g,
                 std::span<const double> breakpoints) {
    auto piece = [&](double lo, double hi) {
        double acc = 0.0;
        for (int q = 0; q < rule.size(); ++q) {
            const double x = lo + (hi - lo) * rule.nodes[q];
            const double v = g(x);
            if (!std::isfinite(v))
                throw std::runtime_error("integrate: integrand returned a non-finite value at x = " +
                                         std::to_string(x));
            acc += rule.weights[q] * v;
        }
        return (hi - lo) * acc;
    };
    if (breakpoints.empty()) return piece(0.0, 1.0);
    double prev = 0.0;
    double total = 0.0;
    for (const double b : breakpoints) {
        if (!(b > prev && b < 1.0))
            throw std::invalid_argument(
                "integrate: breakpoints must be strictly increasing inside (0,1)");
        total += piece(prev, b);
        prev = b;
    }
    total += piece(prev, 1.0);
    return total;
}

}  // namespace fracspec
