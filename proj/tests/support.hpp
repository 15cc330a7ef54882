#ifndef FRACSPEC_TESTS_SUPPORT_HPP
#define FRACSPEC_TESTS_SUPPORT_HPP

// Test-only oracles, independent of the library implementation paths they
// check.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fracspec/special_fn.hpp"

namespace fracspec::test {

// ln Gamma by the Stirling series after shifting the argument above 30.
// Truncation error is below 1e-16 there; the shift adds a handful of log
// evaluations.  Independent of the Lanczos path in the library.
inline double stirling_log_gamma(double x) {
    long double shift = 0.0L;
    long double z = x;
    while (z < 30.0L) {
        shift += std::log(z);
        z += 1.0L;
    }
    // Bernoulli-number coefficients B_{2n} / (2n (2n-1))
    static const long double coef[] = {
        1.0L / 12.0L,           -1.0L / 360.0L,         1.0L / 1260.0L,
        -1.0L / 1680.0L,        1.0L / 1188.0L,         -691.0L / 360360.0L,
        1.0L / 156.0L,          -3617.0L / 122400.0L,
    };
    const long double pi = std::numbers::pi_v<long double>;
    long double acc = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2.0L * pi);
    long double zp = z;
    for (const long double c : coef) {
        acc += c / zp;
        zp *= z * z;
    }
    return static_cast<double>(acc - shift);
}

// binomial(x, k) for real upper argument, via Gamma ratios.
inline double real_binomial(double x, int k) {
    if (k == 0) return 1.0;
    return std::exp(log_gamma(x + 1.0) - log_gamma(k + 1.0) - log_gamma(x - k + 1.0));
}

// Explicit definition of G_n^{(a,b)}(x): the binomial sum for P_n^{(a,b)} at
// t = 2x - 1.  Cancellation-prone for large n; used only as a small-n oracle.
inline double jacobi_explicit_sum(const JacobiBasis& basis, int n, double x) {
    const double t = 2.0 * x - 1.0;
    double acc = 0.0;
    for (int m = 0; m <= n; ++m) {
        const double p = real_binomial(n + basis.a, m) * real_binomial(n + basis.b, n - m);
        acc += p * std::pow(t - 1.0, n - m) * std::pow(t + 1.0, m);
    }
    return acc / std::pow(2.0, n);
}

// Monomial coefficients (ascending powers of x) of G_n^{(a,b)}(x), built by
// running the three-term recurrence on coefficient vectors.
inline std::vector<double> jacobi_monomial_coeffs(const JacobiBasis& basis, int n) {
    const double a = basis.a, b = basis.b;
    std::vector<double> pm1{1.0};                             // G_0
    if (n == 0) return pm1;
    // G_1(x) = (a+1) + (a+b+2) (x-1) = (a - b)/2 - ... in t; expand in x directly:
    // P_1(t) = (a+1) + (a+b+2)(t-1)/2 with t = 2x-1
    std::vector<double> p{(a + 1.0) - (a + b + 2.0), (a + b + 2.0)};
    for (int k = 2; k <= n; ++k) {
        const double s = 2.0 * k + a + b;
        const double denom = 2.0 * k * (k + a + b) * (s - 2.0);
        // c1t * t + c1c applied to p, minus c0 * pm1, all over denom; t = 2x - 1
        const double c1t = (s - 1.0) * s * (s - 2.0);
        const double c1c = (s - 1.0) * (a * a - b * b);
        const double c0 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        std::vector<double> next(k + 1, 0.0);
        for (size_t i = 0; i < p.size(); ++i) {
            next[i] += (c1c - c1t) * p[i];      // c1t*(2x-1) -> -c1t + 2 c1t x
            next[i + 1] += 2.0 * c1t * p[i];
        }
        for (size_t i = 0; i < pm1.size(); ++i) next[i] -= c0 * pm1[i];
        for (double& v : next) v /= denom;
        pm1 = std::move(p);
        p = std::move(next);
    }
    return p;
}

inline std::mt19937 rng(uint32_t seed = 12345) { return std::mt19937{seed}; }

}  // namespace fracspec::test

#endif
