#ifndef FRACSPEC_QUADRATURE_HPP
#define FRACSPEC_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

namespace fracspec {

/// Gauss-Legendre rule mapped to (0,1).  Nodes are strictly increasing and
/// interior, weights positive and palindromic, sum of weights equal to 1.
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int size() const { return static_cast<int>(nodes.size()); }
};

/// n-node rule: roots of the degree-n Legendre polynomial found by Newton
/// iteration from Chebyshev-point initial guesses, mapped affinely to (0,1).
/// Exact for polynomials of degree <= 2n-1.
QuadRule gauss_legendre(int n);

/// Sum w_i g(x_i), optionally split at interior breakpoints so each piece is
/// integrated with the affinely rescaled rule.  Never evaluates g at 0 or 1.
/// Throws if g produces a non-finite value (naming the node) or if the
/// breakpoints are not strictly increasing inside (0,1).
double integrate(const QuadRule& rule, const std::function<double(double)>& g,
                 std::span<const double> breakpoints = {});

}  // namespace fracspec

#endif
