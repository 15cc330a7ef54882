#ifndef FRACSPEC_SPECTRAL_HPP
#define FRACSPEC_SPECTRAL_HPP

#include <functional>
#include <span>
#include <vector>

#include <json.hpp>

#include "fracspec/quadrature.hpp"
#include "fracspec/special_fn.hpp"

namespace fracspec {

/// Finite expansion v(x) = sum_j coeffs[j] Ghat_j^{(a,b)}(x) against the
/// orthonormal family Ghat_j = G_j / |||G_j|||.  With orthonormal storage the
/// weighted L2 norm is the plain Euclidean norm of the coefficients.
struct Expansion {
    JacobiBasis basis;
    std::vector<double> coeffs;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const Expansion&) const = default;
};

/// Coefficients of f against the orthonormal family up to `degree`:
/// coeffs[j] = integral of omega^{(a,b)} f Ghat_j, evaluated with `rule`
/// (split at `breakpoints` when given).  This is the weighted L2 projection.
Expansion analyze(const std::function<double(double)>& f, const JacobiBasis& basis, int degree,
                  const QuadRule& rule, std::span<const double> breakpoints = {});

/// Evaluate the expansion at x in a single recurrence pass.
double synthesize(const Expansion& e, double x);

/// Coefficient-decay Sobolev norm ( sum_j (1+j^2)^s coeffs[j]^2 )^{1/2}.
/// s may be negative; s = 0 gives the weighted L2 norm (Parseval).
double sobolev_norm(const Expansion& e, double s);

/// omega^{(a,b)}(x) = (1-x)^a x^b.  Endpoints are admitted only when the
/// corresponding exponent is nonnegative; otherwise a domain error.
double weight_eval(const JacobiBasis& basis, double x);

void to_json(nlohmann::json& j, const JacobiBasis& basis);
void from_json(const nlohmann::json& j, JacobiBasis& basis);
void to_json(nlohmann::json& j, const Expansion& e);
void from_json(const nlohmann::json& j, Expansion& e);

}  // namespace fracspec

#endif
