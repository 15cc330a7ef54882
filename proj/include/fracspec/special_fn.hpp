#ifndef FRACSPEC_SPECIAL_FN_HPP
#define FRACSPEC_SPECIAL_FN_HPP

#include <span>
#include <vector>

namespace fracspec {

/// Weight exponents of a shifted Jacobi family on (0,1):
/// omega^{(a,b)}(x) = (1-x)^a x^b with a, b > -1.
struct JacobiBasis {
    double a = 0.0;
    double b = 0.0;
    bool operator==(const JacobiBasis&) const = default;
};

/// ln Gamma(x) for x > 0.  Lanczos approximation (g = 7, 9 terms);
/// relative error below 1e-13 on [0.5, 200].
double log_gamma(double x);

/// Shifted Jacobi polynomial G_n^{(a,b)}(x) = P_n^{(a,b)}(2x - 1),
/// evaluated by the three-term recurrence.
double jacobi_eval(const JacobiBasis& basis, int n, double x);

/// G_0 .. G_n at one point in a single recurrence pass; out.size() must be n+1.
void jacobi_eval_all(const JacobiBasis& basis, int n, double x, std::span<double> out);

/// Weighted L2 norm of G_n^{(a,b)} on (0,1):
/// ( Gamma(n+a+1) Gamma(n+b+1) / ((2n+a+b+1) Gamma(n+1) Gamma(n+a+b+1)) )^{1/2}.
double jacobi_norm(const JacobiBasis& basis, int n);

/// k-th derivative of G_n^{(a,b)} via the degree-lowering identity
/// d^k/dx^k G_n^{(a,b)} = Gamma(n+k+a+b+1)/Gamma(n+a+b+1) G_{n-k}^{(a+k,b+k)}.
/// Returns 0 when k > n.
double jacobi_deriv(const JacobiBasis& basis, int n, int k, double x);

/// Boundary exponent beta in [alpha-1, 1] determined by
///   r = sin(pi beta) / (sin(pi (alpha-beta)) + sin(pi beta)).
/// The ratio decreases monotonically from 1 at beta = alpha-1 to 0 at
/// beta = 1, so r = 1 maps to alpha-1 and r = 0 maps to 1.  Solved by
/// bisection to residual <= 1e-14; the degenerate r values return the
/// corresponding endpoint without iteration.
double solve_beta(double alpha, double r);

/// Parameters derived from (alpha, r): the boundary exponent beta, the
/// constant c** = sin(pi alpha) / (sin(pi(alpha-beta)) + sin(pi beta)),
/// and the diffusion eigenvalues
///   lambda_k = -c** Gamma(k+1+alpha) / Gamma(k+1),  k = 0..N,
/// which are positive and strictly increasing for 1 < alpha < 2.
struct FractionalParams {
    double alpha = 0.0;
    double r = 0.0;
    double beta = 0.0;
    double c_star_star = 0.0;
    std::vector<double> lambda;
    bool operator==(const FractionalParams&) const = default;
};

FractionalParams fractional_params(double alpha, double r, int degree);

}  // namespace fracspec

#endif
