#pragma once

// Riemann-Liouville and tempered fractional integrals/derivatives on [-1, 1].
//
// Closed forms act on generalized Jacobi terms c (1+x)^mu (1-x)^nu J_n^{a,b}(x):
//   left  integral of order s maps (1+x)^d J_n^{g,d}  to  G(n+d+1)/G(n+d+s+1) (1+x)^{d+s} J_n^{g-s,d+s}
//   right integral of order s maps (1-x)^d J_n^{d,g}  to  G(n+d+1)/G(n+d+s+1) (1-x)^{d+s} J_n^{d+s,g-s}
// and the derivatives invert these maps. A quadrature-based convolution is
// provided as an independent check of the closed forms.

#include "tfspec/function_spec.hpp"
#include "tfspec/specfun.hpp"

#include <span>
#include <vector>

namespace tfspec {

enum class Side { left, right };

struct WeightedJacobiTerm {
    double coeff = 1.0;
    double mu = 0.0;  ///< exponent of (1+x)
    double nu = 0.0;  ///< exponent of (1-x)
    int n = 0;
    JacobiParams params{};
    Side side = Side::left;

    double operator()(double x) const;
};

/// Left (side == left) or right Riemann-Liouville integral of order alpha >= 0.
/// Throws PatternError unless the term has the shape the identity needs.
WeightedJacobiTerm rl_integral_jacobi(const WeightedJacobiTerm& t, double alpha);

/// Inverse of rl_integral_jacobi. The result exponent mu - alpha (or nu - alpha)
/// must stay above -1.
WeightedJacobiTerm rl_derivative_jacobi(const WeightedJacobiTerm& t, double alpha);

/// FunctionSpec for e^{rate x} t(x), with the term's exponents as endpoint exponents.
FunctionSpec to_function_spec(const WeightedJacobiTerm& t, double rate = 0.0);

inline constexpr int kOracleQuadraturePoints = 256;
inline constexpr int kReferenceQuadraturePoints = 512;

/// Fractional integral of order alpha > 0 of f at x by Gauss-Jacobi quadrature of
/// the convolution, with the kernel singularity and f's exponent at the
/// integration endpoint absorbed into the weight. f must be supported on [-1, 1].
double rl_integral_numeric(const FunctionSpec& f, double alpha, double x,
                           int npts = kOracleQuadraturePoints, Side side = Side::left);

/// Tempered integral: e^{-lambda x} I^alpha (e^{lambda s} f) on the left,
/// e^{lambda x} I^alpha (e^{-lambda s} f) on the right.
double tempered_integral(const FunctionSpec& f, double alpha, double lambda, double x,
                         int npts = kOracleQuadraturePoints, Side side = Side::left);

/// Solver basis families: e^{-lambda x} I_left^order P_n (left) or
/// e^{lambda x} I_right^order P_n (right), where P_n is L_n or, for the pair
/// kind, L_n + L_{n+1} on the left and L_n - L_{n+1} on the right (the
/// combination vanishing at the side's base point).
struct BasisFamily {
    enum class Kind { legendre, legendre_pair };
    Kind kind = Kind::legendre;
    double order = 0.0;
    Side side = Side::left;
};

/// The untempered part I^order P_n of basis function n, as a Jacobi term.
WeightedJacobiTerm basis_term(const BasisFamily& family, int n);

/// Tempered fractional derivative of order alpha (same side as the family) of
/// basis function n at xs, via the closed-form derivative identity.
std::vector<double> tempered_derivative_on_basis(const BasisFamily& family, int n, double alpha,
                                                 double lambda, std::span<const double> xs);

}  // namespace tfspec
