#pragma once

// Scalar special functions: gamma, Jacobi polynomials with arbitrary real
// parameters, Legendre polynomials and the two-parameter Mittag-Leffler
// function. All functions are pure and thread-safe.

#include <Eigen/Core>

#include <span>

namespace tfspec {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Largest degree jacobi_eval/jacobi_table accept.
inline constexpr int kMaxJacobiDegree = 512;

/// Exponents of J_n^{a,b}. Any finite reals; a, b <= -1 is legal.
struct JacobiParams {
    double a = 0.0;
    double b = 0.0;
};

/// Gamma function. Throws PoleError at 0, -1, -2, ... and OverflowError past
/// the double range.
double gamma_fn(double x);

/// log|Gamma(x)|; throws PoleError at non-positive integers.
double log_gamma(double x);

/// 1/Gamma(x), which is zero at the poles of Gamma and never overflows.
double rgamma(double x);

/// Gamma(x)/Gamma(y) without intermediate overflow. A pole in y gives 0;
/// a pole in x throws PoleError.
double gamma_ratio(double x, double y);

/// J_n^{a,b}(x) as defined by the Rodrigues formula, for 0 <= n <= 512.
double jacobi_eval(int n, JacobiParams p, double x);

/// Row n, column j holds jacobi_eval(n, p, xs[j]). Uses the active SIMD
/// kernel; results are bit-identical to jacobi_eval.
RowMatrix jacobi_table(int nmax, JacobiParams p, std::span<const double> xs);

/// L_n(x) by the Legendre three-term recurrence.
double legendre_eval(int n, double x);

/// E_{g,b}(z) = sum_k z^k / Gamma(g k + b), g > 0.
double mittag_leffler(double g, double b, double z);

}  // namespace tfspec
