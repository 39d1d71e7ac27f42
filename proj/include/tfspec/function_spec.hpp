#pragma once

#include <functional>
#include <vector>

namespace tfspec {

/// A scalar function on a support interval [lo, hi] inside [-1, 1] together
/// with its endpoint singularity exponents: near lo it behaves like
/// (x - lo)^left_exponent, near hi like (hi - x)^right_exponent.
///
/// Quadrature never samples f itself near a singular endpoint. It samples the
/// smooth factor f(x) / ((x - lo)^left_exponent (hi - x)^right_exponent) and
/// absorbs the powers into a Gauss-Jacobi weight. Supply `factor` directly when
/// it is available in closed form; otherwise it is derived from `eval`.
struct FunctionSpec {
    std::function<double(double)> eval;
    std::function<double(double)> factor;
    double left_exponent = 0.0;
    double right_exponent = 0.0;
    double lo = -1.0;
    double hi = 1.0;

    static FunctionSpec from_eval(std::function<double(double)> f, double left_exponent = 0.0,
                                  double right_exponent = 0.0);
    static FunctionSpec from_factor(std::function<double(double)> g, double left_exponent,
                                    double right_exponent, double lo = -1.0, double hi = 1.0);

    /// f(x) on (lo, hi), zero outside the support.
    double operator()(double x) const;
    double smooth_factor(double x) const;

    /// Throws SingularityError unless both exponents exceed -1 and lo < hi.
    void validate() const;
};

/// Sum of FunctionSpec terms, each with its own support and exponents. Piecewise
/// functions (jumps at interior points) are sums of terms with split supports.
using CompositeFunction = std::vector<FunctionSpec>;

double evaluate(const CompositeFunction& f, double x);

}  // namespace tfspec
