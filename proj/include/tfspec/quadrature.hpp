#pragma once

#include "tfspec/function_spec.hpp"

#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace tfspec {

inline constexpr int kMaxQuadraturePoints = 2048;

/// Gauss rule for the weight (1-x)^a (1+x)^b on [-1, 1].
struct QuadratureRule {
    std::vector<double> nodes;    ///< strictly increasing, interior
    std::vector<double> weights;  ///< all positive
    double a = 0.0;
    double b = 0.0;

    std::size_t size() const { return nodes.size(); }
};

QuadratureRule gauss_legendre(int n);

/// Golub-Welsch construction from the Jacobi recurrence; requires a, b > -1.
QuadratureRule gauss_jacobi(int n, double a, double b);

/// Shared immutable rule from a process-wide cache (thread-safe).
std::shared_ptr<const QuadratureRule> cached_gauss_jacobi(int n, double a, double b);

/// Integral of (1-x)^a (1+x)^b over [-1, 1], i.e. the zeroth moment of the weight.
double jacobi_weight_mass(double a, double b);

/// sum_j w_j f(x_j). f is the smooth factor; the rule's weight is implicit.
double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);
double integrate(const QuadratureRule& rule, const FunctionSpec& f);

/// Physical nodes and effective weights such that
///   integral over f.support of f(x) (1-x)^a (1+x)^b g(x) dx  ~=  sum_j w_j g(x_j)
/// for smooth g. Endpoint powers that touch the support ends are absorbed into a
/// mapped Gauss-Jacobi rule; the rest are sampled.
struct WeightedNodes {
    std::vector<double> x;
    std::vector<double> w;
};
WeightedNodes weighted_nodes(const FunctionSpec& f, double a, double b, int npts);

}  // namespace tfspec
