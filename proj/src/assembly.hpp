#pragma once

// Shared assembly kernels for the two solvers.

#include "tfspec/function_spec.hpp"
#include "tfspec/linalg.hpp"
#include "tfspec/quadrature.hpp"
#include "tfspec/specfun.hpp"

#include <span>
#include <vector>

namespace tfspec::detail {

/// out(k, n) = sum_j w_j g(k, j) h(n, j).
Matrix weighted_gram(std::span<const double> w, const RowMatrix& g, const RowMatrix& h);

/// integral of f(x) e^{lambda x} (1-x)^a J_k^{a,-a}(x) dx for k < count.
std::vector<double> test_moments(const CompositeFunction& f, double a, double lambda, int count,
                                 int npts);

/// sum_n c_n J_n^{p}(x_j) for each j.
std::vector<double> jacobi_series(std::span<const double> c, JacobiParams p, std::span<const double> xs);

void check_regime_size(int N, int min_n, const char* who);

}  // namespace tfspec::detail
