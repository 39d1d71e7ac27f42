#pragma once

// Petrov-Galerkin spectral scheme for the tempered fractional advection problem
// (0 <= alpha2 < alpha1 < 1). Trial functions phi_n = e^{-lambda x} I_left^{alpha1/2} L_n,
// test functions psi_k = e^{lambda x} I_right^{alpha1/2} L_k.

#include "tfspec/linalg.hpp"
#include "tfspec/problem.hpp"

#include <span>
#include <vector>

namespace tfspec {

/// Extra quadrature points beyond N used for matrix entries and load vectors.
inline constexpr int kMatrixQuadratureExtra = 32;
inline constexpr int kLoadQuadratureExtra = 64;

/// diag(2/(2n+1)), n < N.
Matrix assemble_a1(int N);

/// Entry (k, n): d-term pairing of test k with trial n; satisfies
/// A2(k,n) = (-1)^{n+k} A2(n,k).
Matrix assemble_a2(int N, double alpha1, double alpha2, int quad_extra = kMatrixQuadratureExtra);

/// f_k = integral of f psi_k, k < N.
std::vector<double> assemble_advection_rhs(const ProblemSpec& p, int N);

SpectralSolution solve_advection(const ProblemSpec& p, int N);

/// u_N at xs in [-1, 1]; u_N(-1) = 0.
std::vector<double> evaluate_advection(const SpectralSolution& sol, std::span<const double> xs);

}  // namespace tfspec
