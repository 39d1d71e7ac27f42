#pragma once

// Petrov-Galerkin tau scheme for the tempered fractional diffusion problem
// (1 <= alpha2 < alpha1 < 2). Trial functions
// phi_n = e^{-lambda x} I_left^{(alpha1-1)/2} (L_n + L_{n+1}), n < N; test functions
// psi_k = e^{lambda x} I_right^{(alpha1+1)/2} L_k, k < N-1. The last equation imposes
// D^{alpha1-1} (e^{lambda x} u_N) (1) = e^{lambda} ub.

#include "tfspec/advection.hpp"
#include "tfspec/linalg.hpp"
#include "tfspec/problem.hpp"

#include <span>
#include <vector>

namespace tfspec {

/// (N-1) x N, entry (k, n) = integral of (L_n + L_{n+1}) L_k.
Matrix assemble_b1(int N);

/// (N-1) x N d-term block.
Matrix assemble_b2(int N, double alpha1, double alpha2, int quad_extra = kMatrixQuadratureExtra);

/// Length N: value of D^{alpha1-1}(e^{lambda x} phi_n) at x = 1, divided by 2^{(3-alpha1)/2}.
std::vector<double> assemble_boundary_row(int N, double alpha1);

/// Galerkin loads f_k (k < N-1) followed by 2^{(alpha1-3)/2} e^{lambda} ub.
std::vector<double> assemble_diffusion_rhs(const ProblemSpec& p, int N);

SpectralSolution solve_diffusion(const ProblemSpec& p, int N);

std::vector<double> evaluate_diffusion(const SpectralSolution& sol, std::span<const double> xs);

}  // namespace tfspec
