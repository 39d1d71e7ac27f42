#pragma once

#include "tfspec/function_spec.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tfspec {

enum class Regime { advection, diffusion };

std::string_view to_string(Regime r);

/// D^{alpha1,lambda} u + d D^{alpha2,lambda} u = f on (-1, 1), left-sided tempered
/// Riemann-Liouville derivatives. Advection: 0 <= alpha2 < alpha1 < 1. Diffusion:
/// 1 <= alpha2 < alpha1 < 2 with D^{alpha1-1,lambda} u(1) = ub.
struct ProblemSpec {
    double alpha1 = 0.5;
    double alpha2 = 0.0;
    double d = 0.0;
    double lambda = 1.0;
    CompositeFunction rhs;
    double ub = 0.0;
    Regime regime = Regime::advection;

    /// Throws DomainError on violated parameter ranges.
    void validate() const;

    /// Notes on parameters outside the range covered by the well-posedness
    /// bound on d. These are advisory only.
    std::vector<std::string> warnings() const;
};

struct SpectralSolution {
    std::vector<double> coeffs;
    double alpha1 = 0.0;
    double lambda = 0.0;
    Regime regime = Regime::advection;
    double rcond = 0.0;
    double residual = 0.0;  ///< ||A u - f||_inf of the solved system
    std::vector<std::string> warnings;

    int size() const { return static_cast<int>(coeffs.size()); }
};

/// Dispatches on sol.regime.
std::vector<double> evaluate(const SpectralSolution& sol, const std::vector<double>& xs);

}  // namespace tfspec
