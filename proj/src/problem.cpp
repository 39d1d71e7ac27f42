#include "tfspec/problem.hpp"

#include "tfspec/advection.hpp"
#include "tfspec/diffusion.hpp"
#include "tfspec/error.hpp"
#include "tfspec/specfun.hpp"

#include <cmath>
#include <sstream>

namespace tfspec {

std::string_view to_string(Regime r) {
    return r == Regime::advection ? "advection" : "diffusion";
}

void ProblemSpec::validate() const {
    if (!std::isfinite(alpha1) || !std::isfinite(alpha2) || !std::isfinite(d) || !std::isfinite(lambda))
        throw DomainError("problem: non-finite parameter");
    if (!(lambda > 0.0)) throw DomainError("problem: lambda must be positive");
    if (regime == Regime::advection) {
        if (!(alpha2 >= 0.0 && alpha2 < alpha1 && alpha1 < 1.0))
            throw DomainError("advection problem requires 0 <= alpha2 < alpha1 < 1");
    } else {
        if (!(alpha2 >= 1.0 && alpha2 < alpha1 && alpha1 < 2.0))
            throw DomainError("diffusion problem requires 1 <= alpha2 < alpha1 < 2");
    }
    for (const auto& term : rhs) term.validate();
}

std::vector<std::string> ProblemSpec::warnings() const {
    std::vector<std::string> out;
    const double half_gap = 0.5 * (alpha1 - alpha2);
    const double g2 = std::pow(gamma_fn(half_gap + 1.0), 2);
    std::ostringstream msg;
    if (regime == Regime::advection) {
        const double bound = -g2 / std::pow(2.0, alpha1 - alpha2);
        if (!(d > bound)) {
            msg << "d = " << d << " is not above the well-posedness bound " << bound;
            out.push_back(msg.str());
        }
    } else {
        const double bound = g2 / std::pow(2.0, alpha1 - alpha2 + 1.0);
        if (!(std::fabs(d) < bound)) {
            msg << "|d| = " << std::fabs(d) << " is not below the well-posedness bound " << bound;
            out.push_back(msg.str());
        }
    }
    return out;
}

std::vector<double> evaluate(const SpectralSolution& sol, const std::vector<double>& xs) {
    return sol.regime == Regime::advection ? evaluate_advection(sol, xs) : evaluate_diffusion(sol, xs);
}

}  // namespace tfspec
