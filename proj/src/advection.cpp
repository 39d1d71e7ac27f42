#include "tfspec/advection.hpp"

#include "assembly.hpp"
#include "tfspec/error.hpp"
#include "tfspec/quadrature.hpp"
#include "tfspec/specfun.hpp"

#include <cmath>

namespace tfspec {

namespace {

void check_advection_orders(double alpha1, double alpha2) {
    if (!(alpha2 >= 0.0 && alpha2 <= alpha1 && alpha1 < 1.0))
        throw DomainError("advection: requires 0 <= alpha2 <= alpha1 < 1");
}

}  // namespace

Matrix assemble_a1(int N) {
    detail::check_regime_size(N, 1, "assemble_a1");
    Matrix a = Matrix::Zero(N, N);
    for (int n = 0; n < N; ++n) a(n, n) = 2.0 / (2.0 * n + 1.0);
    return a;
}

Matrix assemble_a2(int N, double alpha1, double alpha2, int quad_extra) {
    detail::check_regime_size(N, 1, "assemble_a2");
    check_advection_orders(alpha1, alpha2);
    const double mu = 0.5 * (alpha1 - alpha2);
    const auto rule = cached_gauss_jacobi(N + quad_extra, mu, mu);
    const RowMatrix test = jacobi_table(N - 1, {mu, -mu}, rule->nodes);
    const RowMatrix trial = jacobi_table(N - 1, {-mu, mu}, rule->nodes);
    Matrix a = detail::weighted_gram(rule->weights, test, trial);
    std::vector<double> scale(static_cast<std::size_t>(N));
    for (int n = 0; n < N; ++n) scale[static_cast<std::size_t>(n)] = gamma_ratio(n + 1.0, n + 1.0 + mu);
    for (int k = 0; k < N; ++k)
        for (int n = 0; n < N; ++n) a(k, n) *= scale[static_cast<std::size_t>(k)] * scale[static_cast<std::size_t>(n)];
    return a;
}

std::vector<double> assemble_advection_rhs(const ProblemSpec& p, int N) {
    detail::check_regime_size(N, 1, "assemble_advection_rhs");
    const double half = 0.5 * p.alpha1;
    std::vector<double> f = detail::test_moments(p.rhs, half, p.lambda, N, N + kLoadQuadratureExtra);
    for (int k = 0; k < N; ++k) f[static_cast<std::size_t>(k)] *= gamma_ratio(k + 1.0, k + 1.0 + half);
    return f;
}

SpectralSolution solve_advection(const ProblemSpec& p, int N) {
    if (p.regime != Regime::advection) throw DomainError("solve_advection: problem is not in the advection regime");
    p.validate();
    detail::check_regime_size(N, 1, "solve_advection");
    Matrix a = assemble_a1(N);
    if (p.d != 0.0) a += p.d * assemble_a2(N, p.alpha1, p.alpha2);
    const std::vector<double> f = assemble_advection_rhs(p, N);
    const Vector rhs = Eigen::Map<const Vector>(f.data(), N);
    const LuResult lu = lu_solve(a, rhs);

    SpectralSolution sol;
    sol.coeffs.assign(lu.x.data(), lu.x.data() + N);
    sol.alpha1 = p.alpha1;
    sol.lambda = p.lambda;
    sol.regime = Regime::advection;
    sol.rcond = lu.rcond;
    sol.residual = lu.residual_inf;
    sol.warnings = p.warnings();
    return sol;
}

std::vector<double> evaluate_advection(const SpectralSolution& sol, std::span<const double> xs) {
    const double half = 0.5 * sol.alpha1;
    std::vector<double> c(sol.coeffs.size());
    for (std::size_t n = 0; n < c.size(); ++n)
        c[n] = sol.coeffs[n] * gamma_ratio(n + 1.0, n + 1.0 + half);
    std::vector<double> u = detail::jacobi_series(c, {-half, half}, xs);
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const double x = xs[j];
        u[j] = x <= -1.0 ? 0.0 : u[j] * std::exp(-sol.lambda * x) * std::pow(1.0 + x, half);
    }
    return u;
}

}  // namespace tfspec
