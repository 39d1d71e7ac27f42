#include "tfspec/diffusion.hpp"

#include "assembly.hpp"
#include "tfspec/error.hpp"
#include "tfspec/quadrature.hpp"
#include "tfspec/specfun.hpp"

#include <cmath>

namespace tfspec {

namespace {

void check_diffusion_orders(double alpha1, double alpha2) {
    if (!(alpha2 >= 1.0 && alpha2 <= alpha1 && alpha1 < 2.0))
        throw DomainError("diffusion: requires 1 <= alpha2 <= alpha1 < 2");
}

}  // namespace

Matrix assemble_b1(int N) {
    detail::check_regime_size(N, 2, "assemble_b1");
    Matrix b = Matrix::Zero(N - 1, N);
    for (int k = 0; k < N - 1; ++k) {
        const double gk = 2.0 / (2.0 * k + 1.0);
        b(k, k) = gk;
        if (k > 0) b(k, k - 1) = gk;
    }
    return b;
}

Matrix assemble_b2(int N, double alpha1, double alpha2, int quad_extra) {
    detail::check_regime_size(N, 2, "assemble_b2");
    check_diffusion_orders(alpha1, alpha2);
    const double mu = 0.5 * (alpha1 - alpha2);
    const auto rule = cached_gauss_jacobi(N + quad_extra, mu, mu + 1.0);
    const RowMatrix test = jacobi_table(N - 2, {mu, -mu}, rule->nodes);
    const RowMatrix trial = jacobi_table(N - 1, {-mu, mu + 1.0}, rule->nodes);
    Matrix b = detail::weighted_gram(rule->weights, test, trial);
    // The trial image (1+x) J_n^{0,1} picks up G(n+2)/G(n+2+mu); the test image of L_k picks up
    // G(k+1)/G(k+1+mu).
    for (int k = 0; k < N - 1; ++k) {
        const double sk = gamma_ratio(k + 1.0, k + 1.0 + mu);
        for (int n = 0; n < N; ++n) b(k, n) *= sk * gamma_ratio(n + 2.0, n + 2.0 + mu);
    }
    return b;
}

std::vector<double> assemble_boundary_row(int N, double alpha1) {
    detail::check_regime_size(N, 1, "assemble_boundary_row");
    if (!(alpha1 >= 1.0 && alpha1 < 2.0)) throw DomainError("assemble_boundary_row: requires 1 <= alpha1 < 2");
    const double nu = 0.5 * (alpha1 - 1.0);
    const double r = rgamma(0.5 * (alpha1 + 1.0));
    std::vector<double> row(static_cast<std::size_t>(N));
    for (int n = 0; n < N; ++n)
        row[static_cast<std::size_t>(n)] = (n + 1.0) * gamma_ratio(n + 1.0 + nu, n + 2.0 - nu) * r;
    return row;
}

std::vector<double> assemble_diffusion_rhs(const ProblemSpec& p, int N) {
    detail::check_regime_size(N, 2, "assemble_diffusion_rhs");
    const double a = 0.5 * (p.alpha1 + 1.0);
    std::vector<double> f = detail::test_moments(p.rhs, a, p.lambda, N - 1, N + kLoadQuadratureExtra);
    for (int k = 0; k < N - 1; ++k) f[static_cast<std::size_t>(k)] *= gamma_ratio(k + 1.0, k + 1.0 + a);
    f.push_back(std::pow(2.0, 0.5 * (p.alpha1 - 3.0)) * std::exp(p.lambda) * p.ub);
    return f;
}

SpectralSolution solve_diffusion(const ProblemSpec& p, int N) {
    if (p.regime != Regime::diffusion) throw DomainError("solve_diffusion: problem is not in the diffusion regime");
    p.validate();
    detail::check_regime_size(N, 2, "solve_diffusion");
    Matrix b(N, N);
    Matrix galerkin = assemble_b1(N);
    if (p.d != 0.0) galerkin += p.d * assemble_b2(N, p.alpha1, p.alpha2);
    b.topRows(N - 1) = galerkin;
    const std::vector<double> row = assemble_boundary_row(N, p.alpha1);
    for (int n = 0; n < N; ++n) b(N - 1, n) = row[static_cast<std::size_t>(n)];

    const std::vector<double> f = assemble_diffusion_rhs(p, N);
    const Vector rhs = Eigen::Map<const Vector>(f.data(), N);
    const LuResult lu = lu_solve(b, rhs);

    SpectralSolution sol;
    sol.coeffs.assign(lu.x.data(), lu.x.data() + N);
    sol.alpha1 = p.alpha1;
    sol.lambda = p.lambda;
    sol.regime = Regime::diffusion;
    sol.rcond = lu.rcond;
    sol.residual = lu.residual_inf;
    sol.warnings = p.warnings();
    return sol;
}

std::vector<double> evaluate_diffusion(const SpectralSolution& sol, std::span<const double> xs) {
    const double nu = 0.5 * (sol.alpha1 - 1.0);
    const double power = 0.5 * (sol.alpha1 + 1.0);
    std::vector<double> c(sol.coeffs.size());
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = sol.coeffs[n] * gamma_ratio(n + 2.0, n + 2.0 + nu);
    std::vector<double> u = detail::jacobi_series(c, {-nu, power}, xs);
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const double x = xs[j];
        u[j] = x <= -1.0 ? 0.0 : u[j] * std::exp(-sol.lambda * x) * std::pow(1.0 + x, power);
    }
    return u;
}

}  // namespace tfspec
