#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tfspec/error.hpp"
#include "tfspec/fracops.hpp"
#include "tfspec/specfun.hpp"

#include <cmath>
#include <vector>

using namespace tfspec;
using doctest::Approx;

namespace {

WeightedJacobiTerm legendre_term(int n, Side side = Side::left) {
    WeightedJacobiTerm t;
    t.n = n;
    t.side = side;
    return t;
}

FunctionSpec constant(double c) {
    return FunctionSpec::from_factor([c](double) { return c; }, 0.0, 0.0);
}

}  // namespace

TEST_CASE("half integral of the constant 1") {
    const auto r = rl_integral_jacobi(legendre_term(0), 0.5);
    CHECK(r.mu == 0.5);
    CHECK(r.params.a == -0.5);
    CHECK(r.params.b == 0.5);
    CHECK(r.coeff == Approx(1.0 / std::tgamma(1.5)).epsilon(1e-15));
    CHECK(r(0.0) == Approx(1.0 / std::tgamma(1.5)).epsilon(1e-14));
}

TEST_CASE("order zero is the identity") {
    WeightedJacobiTerm t;
    t.coeff = 1.7;
    t.n = 4;
    t.params = {0.2, 0.6};
    t.mu = 0.6;
    const auto r = rl_integral_jacobi(t, 0.0);
    CHECK(r.coeff == t.coeff);
    CHECK(r.mu == t.mu);
}

TEST_CASE("closed form against the convolution oracle") {
    const auto r = rl_integral_jacobi(legendre_term(3), 0.7);
    CHECK(r(0.25) == Approx(0.039403888601662802592).epsilon(1e-12));  // mpmath quad
    CHECK(r(0.25) == Approx(rl_integral_numeric(to_function_spec(legendre_term(3)), 0.7, 0.25)).epsilon(1e-9));
    // Right side: mirror image of the left one.
    const auto rr = rl_integral_jacobi(legendre_term(3, Side::right), 0.7);
    CHECK(rr(-0.25) == Approx(-r(0.25)).epsilon(1e-13));
}

TEST_CASE("derivative undoes the integral") {
    WeightedJacobiTerm t;
    t.coeff = -0.8;
    t.n = 6;
    t.params = {1.1, -0.3};
    t.mu = -0.3;
    for (double alpha : {0.1, 0.99, 1.0, 1.7}) {
        const auto back = rl_derivative_jacobi(rl_integral_jacobi(t, alpha), alpha);
        CHECK(back.coeff == Approx(t.coeff).epsilon(1e-14));
        CHECK(back.mu == Approx(t.mu).epsilon(1e-15));
        CHECK(back.params.a == Approx(t.params.a).epsilon(1e-15));
    }
    // Half derivative of (1+x)^{1/2} J_0^{-1/2,1/2} is Gamma(3/2).
    WeightedJacobiTerm h;
    h.mu = 0.5;
    h.params = {-0.5, 0.5};
    const auto d = rl_derivative_jacobi(h, 0.5);
    CHECK(d.mu == 0.0);
    CHECK(d(0.3) == Approx(std::tgamma(1.5)).epsilon(1e-14));
}

TEST_CASE("derivative spot check against a finite difference of the numeric integral") {
    // D^a f = d/dx I^{1-a} f for 0 < a < 1.
    const double a = 0.35, x = 0.6, h = 1e-4;
    const auto f = to_function_spec(legendre_term(2));
    const double fd =
        (rl_integral_numeric(f, 1 - a, x + h) - rl_integral_numeric(f, 1 - a, x - h)) / (2 * h);
    CHECK(rl_derivative_jacobi(legendre_term(2), a)(x) == Approx(fd).epsilon(1e-6));
}

TEST_CASE("pattern errors") {
    WeightedJacobiTerm bad;
    bad.params = {0.0, 0.3};  // mu should equal b for a left term
    CHECK_THROWS_AS(rl_integral_jacobi(bad, 0.5), PatternError);
    WeightedJacobiTerm r = legendre_term(1, Side::right);
    r.mu = 0.2;
    CHECK_THROWS_AS(rl_integral_jacobi(r, 0.5), PatternError);
    // Derivative of the constant of order 1.2 leaves (1+x)^{-1.2}: not integrable.
    CHECK_THROWS_AS(rl_derivative_jacobi(legendre_term(0), 1.2), PatternError);
    CHECK_THROWS_AS(rl_integral_jacobi(legendre_term(0), -0.1), DomainError);
}

TEST_CASE("numeric fractional integral") {
    for (double x : {-0.7, 0.0, 0.9}) CHECK(rl_integral_numeric(constant(1.0), 1.0, x) == Approx(x + 1.0).epsilon(1e-14));
    CHECK(rl_integral_numeric(constant(1.0), 0.5, 0.0) == Approx(1.0 / std::tgamma(1.5)).epsilon(1e-14));
    CHECK(rl_integral_numeric(constant(1.0), 0.5, -1.0) == 0.0);
    // Beta closed form of the power-law convolution.
    const auto p = FunctionSpec::from_factor([](double) { return 1.0; }, 0.25, 0.0);
    CHECK(rl_integral_numeric(p, 0.65, 0.8) ==
          Approx(std::tgamma(1.25) / std::tgamma(1.9) * std::pow(1.8, 0.9)).epsilon(1e-13));
    CHECK_THROWS_AS(rl_integral_numeric(constant(1.0), 0.0, 0.1), DomainError);
}

TEST_CASE("tempered integral") {
    const auto one = constant(1.0);
    const auto l2 = FunctionSpec::from_factor([](double x) { return legendre_eval(2, x); }, 0.0, 0.0);
    for (double x : {-0.5, 0.2, 1.0}) {
        CHECK(tempered_integral(one, 1.0, 1.0, x) == Approx(1.0 - std::exp(-x - 1.0)).epsilon(1e-14));
        CHECK(tempered_integral(l2, 0.45, 0.0, x) == rl_integral_numeric(l2, 0.45, x));
    }
    CHECK(tempered_integral(l2, 0.4, 1.0, 0.3) == Approx(-0.32400885030991087066).epsilon(1e-12));  // mpmath
    CHECK(tempered_integral(l2, 0.4, 1.0, 0.3, kReferenceQuadraturePoints) ==
          Approx(tempered_integral(l2, 0.4, 1.0, 0.3)).epsilon(1e-12));
    // Right side of a constant, tempered: e^{x} int_x^1 e^{-s} ds = 1 - e^{x-1}.
    CHECK(tempered_integral(one, 1.0, 1.0, -0.2, kOracleQuadraturePoints, Side::right) ==
          Approx(1.0 - std::exp(-1.2)).epsilon(1e-14));
}

TEST_CASE("basis derivatives") {
    const std::vector<double> xs{-0.9, -0.3, 0.4, 0.95};
    const double alpha1 = 0.7, lambda = 1.3;
    // Advection trial functions: the alpha1/2 derivative returns e^{-lambda x} L_n.
    const BasisFamily adv{BasisFamily::Kind::legendre, alpha1 / 2, Side::left};
    for (int n : {0, 3, 8}) {
        const auto d = tempered_derivative_on_basis(adv, n, alpha1 / 2, lambda, xs);
        for (std::size_t j = 0; j < xs.size(); ++j)
            CHECK(d[j] == Approx(std::exp(-lambda * xs[j]) * legendre_eval(n, xs[j])).epsilon(1e-13));
    }
    // Diffusion trial functions: the (alpha1 - 1) derivative vanishes at -1.
    const double a = 1.6;
    const BasisFamily diff{BasisFamily::Kind::legendre_pair, (a - 1) / 2, Side::left};
    const std::vector<double> left{-1.0};
    for (int n : {0, 1, 5}) CHECK(tempered_derivative_on_basis(diff, n, a - 1, lambda, left)[0] == Approx(0.0));
    // The pair L_n + L_{n+1} as a Jacobi term.
    const auto t = basis_term({BasisFamily::Kind::legendre_pair, 0.0, Side::left}, 4);
    CHECK(t(0.37) == Approx(legendre_eval(4, 0.37) + legendre_eval(5, 0.37)).epsilon(1e-14));
    const auto tr = basis_term({BasisFamily::Kind::legendre_pair, 0.0, Side::right}, 4);
    CHECK(tr(0.37) == Approx(legendre_eval(4, 0.37) - legendre_eval(5, 0.37)).epsilon(1e-14));
}
