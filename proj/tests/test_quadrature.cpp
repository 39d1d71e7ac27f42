#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tfspec/error.hpp"
#include "tfspec/quadrature.hpp"
#include "tfspec/specfun.hpp"

#include <cmath>
#include <numbers>
#include <thread>

using namespace tfspec;
using doctest::Approx;

TEST_CASE("small gauss-legendre rules") {
    const auto r1 = gauss_legendre(1);
    CHECK(r1.nodes[0] == Approx(0.0).epsilon(1e-15));
    CHECK(r1.weights[0] == Approx(2.0).epsilon(1e-15));
    const auto r2 = gauss_legendre(2);
    CHECK(r2.nodes[0] == Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r2.nodes[1] == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r2.weights[0] == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("gauss-legendre monomials, n=20") {
    const auto r = gauss_legendre(20);
    double odd = 0.0, even = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) {
        odd += r.weights[j] * std::pow(r.nodes[j], 39);
        even += r.weights[j] * std::pow(r.nodes[j], 38);
    }
    CHECK(std::fabs(odd) < 1e-15);
    CHECK(even == Approx(2.0 / 39.0).epsilon(1e-13));
}

TEST_CASE("rules are sorted, interior and positive") {
    for (auto [a, b] : {std::pair{0.0, 0.0}, {-0.9, 0.4}, {2.5, -0.5}})
        for (int n : {1, 5, 64, 300}) {
            const auto r = gauss_jacobi(n, a, b);
            REQUIRE(r.size() == static_cast<std::size_t>(n));
            for (std::size_t j = 0; j < r.size(); ++j) {
                CHECK(r.weights[j] > 0.0);
                CHECK(std::fabs(r.nodes[j]) < 1.0);
                if (j) CHECK(r.nodes[j] > r.nodes[j - 1]);
            }
        }
}

TEST_CASE("gauss_jacobi reductions and moments") {
    const auto gl = gauss_legendre(17), gj = gauss_jacobi(17, 0.0, 0.0);
    CHECK(gl.nodes == gj.nodes);
    CHECK(gl.weights == gj.weights);

    const auto r = gauss_jacobi(8, 0.3, 0.3);
    double s = 0.0;
    for (double w : r.weights) s += w;
    const double mass = std::pow(2.0, 1.6) * std::pow(std::tgamma(1.3), 2) / std::tgamma(2.6);
    CHECK(s == Approx(mass).epsilon(1e-14));
    CHECK(jacobi_weight_mass(0.3, 0.3) == Approx(mass).epsilon(1e-14));

    // int (1-x)^0.3 (1+x)^-0.4 x dx, mpmath quad to 40 digits.
    const auto q = gauss_jacobi(8, 0.3, -0.4);
    double m1 = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) m1 += q.weights[j] * q.nodes[j];
    CHECK(m1 == Approx(-0.95537337805777159509).epsilon(1e-12));
}

TEST_CASE("symmetric weights give symmetric rules") {
    const auto r = gauss_jacobi(33, -0.45, -0.45);
    for (std::size_t j = 0; j < r.size(); ++j) {
        CHECK(r.nodes[j] == -r.nodes[r.size() - 1 - j]);
        CHECK(r.weights[j] == Approx(r.weights[r.size() - 1 - j]).epsilon(1e-13));
    }
}

TEST_CASE("integrate") {
    CHECK(integrate(gauss_legendre(4), [](double) { return 1.0; }) == Approx(2.0).epsilon(1e-15));
    CHECK(std::fabs(integrate(gauss_legendre(8), [](double x) { return legendre_eval(3, x); })) < 1e-14);
    CHECK(integrate(gauss_legendre(24), [](double x) { return std::exp(x); }) ==
          Approx(std::numbers::e - 1.0 / std::numbers::e).epsilon(1e-13));
    CHECK_THROWS_AS(integrate(gauss_legendre(4), [](double) { return std::nan(""); }), EvaluationError);
}

TEST_CASE("integrate a FunctionSpec with absorbed endpoint powers") {
    // (1+x)^-0.5 (1-x)^0.25 cos x, absorbed into the rule weight.
    const auto f = FunctionSpec::from_factor([](double x) { return std::cos(x); }, -0.5, 0.25);
    const auto r = gauss_jacobi(40, 0.25, -0.5);
    const double v = integrate(r, f);
    const auto w = weighted_nodes(f, 0.0, 0.0, 40);
    double s = 0.0;
    for (double wj : w.w) s += wj;
    CHECK(s == Approx(v).epsilon(1e-14));
}

TEST_CASE("weighted_nodes on a sub-interval support") {
    // int_0^1 x^-0.3 (1-x)^0.5 dx = B(0.7, 1.5), the (1-x)^0.5 factor taken from the weight.
    const auto f = FunctionSpec::from_factor([](double) { return 1.0; }, -0.3, 0.0, 0.0, 1.0);
    const auto w = weighted_nodes(f, 0.5, 0.0, 20);
    double s = 0.0;
    for (double wj : w.w) s += wj;
    CHECK(s == Approx(std::tgamma(0.7) * std::tgamma(1.5) / std::tgamma(2.2)).epsilon(1e-14));
    for (double x : w.x) CHECK((x > 0.0 && x < 1.0));
}

TEST_CASE("argument errors") {
    CHECK_THROWS_AS(gauss_jacobi(0, 0, 0), SizeError);
    CHECK_THROWS_AS(gauss_jacobi(kMaxQuadraturePoints + 1, 0, 0), SizeError);
    CHECK_THROWS_AS(gauss_jacobi(4, -1.0, 0.0), DomainError);
    CHECK_THROWS_AS(weighted_nodes(FunctionSpec::from_factor([](double) { return 1.0; }, -1.2, 0.0), 0, 0, 8),
                    SingularityError);
}

TEST_CASE("cache returns the same rule across threads") {
    std::shared_ptr<const QuadratureRule> a, b;
    std::thread t1([&] { a = cached_gauss_jacobi(50, 0.1, 0.2); });
    std::thread t2([&] { b = cached_gauss_jacobi(50, 0.1, 0.2); });
    t1.join();
    t2.join();
    CHECK(a->nodes == b->nodes);
    CHECK(a->nodes == gauss_jacobi(50, 0.1, 0.2).nodes);
}
