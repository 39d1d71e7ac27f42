#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tfspec/advection.hpp"
#include "tfspec/diffusion.hpp"
#include "tfspec/harness.hpp"
#include "tfspec/simd/kernels.hpp"
#include "tfspec/specfun.hpp"

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

using namespace tfspec;
using simd::Isa;

namespace {

std::vector<double> random_vec(std::mt19937_64& g, std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = u(g);
    return v;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::vector<Isa> vector_isas() {
    std::vector<Isa> out;
    if (simd::isa_available(Isa::avx2)) out.push_back(Isa::avx2);
    return out;
}

// Restores the active kernel set on scope exit.
struct ActiveGuard {
    Isa saved = simd::active_isa();
    ~ActiveGuard() { simd::set_active(saved); }
};

}  // namespace

TEST_CASE("scalar kernels are always available") {
    CHECK(simd::isa_available(Isa::scalar));
    CHECK(simd::kernels(Isa::scalar).isa == Isa::scalar);
    CHECK(simd::isa_name(Isa::avx2) == "avx2");
    MESSAGE("active kernels: " << simd::isa_name(simd::active_isa()));
}

TEST_CASE("elementwise kernels match the scalar reference bit for bit") {
    std::mt19937_64 g(42);
    const auto& ref = simd::kernels(Isa::scalar);
    for (Isa isa : vector_isas()) {
        const auto& k = simd::kernels(isa);
        for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 33u, 1000u}) {
            const auto x = random_vec(g, n), y0 = random_vec(g, n);
            auto y1 = y0, y2 = y0;
            ref.axpy(0.37, x.data(), y1.data(), n);
            k.axpy(0.37, x.data(), y2.data(), n);
            CHECK(bitwise_equal(y1, y2));
            y1 = y0, y2 = y0;
            ref.mul_inplace(x.data(), y1.data(), n);
            k.mul_inplace(x.data(), y2.data(), n);
            CHECK(bitwise_equal(y1, y2));
        }
    }
}

TEST_CASE("recurrence tables match the scalar reference bit for bit") {
    std::mt19937_64 g(3);
    const auto& ref = simd::kernels(Isa::scalar);
    for (Isa isa : vector_isas()) {
        const auto& k = simd::kernels(isa);
        for (std::size_t nmax : {0u, 1u, 2u, 17u}) {
            auto a = random_vec(g, nmax + 1, 0.5, 2.0), b = random_vec(g, nmax + 1), c = random_vec(g, nmax + 1, 0.0, 1.0);
            if (nmax >= 1) c[1] = 0.0;
            const simd::ThreeTermRecurrence rec{a, b, c};
            for (std::size_t m : {1u, 4u, 5u, 13u, 64u}) {
                const auto xs = random_vec(g, m);
                std::vector<double> o1((nmax + 1) * m), o2(o1.size());
                ref.recurrence_table(rec, xs, o1);
                k.recurrence_table(rec, xs, o2);
                CHECK(bitwise_equal(o1, o2));
            }
        }
    }
}

TEST_CASE("reductions agree to rounding") {
    std::mt19937_64 g(11);
    const auto& ref = simd::kernels(Isa::scalar);
    for (Isa isa : vector_isas()) {
        const auto& k = simd::kernels(isa);
        for (std::size_t n : {0u, 1u, 5u, 8u, 9u, 127u, 4096u}) {
            const auto x = random_vec(g, n), y = random_vec(g, n), w = random_vec(g, n, 0.0, 1.0);
            double s1 = 0.0, s3 = 0.0;
            for (std::size_t j = 0; j < n; ++j) s1 += std::fabs(x[j] * y[j]), s3 += std::fabs(w[j] * x[j] * y[j]);
            CHECK(std::fabs(k.dot(x.data(), y.data(), n) - ref.dot(x.data(), y.data(), n)) <= 1e-15 * (1 + s1));
            CHECK(std::fabs(k.dot3(w.data(), x.data(), y.data(), n) - ref.dot3(w.data(), x.data(), y.data(), n)) <=
                  1e-15 * (1 + s3));
        }
    }
}

TEST_CASE("set_active switches the dispatched kernels") {
    ActiveGuard guard;
    simd::set_active(Isa::scalar);
    CHECK(simd::active().isa == Isa::scalar);
    for (Isa isa : vector_isas()) {
        simd::set_active(isa);
        CHECK(simd::active_isa() == isa);
    }
}

TEST_CASE("jacobi tables and solves agree across kernel sets") {
    ActiveGuard guard;
    std::mt19937_64 g(5);
    const auto xs = random_vec(g, 37);
    simd::set_active(Isa::scalar);
    const RowMatrix t0 = jacobi_table(60, {-0.35, 0.8}, xs);
    const RowMatrix deg = jacobi_table(8, {-1.5, -1.5}, xs);  // Richardson path
    const auto adv = make_case(CaseId::adv_jump, default_params(CaseId::adv_jump, 0.7));
    const auto dif = make_case(CaseId::diff_ml_poly, default_params(CaseId::diff_ml_poly, 1.6));
    const auto a0 = solve_advection(adv.problem, 48).coeffs;
    const auto d0 = solve_diffusion(dif.problem, 48).coeffs;
    for (Isa isa : vector_isas()) {
        simd::set_active(isa);
        CHECK(jacobi_table(60, {-0.35, 0.8}, xs) == t0);
        CHECK(jacobi_table(8, {-1.5, -1.5}, xs) == deg);
        const auto a1 = solve_advection(adv.problem, 48).coeffs;
        const auto d1 = solve_diffusion(dif.problem, 48).coeffs;
        for (std::size_t i = 0; i < a0.size(); ++i) CHECK(a1[i] == doctest::Approx(a0[i]).epsilon(1e-12).scale(1.0));
        for (std::size_t i = 0; i < d0.size(); ++i) CHECK(d1[i] == doctest::Approx(d0[i]).epsilon(1e-12).scale(1.0));
    }
}
