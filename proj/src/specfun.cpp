#include "tfspec/specfun.hpp"

#include "tfspec/error.hpp"
#include "tfspec/simd/kernels.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace tfspec {

namespace {

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kMaxGammaArg = 171.61447887182298;

double lanczos_sum(double z) {
    double s = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) s += kLanczos[i] / (z + static_cast<double>(i));
    return s;
}

bool is_pole(double x) { return x <= 0.0 && x == std::floor(x); }

// sin(pi x) with exact argument reduction.
double sin_pi(double x) {
    double r = std::fmod(std::fabs(x), 2.0);
    double sign = x < 0.0 ? -1.0 : 1.0;
    if (r >= 1.0) {
        r -= 1.0;
        sign = -sign;
    }
    if (r > 0.5) r = 1.0 - r;
    return sign * std::sin(std::numbers::pi * r);
}

// Gamma for x >= 0.5 without overflow checks.
double gamma_positive(double x) {
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    const double r = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * r * (r * std::exp(-t)) * lanczos_sum(z);
}

double log_gamma_positive(double x) {
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
           std::log(lanczos_sum(z));
}

[[noreturn]] void throw_pole(double x) {
    throw PoleError("gamma: pole at x = " + std::to_string(x));
}

}  // namespace

double gamma_fn(double x) {
    if (!std::isfinite(x)) throw DomainError("gamma: non-finite argument");
    if (is_pole(x)) throw_pole(x);
    if (x > kMaxGammaArg) throw OverflowError("gamma: overflow at x = " + std::to_string(x));
    if (x >= 0.5) return gamma_positive(x);
    const double s = sin_pi(x);
    const double one_minus = 1.0 - x;
    if (one_minus <= kMaxGammaArg) return std::numbers::pi / (s * gamma_positive(one_minus));
    // |Gamma(x)| underflows gracefully for very negative x.
    const double mag = std::exp(std::log(std::numbers::pi) - std::log(std::fabs(s)) -
                                log_gamma_positive(one_minus));
    return s < 0.0 ? -mag : mag;
}

double log_gamma(double x) {
    if (!std::isfinite(x)) throw DomainError("log_gamma: non-finite argument");
    if (is_pole(x)) throw_pole(x);
    if (x >= 0.5) return log_gamma_positive(x);
    return std::log(std::numbers::pi) - std::log(std::fabs(sin_pi(x))) - log_gamma_positive(1.0 - x);
}

double rgamma(double x) {
    if (!std::isfinite(x)) throw DomainError("rgamma: non-finite argument");
    if (is_pole(x)) return 0.0;
    if (x >= 0.5) {
        if (x <= kMaxGammaArg) return 1.0 / gamma_positive(x);
        return std::exp(-log_gamma_positive(x));
    }
    const double one_minus = 1.0 - x;
    if (one_minus <= kMaxGammaArg) return sin_pi(x) * gamma_positive(one_minus) / std::numbers::pi;
    const double s = sin_pi(x);
    const double mag = std::exp(log_gamma_positive(one_minus) + std::log(std::fabs(s)) -
                                std::log(std::numbers::pi));
    return s < 0.0 ? -mag : mag;
}

double gamma_ratio(double x, double y) {
    if (is_pole(x)) throw_pole(x);
    if (is_pole(y)) return 0.0;
    if (x == y) return 1.0;
    if (x >= 0.5 && y >= 0.5) {
        // Lanczos log-ratio written so that the large (z + 1/2) log t terms cancel analytically.
        const double zx = x - 1.0;
        const double zy = y - 1.0;
        const double ty = zy + kLanczosG + 0.5;
        const double d = x - y;
        const double log_ratio = (zx + 0.5) * std::log1p(d / ty) + d * std::log(ty) - d +
                                 std::log(lanczos_sum(zx) / lanczos_sum(zy));
        return std::exp(log_ratio);
    }
    return gamma_fn(x) * rgamma(y);
}

double legendre_eval(int n, double x) {
    if (n < 0) throw DomainError("legendre_eval: negative degree");
    if (n == 0) return 1.0;
    double p0 = 1.0;
    double p1 = x;
    for (int k = 1; k < n; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

namespace {

struct Recurrence {
    std::vector<double> a, b, c;
    bool degenerate = false;
};

// P_n = (a_n x + b_n) P_{n-1} - c_n P_{n-2} for the Rodrigues-normalized J_n^{alpha,beta}.
// The recurrence divides by n + s and 2n + s - 2 (s = alpha + beta); when either is
// (nearly) zero for some n <= nmax the table is built by extrapolation instead.
Recurrence jacobi_recurrence(int nmax, double alpha, double beta) {
    Recurrence r;
    r.a.assign(static_cast<std::size_t>(nmax) + 1, 0.0);
    r.b.assign(r.a.size(), 0.0);
    r.c.assign(r.a.size(), 0.0);
    if (nmax >= 1) {
        r.a[1] = 0.5 * (alpha + beta + 2.0);
        r.b[1] = 0.5 * (alpha - beta);
    }
    const double s = alpha + beta;
    const double a2b2 = (alpha - beta) * (alpha + beta);
    for (int n = 2; n <= nmax; ++n) {
        const double two_n_s = 2.0 * n + s;
        const double g1 = n + s;
        const double g2 = two_n_s - 2.0;
        if (std::fabs(g1) < 1e-6 || std::fabs(g2) < 1e-6) r.degenerate = true;
        const double denom = 2.0 * n * g1 * g2;
        r.a[n] = (two_n_s - 1.0) * two_n_s * g2 / denom;
        r.b[n] = (two_n_s - 1.0) * a2b2 / denom;
        r.c[n] = 2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * two_n_s / denom;
    }
    return r;
}

void fill_table(const Recurrence& r, std::span<const double> xs, std::span<double> out,
                const simd::Kernels& k) {
    simd::ThreeTermRecurrence rec{r.a, r.b, r.c};
    k.recurrence_table(rec, xs, out);
}

void check_degree(int n) {
    if (n < 0 || n > kMaxJacobiDegree)
        throw SizeError("jacobi: degree " + std::to_string(n) + " outside [0, " +
                        std::to_string(kMaxJacobiDegree) + "]");
}

RowMatrix jacobi_table_with(int nmax, JacobiParams p, std::span<const double> xs,
                            const simd::Kernels& k) {
    check_degree(nmax);
    if (!std::isfinite(p.a) || !std::isfinite(p.b)) throw DomainError("jacobi: non-finite parameter");
    RowMatrix out(nmax + 1, static_cast<Eigen::Index>(xs.size()));
    std::span<double> dst(out.data(), static_cast<std::size_t>(out.size()));
    const Recurrence r = jacobi_recurrence(nmax, p.a, p.b);
    if (!r.degenerate) {
        fill_table(r, xs, dst, k);
        return out;
    }
    // J_n is a polynomial in (a, b); shift a + b symmetrically off the degenerate value
    // and remove the O(h^2) error with a fourth-order central Richardson combination.
    constexpr double h = 2e-3;
    const std::array<double, 4> shifts{h, -h, 2.0 * h, -2.0 * h};
    std::array<RowMatrix, 4> tabs;
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        tabs[i].resize(out.rows(), out.cols());
        const Recurrence ri = jacobi_recurrence(nmax, p.a + 0.5 * shifts[i], p.b + 0.5 * shifts[i]);
        fill_table(ri, xs, std::span<double>(tabs[i].data(), static_cast<std::size_t>(out.size())), k);
    }
    out = (4.0 * (tabs[0] + tabs[1]) - (tabs[2] + tabs[3])) / 6.0;
    return out;
}

}  // namespace

double jacobi_eval(int n, JacobiParams p, double x) {
    check_degree(n);
    if (n == 0) return 1.0;
    const double xs[1] = {x};
    const RowMatrix t = jacobi_table_with(n, p, xs, simd::kernels(simd::Isa::scalar));
    return t(n, 0);
}

RowMatrix jacobi_table(int nmax, JacobiParams p, std::span<const double> xs) {
    return jacobi_table_with(nmax, p, xs, simd::active());
}

double mittag_leffler(double g, double b, double z) {
    if (!(g > 0.0)) throw DomainError("mittag_leffler: requires g > 0");
    if (!std::isfinite(b) || !std::isfinite(z)) throw DomainError("mittag_leffler: non-finite argument");
    // Long double accumulation: for z < 0 the terms cancel by up to e^{2|z|}.
    using ld = long double;
    const auto recip_gamma = [](ld arg) -> ld {
        if (arg <= 0 && arg == std::floor(arg)) return 0;
        return 1 / std::tgamma(arg);
    };
    if (z == 0.0) return static_cast<double>(recip_gamma(static_cast<ld>(b)));
    ld sum = 0;
    ld zk = 1;
    const ld az = std::fabs(static_cast<ld>(z));
    constexpr int kMaxTerms = 20000;
    for (int k = 0; k < kMaxTerms; ++k) {
        const ld arg = static_cast<ld>(g) * k + static_cast<ld>(b);
        const ld term = zk * recip_gamma(arg);
        sum += term;
        const bool decaying = arg > 2 && std::pow(arg, static_cast<ld>(g)) > 2 * az;
        if (decaying && std::fabs(term) <= 1e-16L * (1 + std::fabs(sum))) return static_cast<double>(sum);
        zk *= z;
        if (!std::isfinite(static_cast<double>(zk))) break;
    }
    throw DomainError("mittag_leffler: series did not converge");
}

}  // namespace tfspec
