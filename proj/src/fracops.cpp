#include "tfspec/fracops.hpp"

#include "tfspec/error.hpp"
#include "tfspec/quadrature.hpp"

#include <cmath>
#include <string>

namespace tfspec {

namespace {

constexpr double kPatternTol = 1e-12;

bool close(double x, double y) { return std::fabs(x - y) <= kPatternTol * (1.0 + std::fabs(y)); }

void check_order(double alpha, const char* who) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw DomainError(std::string(who) + ": order must be finite and non-negative");
}

// The exponent playing the role of delta in the identities, after checking that
// the term matches (1+x)^d J_n^{g,d} (left) or (1-x)^d J_n^{d,g} (right).
double matched_exponent(const WeightedJacobiTerm& t, const char* who) {
    if (t.side == Side::left) {
        if (!close(t.nu, 0.0) || !close(t.mu, t.params.b))
            throw PatternError(std::string(who) + ": left term must be (1+x)^d J_n^{g,d}");
        return t.mu;
    }
    if (!close(t.mu, 0.0) || !close(t.nu, t.params.a))
        throw PatternError(std::string(who) + ": right term must be (1-x)^d J_n^{d,g}");
    return t.nu;
}

}  // namespace

double WeightedJacobiTerm::operator()(double x) const {
    double v = coeff * jacobi_eval(n, params, x);
    if (mu != 0.0) v *= std::pow(1.0 + x, mu);
    if (nu != 0.0) v *= std::pow(1.0 - x, nu);
    return v;
}

WeightedJacobiTerm rl_integral_jacobi(const WeightedJacobiTerm& t, double alpha) {
    check_order(alpha, "rl_integral_jacobi");
    const double delta = matched_exponent(t, "rl_integral_jacobi");
    if (!(delta > -1.0)) throw PatternError("rl_integral_jacobi: exponent must exceed -1");
    if (alpha == 0.0) return t;
    WeightedJacobiTerm r = t;
    r.coeff = t.coeff * gamma_ratio(t.n + delta + 1.0, t.n + delta + alpha + 1.0);
    if (t.side == Side::left) {
        r.mu = delta + alpha;
        r.params = {t.params.a - alpha, t.params.b + alpha};
    } else {
        r.nu = delta + alpha;
        r.params = {t.params.a + alpha, t.params.b - alpha};
    }
    return r;
}

WeightedJacobiTerm rl_derivative_jacobi(const WeightedJacobiTerm& t, double alpha) {
    check_order(alpha, "rl_derivative_jacobi");
    const double top = matched_exponent(t, "rl_derivative_jacobi");
    if (alpha == 0.0) return t;
    const double delta = top - alpha;
    if (!(delta > -1.0))
        throw PatternError("rl_derivative_jacobi: resulting exponent " + std::to_string(delta) +
                           " must exceed -1");
    WeightedJacobiTerm r = t;
    r.coeff = t.coeff * gamma_ratio(t.n + top + 1.0, t.n + delta + 1.0);
    if (t.side == Side::left) {
        r.mu = delta;
        r.params = {t.params.a + alpha, t.params.b - alpha};
    } else {
        r.nu = delta;
        r.params = {t.params.a - alpha, t.params.b + alpha};
    }
    return r;
}

FunctionSpec to_function_spec(const WeightedJacobiTerm& t, double rate) {
    return FunctionSpec::from_factor(
        [t, rate](double x) { return std::exp(rate * x) * t.coeff * jacobi_eval(t.n, t.params, x); },
        t.mu, t.nu);
}

double rl_integral_numeric(const FunctionSpec& f, double alpha, double x, int npts, Side side) {
    return tempered_integral(f, alpha, 0.0, x, npts, side);
}

double tempered_integral(const FunctionSpec& f, double alpha, double lambda, double x, int npts,
                         Side side) {
    if (!(alpha > 0.0)) throw DomainError("fractional integral: order must be positive");
    if (!(lambda >= 0.0)) throw DomainError("tempered integral: lambda must be non-negative");
    f.validate();
    if (f.lo != -1.0 || f.hi != 1.0)
        throw DomainError("fractional integral: operand must be supported on [-1, 1]");
    if (!(x >= -1.0 && x <= 1.0)) throw DomainError("fractional integral: x outside [-1, 1]");

    const double kernel = alpha - 1.0;
    if (side == Side::left) {
        if (x == -1.0) return 0.0;
        // s = -1 + (x+1)(t+1)/2 on t in (-1, 1): x - s = h(1-t), 1 + s = h(1+t), h = (x+1)/2.
        const double h = 0.5 * (x + 1.0);
        const bool at_end = x == 1.0;
        const double wa = kernel + (at_end ? f.right_exponent : 0.0);
        const double wb = f.left_exponent;
        const auto rule = cached_gauss_jacobi(npts, wa, wb);
        double sum = 0.0;
        for (std::size_t j = 0; j < rule->size(); ++j) {
            const double s = -1.0 + h * (rule->nodes[j] + 1.0);
            double g = f.smooth_factor(s);
            if (!at_end && f.right_exponent != 0.0) g *= std::pow(1.0 - s, f.right_exponent);
            if (lambda != 0.0) g *= std::exp(-lambda * (x - s));
            sum += rule->weights[j] * g;
        }
        const double scale = std::pow(h, alpha + f.left_exponent + (at_end ? f.right_exponent : 0.0));
        const double v = scale * sum * rgamma(alpha);
        if (!std::isfinite(v)) throw EvaluationError("fractional integral: non-finite result");
        return v;
    }

    if (x == 1.0) return 0.0;
    // s = x + (1-x)(t+1)/2: s - x = h(1+t), 1 - s = h(1-t), h = (1-x)/2.
    const double h = 0.5 * (1.0 - x);
    const bool at_end = x == -1.0;
    const double wa = f.right_exponent;
    const double wb = kernel + (at_end ? f.left_exponent : 0.0);
    const auto rule = cached_gauss_jacobi(npts, wa, wb);
    double sum = 0.0;
    for (std::size_t j = 0; j < rule->size(); ++j) {
        const double s = x + h * (rule->nodes[j] + 1.0);
        double g = f.smooth_factor(s);
        if (!at_end && f.left_exponent != 0.0) g *= std::pow(1.0 + s, f.left_exponent);
        if (lambda != 0.0) g *= std::exp(-lambda * (s - x));
        sum += rule->weights[j] * g;
    }
    const double scale = std::pow(h, alpha + f.right_exponent + (at_end ? f.left_exponent : 0.0));
    const double v = scale * sum * rgamma(alpha);
    if (!std::isfinite(v)) throw EvaluationError("fractional integral: non-finite result");
    return v;
}

WeightedJacobiTerm basis_term(const BasisFamily& family, int n) {
    if (n < 0) throw DomainError("basis_term: negative index");
    WeightedJacobiTerm t;
    t.n = n;
    t.side = family.side;
    if (family.kind == BasisFamily::Kind::legendre_pair) {
        // L_n + L_{n+1} = (1+x) J_n^{0,1};  L_n - L_{n+1} = (1-x) J_n^{1,0}.
        if (family.side == Side::left) {
            t.mu = 1.0;
            t.params = {0.0, 1.0};
        } else {
            t.nu = 1.0;
            t.params = {1.0, 0.0};
        }
    }
    return rl_integral_jacobi(t, family.order);
}

std::vector<double> tempered_derivative_on_basis(const BasisFamily& family, int n, double alpha,
                                                 double lambda, std::span<const double> xs) {
    const WeightedJacobiTerm d = rl_derivative_jacobi(basis_term(family, n), alpha);
    const double rate = family.side == Side::left ? -lambda : lambda;
    std::vector<double> out(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) out[j] = std::exp(rate * xs[j]) * d(xs[j]);
    return out;
}

}  // namespace tfspec
