#include "tfspec/quadrature.hpp"

#include "tfspec/error.hpp"
#include "tfspec/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>

namespace tfspec {

namespace {

void check_size(int n) {
    if (n < 1 || n > kMaxQuadraturePoints)
        throw SizeError("quadrature: n = " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxQuadraturePoints) + "]");
}

// Implicit QL with Wilkinson-type shifts on a symmetric tridiagonal matrix.
// Only the first component of each eigenvector is tracked, which is all the
// Golub-Welsch weights need. diag is overwritten by the eigenvalues.
void tridiagonal_ql(std::vector<double>& diag, std::vector<double> sub, std::vector<double>& first) {
    const int n = static_cast<int>(diag.size());
    first.assign(diag.size(), 0.0);
    first[0] = 1.0;
    sub.resize(diag.size(), 0.0);
    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(diag[m]) + std::fabs(diag[m + 1]);
                if (std::fabs(sub[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (++iter > 100) throw DegenerateError("gauss quadrature: QL iteration did not converge");
            double g = (diag[l + 1] - diag[l]) / (2.0 * sub[l]);
            double r = std::hypot(g, 1.0);
            g = diag[m] - diag[l] + sub[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            int i = m - 1;
            bool underflow = false;
            for (; i >= l; --i) {
                double f = s * sub[i];
                const double b = c * sub[i];
                r = std::hypot(f, g);
                sub[i + 1] = r;
                if (r == 0.0) {
                    diag[i + 1] -= p;
                    sub[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                f = first[i + 1];
                first[i + 1] = s * first[i] + c * f;
                first[i] = c * first[i] - s * f;
            }
            if (underflow) continue;
            diag[l] -= p;
            sub[l] = g;
            sub[m] = 0.0;
        } while (m != l);
    }
}

}  // namespace

double jacobi_weight_mass(double a, double b) {
    if (a + b < 100.0)
        return std::exp2(a + b + 1.0) * gamma_fn(a + 1.0) * gamma_fn(b + 1.0) / gamma_fn(a + b + 2.0);
    return std::exp((a + b + 1.0) * std::log(2.0) + log_gamma(a + 1.0) + log_gamma(b + 1.0) -
                    log_gamma(a + b + 2.0));
}

QuadratureRule gauss_jacobi(int n, double a, double b) {
    check_size(n);
    if (!(a > -1.0) || !(b > -1.0))
        throw DomainError("gauss_jacobi: weight exponents must exceed -1");

    const auto un = static_cast<std::size_t>(n);
    std::vector<double> diag(un), sub(un, 0.0);
    const double s = a + b;
    diag[0] = (b - a) / (s + 2.0);
    for (int k = 1; k < n; ++k) {
        const double t = 2.0 * k + s;
        diag[k] = (b * b - a * a) / (t * (t + 2.0));
    }
    if (n > 1) sub[0] = std::sqrt(4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + s) * (2.0 + s) * (3.0 + s)));
    for (int k = 2; k < n; ++k) {
        const double t = 2.0 * k + s;
        const double beta = 4.0 * k * (k + a) * (k + b) * (k + s) / (t * t * (t + 1.0) * (t - 1.0));
        sub[k - 1] = std::sqrt(beta);
    }

    std::vector<double> first;
    tridiagonal_ql(diag, sub, first);

    const double mass = jacobi_weight_mass(a, b);
    std::vector<std::size_t> order(un);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return diag[i] < diag[j]; });

    QuadratureRule rule;
    rule.a = a;
    rule.b = b;
    rule.nodes.resize(un);
    rule.weights.resize(un);
    for (std::size_t i = 0; i < un; ++i) {
        rule.nodes[i] = diag[order[i]];
        rule.weights[i] = mass * first[order[i]] * first[order[i]];
    }
    if (a == b) {
        for (std::size_t i = 0; i < un / 2; ++i) {
            const std::size_t j = un - 1 - i;
            const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
            const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
            rule.nodes[i] = -x;
            rule.nodes[j] = x;
            rule.weights[i] = rule.weights[j] = w;
        }
        if (un % 2 == 1) rule.nodes[un / 2] = 0.0;
    }
    return rule;
}

QuadratureRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

std::shared_ptr<const QuadratureRule> cached_gauss_jacobi(int n, double a, double b) {
    using Key = std::tuple<int, double, double>;
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const QuadratureRule>> cache;
    const Key key{n, a, b};
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto rule = std::make_shared<const QuadratureRule>(gauss_jacobi(n, a, b));
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(rule)).first->second;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
    double s = 0.0;
    for (std::size_t j = 0; j < rule.size(); ++j) {
        const double v = f(rule.nodes[j]);
        if (!std::isfinite(v))
            throw EvaluationError("integrate: non-finite integrand at x = " + std::to_string(rule.nodes[j]));
        s += rule.weights[j] * v;
    }
    return s;
}

double integrate(const QuadratureRule& rule, const FunctionSpec& f) {
    return integrate(rule, [&f](double x) { return f.smooth_factor(x); });
}

WeightedNodes weighted_nodes(const FunctionSpec& f, double a, double b, int npts) {
    f.validate();
    const bool touches_right = f.hi == 1.0;
    const bool touches_left = f.lo == -1.0;
    const double ea = f.right_exponent + (touches_right ? a : 0.0);
    const double eb = f.left_exponent + (touches_left ? b : 0.0);
    if (!(ea > -1.0) || !(eb > -1.0))
        throw SingularityError("weighted_nodes: combined endpoint exponent <= -1");

    const auto rule = cached_gauss_jacobi(npts, ea, eb);
    const double half = 0.5 * (f.hi - f.lo);
    const double scale = std::pow(half, 1.0 + ea + eb);

    WeightedNodes out;
    out.x.resize(rule->size());
    out.w.resize(rule->size());
    for (std::size_t j = 0; j < rule->size(); ++j) {
        const double x = f.lo + half * (rule->nodes[j] + 1.0);
        double v = f.smooth_factor(x);
        if (!touches_right && a != 0.0) v *= std::pow(1.0 - x, a);
        if (!touches_left && b != 0.0) v *= std::pow(1.0 + x, b);
        if (!std::isfinite(v))
            throw EvaluationError("weighted_nodes: non-finite function value at x = " + std::to_string(x));
        out.x[j] = x;
        out.w[j] = scale * rule->weights[j] * v;
    }
    return out;
}

}  // namespace tfspec
