#include "tfspec/harness.hpp"

#include "tfspec/advection.hpp"
#include "tfspec/diffusion.hpp"
#include "tfspec/error.hpp"
#include "tfspec/quadrature.hpp"
#include "tfspec/specfun.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <thread>

namespace tfspec {

namespace {

constexpr std::pair<CaseId, std::string_view> kNames[] = {
    {CaseId::adv_jump, "adv_jump"},         {CaseId::adv_h3, "adv_h3"},
    {CaseId::adv_singular_rhs, "adv_singular_rhs"}, {CaseId::adv_dterm, "adv_dterm"},
    {CaseId::diff_ml_poly, "diff_ml_poly"}, {CaseId::diff_ml_exp, "diff_ml_exp"},
};

// Geometric grading towards each split point. 0.15^10 ~ 6e-9 of the panel keeps
// the innermost nodes resolvable in double near the split point.
constexpr double kGradeRatio = 0.15;
constexpr int kGradeLevels = 10;

using BatchEval = std::function<std::vector<double>(std::span<const double>)>;

// e^{-lambda x} c (x - lo)^s on [lo, 1], as a term with its power split off.
FunctionSpec power_term(double c, double s, double lambda, double lo = -1.0) {
    return FunctionSpec::from_factor([c, lambda](double x) { return c * std::exp(-lambda * x); }, s, 0.0,
                                     lo, 1.0);
}

// e^{-lambda x} c (1+x)^{beta-1} E_{g,beta}((1+x)^g), split as a power and a smooth factor.
FunctionSpec ml_term(double c, double beta, double g, double lambda) {
    return FunctionSpec::from_factor(
        [=](double x) { return c * std::exp(-lambda * x) * mittag_leffler(g, beta, std::pow(1.0 + x, g)); },
        beta - 1.0, 0.0);
}

// adv_jump and adv_h3: u = e^{-lambda x} I^{alpha1/2} v with v = sign(x) or its
// third antiderivative; both u and f are sums of a term on [-1, 1] and one on [0, 1].
CompositeFunction jump_pair(double order, double lambda) {
    const double r = rgamma(order + 1.0);
    return {power_term(-r, order, lambda), power_term(2.0 * r, order, lambda, 0.0)};
}

struct Cell {
    double lo, hi;
    double left_weight = 0.0;   ///< Jacobi exponent at lo (0: plain Gauss-Legendre)
    double right_weight = 0.0;
};

// Cells graded towards both ends of [p, q].
void graded_cells(double p, double q, double ep, double eq, std::vector<Cell>& out) {
    const double mid = 0.5 * (p + q);
    const double h = mid - p;
    std::vector<double> cuts{p};
    for (int k = kGradeLevels; k >= 1; --k) cuts.push_back(p + h * std::pow(kGradeRatio, k));
    cuts.push_back(mid);
    for (int k = 1; k <= kGradeLevels; ++k) cuts.push_back(q - h * std::pow(kGradeRatio, k));
    cuts.push_back(q);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Cell c{cuts[i], cuts[i + 1]};
        if (i == 0) c.left_weight = ep;
        if (i + 2 == cuts.size()) c.right_weight = eq;
        out.push_back(c);
    }
}

// |u_N - u|^q behaves like |x - p|^{q sigma} at a split point; only a singular
// power goes into the weight.
double weight_exponent(double sigma, double q) { return std::min(0.0, q * sigma); }

double lq_impl(const SpectralSolution& sol, const std::map<double, double>& sigma, const BatchEval& exact,
               int npts, double q) {
    if (npts < 2 * sol.size())
        throw DomainError("l2_error: npts must be at least twice the solution size");
    std::vector<Cell> cells;
    for (auto it = sigma.begin(); std::next(it) != sigma.end(); ++it) {
        const auto nx = std::next(it);
        graded_cells(it->first, nx->first, weight_exponent(it->second, q), weight_exponent(nx->second, q), cells);
    }
    double total = 0.0;
    std::vector<double> xs(static_cast<std::size_t>(npts));
    for (const Cell& c : cells) {
        const auto rule = cached_gauss_jacobi(npts, c.right_weight, c.left_weight);
        const double half = 0.5 * (c.hi - c.lo);
        for (int j = 0; j < npts; ++j) xs[static_cast<std::size_t>(j)] = c.lo + half * (rule->nodes[static_cast<std::size_t>(j)] + 1.0);
        const std::vector<double> un = evaluate(sol, xs);
        const std::vector<double> u = exact(xs);
        double s = 0.0;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            const double e = std::fabs(un[j] - u[j]);
            double v = q == 2.0 ? e * e : std::pow(e, q);
            // Distances from the rounded node (exact near the endpoint), so the
            // weight divides out the singularity the integrand actually sees.
            if (c.left_weight != 0.0) v /= std::pow((xs[j] - c.lo) / half, c.left_weight);
            if (c.right_weight != 0.0) v /= std::pow((c.hi - xs[j]) / half, c.right_weight);
            s += rule->weights[j] * v;
        }
        total += half * s;
    }
    if (!std::isfinite(total)) throw SingularityError("l2_error: squared difference is not integrable");
    return q == 2.0 ? std::sqrt(total) : std::pow(total, 1.0 / q);
}

std::map<double, double> split_points(const CompositeFunction& exact) {
    std::map<double, double> sigma{{-1.0, 0.0}, {1.0, 0.0}};
    for (const auto& t : exact) {
        t.validate();
        for (auto [pt, s] : {std::pair{t.lo, t.left_exponent}, std::pair{t.hi, t.right_exponent}}) {
            auto [it, fresh] = sigma.emplace(pt, s);
            if (!fresh) it->second = std::min(it->second, s);
        }
    }
    return sigma;
}

BatchEval pointwise(const CompositeFunction& exact) {
    return [&exact](std::span<const double> xs) {
        std::vector<double> out(xs.size());
        for (std::size_t j = 0; j < xs.size(); ++j) out[j] = evaluate(exact, xs[j]);
        return out;
    };
}

}  // namespace

std::string_view to_string(CaseId id) {
    for (const auto& [k, name] : kNames)
        if (k == id) return name;
    return "unknown";
}

CaseId parse_case(std::string_view name) {
    for (const auto& [k, n] : kNames)
        if (n == name) return k;
    throw DomainError("unknown case id '" + std::string(name) + "'");
}

const std::vector<CaseId>& all_cases() {
    static const std::vector<CaseId> ids = [] {
        std::vector<CaseId> v;
        for (const auto& [k, n] : kNames) v.push_back(k);
        return v;
    }();
    return ids;
}

Regime regime_of(CaseId id) {
    return id == CaseId::diff_ml_poly || id == CaseId::diff_ml_exp ? Regime::diffusion : Regime::advection;
}

CaseParams default_params(CaseId id, double alpha1) {
    CaseParams p;
    p.alpha1 = alpha1;
    switch (id) {
        case CaseId::adv_jump:
        case CaseId::adv_h3:
        case CaseId::adv_singular_rhs: break;
        case CaseId::adv_dterm: p.d = -500.0; break;
        case CaseId::diff_ml_poly: p.alpha2 = 1.0; p.d = -1.0; break;
        case CaseId::diff_ml_exp: p.alpha2 = 1.0; p.d = 100.0; break;
    }
    return p;
}

ExampleCase make_case(CaseId id, const CaseParams& p, const CaseOptions& opts) {
    ExampleCase ex{id, p, {}, std::nullopt};
    ProblemSpec& prob = ex.problem;
    prob.alpha1 = p.alpha1;
    prob.alpha2 = p.alpha2;
    prob.d = p.d;
    prob.lambda = p.lambda;
    prob.regime = regime_of(id);
    const double a1 = p.alpha1, a2 = p.alpha2, lam = p.lambda, half = 0.5 * p.alpha1;

    switch (id) {
        case CaseId::adv_jump:
        case CaseId::adv_h3: {
            // D^{alpha1} I^{alpha1/2} v = D^{alpha1/2} v; the d-term adds I^{alpha1/2 - alpha2} v.
            const double k = id == CaseId::adv_jump ? 0.0 : 3.0;
            ex.exact = jump_pair(k + half, lam);
            prob.rhs = jump_pair(k - half, lam);
            if (p.d != 0.0)
                for (auto t : jump_pair(k + half - a2, lam)) {
                    auto g = t.factor;
                    t.factor = [g, dd = p.d](double x) { return dd * g(x); };
                    prob.rhs.push_back(std::move(t));
                }
            break;
        }
        case CaseId::adv_singular_rhs:
            prob.rhs = {FunctionSpec::from_factor([](double) { return 1.0; }, -half - 0.3, 0.0)};
            break;
        case CaseId::adv_dterm: {
            const double s = opts.m + half - opts.gamma;
            if (!(s > -1.0)) throw DomainError("adv_dterm: exponent m + alpha1/2 - gamma must exceed -1");
            ex.exact = CompositeFunction{power_term(1.0, s, lam)};
            prob.rhs = {power_term(gamma_ratio(s + 1.0, s + 1.0 - a1), s - a1, lam)};
            if (p.d != 0.0) prob.rhs.push_back(power_term(p.d * gamma_ratio(s + 1.0, s + 1.0 - a2), s - a2, lam));
            break;
        }
        case CaseId::diff_ml_poly:
        case CaseId::diff_ml_exp: {
            const double g = 1.0;
            const double beta = id == CaseId::diff_ml_poly ? 4.0 : 0.5 * (a1 + 1.0) + 1.0;
            ex.exact = CompositeFunction{ml_term(1.0, beta, g, lam)};
            prob.rhs = {ml_term(1.0, beta - a1, g, lam)};
            if (p.d != 0.0) prob.rhs.push_back(ml_term(p.d, beta - a2, g, lam));
            prob.ub = std::exp(-lam) * std::pow(2.0, beta - a1) * mittag_leffler(g, beta - a1 + 1.0, std::pow(2.0, g));
            break;
        }
    }
    prob.validate();
    return ex;
}

double l2_error(const SpectralSolution& sol, const CompositeFunction& exact, int npts) {
    return lq_impl(sol, split_points(exact), pointwise(exact), npts, 2.0);
}

double lq_error(const SpectralSolution& sol, const CompositeFunction& exact, double q, int npts) {
    if (!(q >= 1.0) || !std::isfinite(q)) throw DomainError("lq_error: q must be finite and >= 1");
    return lq_impl(sol, split_points(exact), pointwise(exact), npts, q);
}

double l2_error(const SpectralSolution& sol, const SpectralSolution& reference, int npts) {
    const std::map<double, double> sigma{{-1.0, 0.0}, {1.0, 0.0}};
    const BatchEval f = [&reference](std::span<const double> xs) {
        return evaluate(reference, std::vector<double>(xs.begin(), xs.end()));
    };
    return lq_impl(sol, sigma, f, std::max(npts, reference.size()), 2.0);
}

double fit_rate(const std::vector<ReportRow>& rows) {
    if (rows.size() < 2) throw DegenerateError("fit_rate: need at least two rows");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : rows) {
        if (!(r.l2_error > 0.0) || r.N <= 0) throw DegenerateError("fit_rate: errors and N must be positive");
        const double x = std::log(static_cast<double>(r.N)), y = -std::log(r.l2_error);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double n = static_cast<double>(rows.size());
    const double den = n * sxx - sx * sx;
    if (!(den > 0.0)) throw DegenerateError("fit_rate: all N are equal");
    return (n * sxy - sx * sy) / den;
}

ConvergenceReport run_case(CaseId id, const CaseParams& p, const std::vector<int>& Ns, const RunOptions& opts) {
    std::vector<int> ns = Ns;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    const std::string ctx = std::string(to_string(id)) + ": ";
    if (ns.empty()) throw DomainError(ctx + "empty N list");

    ExampleCase ex;
    try {
        ex = make_case(id, p, opts.case_opts);
    } catch (const Error& e) {
        throw DomainError(ctx + e.what());
    }
    const auto solve = [&](int N) {
        return ex.problem.regime == Regime::advection ? solve_advection(ex.problem, N)
                                                      : solve_diffusion(ex.problem, N);
    };

    std::optional<SpectralSolution> reference;
    if (!ex.exact) {
        const int nref = opts.reference_n > 0 ? opts.reference_n : 2 * ns.back();
        try {
            reference = solve(nref);
        } catch (const Error& e) {
            throw Error(ctx + "reference solve at N = " + std::to_string(nref) + ": " + e.what());
        }
    }

    ConvergenceReport rep;
    rep.id = id;
    rep.params = p;
    rep.rows.resize(ns.size());
    std::vector<std::string> failures(ns.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i; (i = next++) < ns.size();) {
            const int N = ns[i];
            try {
                const auto t0 = std::chrono::steady_clock::now();
                const SpectralSolution sol = solve(N);
                const auto t1 = std::chrono::steady_clock::now();
                const int npts = std::max(2 * N, 48);
                const double err = reference ? l2_error(sol, *reference, npts) : l2_error(sol, *ex.exact, npts);
                rep.rows[i] = {N, err, std::chrono::duration<double>(t1 - t0).count()};
            } catch (const Error& e) {
                failures[i] = ctx + "N = " + std::to_string(N) + ": " + e.what();
            }
        }
    };
    const int nthreads = std::clamp(opts.threads, 1, static_cast<int>(ns.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& f : failures)
        if (!f.empty()) throw Error(f);

    rep.fitted_rate = std::numeric_limits<double>::quiet_NaN();
    if (rep.rows.size() >= 2) {
        const std::size_t k = std::min<std::size_t>(kRateFitPoints, rep.rows.size());
        rep.fitted_rate = fit_rate({rep.rows.end() - static_cast<std::ptrdiff_t>(k), rep.rows.end()});
    }
    return rep;
}

}  // namespace tfspec
