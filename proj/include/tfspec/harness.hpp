#pragma once

// Convergence studies on the built-in example problems: exact solutions, L2
// errors, least-squares rates and CSV/SVG reports.

#include "tfspec/function_spec.hpp"
#include "tfspec/problem.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tfspec {

enum class CaseId { adv_jump, adv_h3, adv_singular_rhs, adv_dterm, diff_ml_poly, diff_ml_exp };

std::string_view to_string(CaseId id);
/// Throws DomainError for unknown names.
CaseId parse_case(std::string_view name);
const std::vector<CaseId>& all_cases();

Regime regime_of(CaseId id);

/// Knobs that only some cases read. adv_dterm: u = e^{-lambda x} (1+x)^{m + alpha1/2 - gamma}.
struct CaseOptions {
    int m = 3;
    double gamma = 0.3;
};

struct CaseParams {
    double alpha1 = 0.5;
    double alpha2 = 0.0;
    double d = 0.0;
    double lambda = 1.0;
};

/// Default alpha2/d for a case (alpha1 and lambda are left as given).
CaseParams default_params(CaseId id, double alpha1);

struct ExampleCase {
    CaseId id;
    CaseParams params;
    ProblemSpec problem;
    std::optional<CompositeFunction> exact;  ///< absent for adv_singular_rhs
};

/// Validates the parameters for the case's regime.
ExampleCase make_case(CaseId id, const CaseParams& p, const CaseOptions& opts = {});

/// ||u_N - u||_2 on (-1, 1). The interval is split at the support ends of
/// exact's terms and graded geometrically towards every split point; the
/// innermost cell at each point carries a Jacobi weight for the leading power
/// of the squared difference. npts is the rule size per cell.
double l2_error(const SpectralSolution& sol, const CompositeFunction& exact, int npts);
/// ||u_N - u||_q by the same construction, q >= 1. Diagnostic only; reports
/// and rates use the L2 error.
double lq_error(const SpectralSolution& sol, const CompositeFunction& exact, double q, int npts);
/// ||u_N - u_ref||_2 against a (larger) reference solution of the same problem.
double l2_error(const SpectralSolution& sol, const SpectralSolution& reference, int npts);

struct ReportRow {
    int N = 0;
    double l2_error = 0.0;
    double seconds = 0.0;
};

struct ConvergenceReport {
    CaseId id = CaseId::adv_jump;
    CaseParams params;
    std::vector<ReportRow> rows;  ///< sorted by N
    double fitted_rate = 0.0;     ///< NaN with fewer than two rows
};

/// Slope of the least-squares line through (ln N, -ln error).
/// Throws DegenerateError with fewer than two rows or a non-positive error.
double fit_rate(const std::vector<ReportRow>& rows);

inline constexpr int kRateFitPoints = 4;

struct RunOptions {
    CaseOptions case_opts;
    int threads = 1;  ///< parallel solves over N
    /// Reference size for cases without an exact solution; 0 means 2 max(Ns).
    int reference_n = 0;
};

/// Solves at each N (sorted ascending, duplicates dropped) and fits the rate
/// over the largest kRateFitPoints values.
ConvergenceReport run_case(CaseId id, const CaseParams& p, const std::vector<int>& Ns,
                           const RunOptions& opts = {});

inline const std::vector<int> kDefaultNs{8, 16, 32, 64, 128, 256};

inline constexpr std::string_view kCsvHeader = "case,alpha1,alpha2,d,lambda,N,l2_error,rate";

/// %.17g; NaN and infinities as empty fields.
std::string format_number(double v);

std::string to_csv(const std::vector<ConvergenceReport>& reports);
/// Log-log chart, one polyline per report plus reference slope guides.
std::string to_svg(const std::vector<ConvergenceReport>& reports);

/// Throws IoError naming the path on failure.
void emit_report(const std::vector<ConvergenceReport>& reports, const std::filesystem::path& csv,
                 const std::optional<std::filesystem::path>& svg = std::nullopt);
void emit_report(const ConvergenceReport& report, const std::filesystem::path& csv,
                 const std::optional<std::filesystem::path>& svg = std::nullopt);

}  // namespace tfspec
