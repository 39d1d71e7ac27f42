// tfspec: convergence studies for the tempered fractional spectral solvers.

#include "tfspec/error.hpp"
#include "tfspec/harness.hpp"
#include "tfspec/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using json = nlohmann::json;

// Flag values as given on the command line; empty optionals fall back to the
// config file, then to the case defaults.
struct Flags {
    std::string config;
    std::optional<std::string> case_id;
    std::optional<double> alpha1, alpha2, d, lambda, gamma;
    std::optional<int> m, threads;
    std::vector<int> ns;
    std::vector<double> alpha1_list, alpha2_list;
    std::optional<std::string> csv, svg;
};

struct Settings {
    tfspec::CaseId id = tfspec::CaseId::adv_jump;
    std::vector<double> alpha1s;
    std::vector<double> alpha2s;  // empty: case default
    std::optional<double> d, lambda;
    std::vector<int> ns = tfspec::kDefaultNs;
    tfspec::RunOptions opts;
    std::optional<std::string> csv, svg;
};

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw tfspec::IoError("cannot read config '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw tfspec::IoError("config '" + path + "': " + e.what());
    }
    if (!j.is_object()) throw tfspec::IoError("config '" + path + "': top level must be an object");
    return j;
}

// Accepts [8, 16] or "8,16".
template <class T>
std::vector<T> list_value(const json& v) {
    if (v.is_array()) return v.get<std::vector<T>>();
    std::vector<T> out;
    std::stringstream s(v.get<std::string>());
    for (std::string item; std::getline(s, item, ',');) out.push_back(static_cast<T>(std::stod(item)));
    return out;
}

template <class T>
std::optional<T> pick(const std::optional<T>& flag, const json& cfg, const char* key) {
    if (flag) return flag;
    if (cfg.contains(key)) return cfg.at(key).get<T>();
    return std::nullopt;
}

template <class T>
std::vector<T> pick_list(const std::vector<T>& flag, const json& cfg, const char* key) {
    if (!flag.empty()) return flag;
    if (cfg.contains(key)) return list_value<T>(cfg.at(key));
    return {};
}

Settings resolve(const Flags& f, bool sweep) {
    const json cfg = load_config(f.config);
    Settings s;
    try {
        const auto id = pick(f.case_id, cfg, "case");
        if (!id) throw tfspec::DomainError("--case is required");
        s.id = tfspec::parse_case(*id);
        if (sweep) s.alpha1s = pick_list(f.alpha1_list, cfg, "alpha1-list");
        if (s.alpha1s.empty())
            if (auto a = pick(f.alpha1, cfg, "alpha1")) s.alpha1s = {*a};
        if (s.alpha1s.empty()) throw tfspec::DomainError(sweep ? "--alpha1-list is required" : "--alpha1 is required");
        if (sweep) s.alpha2s = pick_list(f.alpha2_list, cfg, "alpha2-list");
        if (s.alpha2s.empty())
            if (auto a = pick(f.alpha2, cfg, "alpha2")) s.alpha2s = {*a};
        s.d = pick(f.d, cfg, "d");
        s.lambda = pick(f.lambda, cfg, "lambda");
        if (auto ns = pick_list(f.ns, cfg, "ns"); !ns.empty()) s.ns = ns;
        if (auto m = pick(f.m, cfg, "m")) s.opts.case_opts.m = *m;
        if (auto g = pick(f.gamma, cfg, "gamma")) s.opts.case_opts.gamma = *g;
        if (auto t = pick(f.threads, cfg, "threads")) s.opts.threads = *t;
        s.csv = pick(f.csv, cfg, "csv");
        s.svg = pick(f.svg, cfg, "svg");
    } catch (const json::exception& e) {
        throw tfspec::IoError(std::string("config: ") + e.what());
    }
    for (int n : s.ns)
        if (n < 1) throw tfspec::DomainError("N values must be positive");
    return s;
}

int execute(const Settings& s) {
    std::vector<tfspec::ConvergenceReport> reports;
    for (double a1 : s.alpha1s) {
        std::vector<std::optional<double>> a2s;
        for (double a2 : s.alpha2s) a2s.emplace_back(a2);
        if (a2s.empty()) a2s.emplace_back();
        for (const auto& a2 : a2s) {
            tfspec::CaseParams p = tfspec::default_params(s.id, a1);
            if (a2) p.alpha2 = *a2;
            if (s.d) p.d = *s.d;
            if (s.lambda) p.lambda = *s.lambda;
            for (const auto& w : tfspec::make_case(s.id, p, s.opts.case_opts).problem.warnings())
                std::cerr << "warning: " << w << "\n";
            reports.push_back(tfspec::run_case(s.id, p, s.ns, s.opts));
            const auto& r = reports.back();
            std::cerr << tfspec::to_string(s.id) << " alpha1=" << p.alpha1 << " alpha2=" << p.alpha2 << " d=" << p.d
                      << " lambda=" << p.lambda << ": rate " << tfspec::format_number(r.fitted_rate) << "\n";
        }
    }
    if (s.csv) {
        std::optional<std::filesystem::path> svg;
        if (s.svg) svg = *s.svg;
        tfspec::emit_report(reports, *s.csv, svg);
    } else {
        std::cout << tfspec::to_csv(reports);
        if (s.svg) {
            std::ofstream out(*s.svg, std::ios::binary);
            if (!(out << tfspec::to_svg(reports))) throw tfspec::IoError("cannot write '" + *s.svg + "'");
        }
    }
    return 0;
}

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config, "JSON file with the same keys as the flags")->check(CLI::ExistingFile);
    cmd->add_option("--case", f.case_id, "adv_jump, adv_h3, adv_singular_rhs, adv_dterm, diff_ml_poly, diff_ml_exp");
    cmd->add_option("--d", f.d, "coefficient of the lower-order term");
    cmd->add_option("--lambda", f.lambda, "tempering parameter (default 1)");
    cmd->add_option("--ns", f.ns, "comma-separated N values (default 8,16,32,64,128,256)")->delimiter(',');
    cmd->add_option("--m", f.m, "adv_dterm: integer part of the solution exponent (default 3)");
    cmd->add_option("--gamma", f.gamma, "adv_dterm: exponent offset (default 0.3)");
    cmd->add_option("--threads", f.threads, "parallel solves over N (default 1)");
    cmd->add_option("--csv", f.csv, "CSV output path (default stdout)");
    cmd->add_option("--svg", f.svg, "SVG log-log chart path");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tempered fractional spectral solver: convergence studies"};
    app.require_subcommand(1);

    Flags run_flags, sweep_flags;
    auto* run = app.add_subcommand("run", "one parameter set over a list of N");
    add_common(run, run_flags);
    run->add_option("--alpha1", run_flags.alpha1, "highest derivative order");
    run->add_option("--alpha2", run_flags.alpha2, "lower derivative order (default 0 or 1 by regime)");

    auto* sweep = app.add_subcommand("sweep", "one report per alpha1 (and alpha2) value");
    add_common(sweep, sweep_flags);
    sweep->add_option("--alpha1-list", sweep_flags.alpha1_list, "comma-separated alpha1 values")->delimiter(',');
    sweep->add_option("--alpha2-list", sweep_flags.alpha2_list, "comma-separated alpha2 values")->delimiter(',');
    sweep->add_option("--alpha2", sweep_flags.alpha2, "single alpha2 value");

    std::vector<int> only;
    auto* verify = app.add_subcommand("verify", "run the acceptance suite; exit status 0 when all pass");
    verify->add_option("--only", only, "criterion ids to run")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return execute(resolve(run_flags, false));
        if (*sweep) return execute(resolve(sweep_flags, true));
        if (*verify) {
            if (only.empty())
                for (int i = 1; i <= tfspec::kCriterionCount; ++i) only.push_back(i);
            bool ok = true;
            for (int id : only) {
                const auto r = tfspec::run_criterion(id);
                std::cout << tfspec::format_result(r) << std::endl;
                ok = ok && r.pass;
            }
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "tfspec: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
