// Command-line front end: compute operator-norm constants, tabulate
// generating-function transforms, and run the verification suites.
//
// Exit codes: 0 success, 2 usage/config error, 3 computation anomaly or
// verification failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "glsnorm/config.hpp"
#include "glsnorm/convex.hpp"
#include "glsnorm/minimize.hpp"
#include "glsnorm/report.hpp"
#include "glsnorm/verify.hpp"

namespace {

using namespace glsnorm;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitAnomaly = 3;

struct AnomalyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Table& table, const std::string& format, const std::string& path) {
    std::string body = format == "json" ? render_json(table) : render_csv(table);
    if (path.empty())
        std::cout << body;
    else
        write_file_atomic(path, body);
}

Table norm_table(const JobConfig& cfg, double tol) {
    if (!cfg.op) throw ConfigError("norm: config must declare an operator");
    Table t;
    t.schema = "norm-v1";
    t.columns = {"p", "q", "value", "finite", "method", "abs_error", "diagnostics"};

    SpacePair spaces{cfg.mu, cfg.nu};
    for (double p : cfg.p_grid)
        for (double q : cfg.q_grid) {
            ExtReal value;
            double abs_error = 0.0;
            std::string method, diag;

            if (const auto* comp = std::get_if<CompositionOp>(&*cfg.op)) {
                Derivative z = radon_nikodym(comp->xi, cfg.mu, cfg.nu);
                NormComputation c =
                    composition_norm_detailed(z, Exponent(p), Exponent(q), cfg.nu, tol);
                value = c.value;
                abs_error = c.abs_error;
                method = c.method;
                if (c.diagnostics) diag = *c.diagnostics;
            } else if (const auto* mult = std::get_if<MultiplicativeOp>(&*cfg.op)) {
                method = q > p ? "lp-norm" : (q == p ? "ess-sup" : "divergent-regime");
                if (q > p && std::isfinite(q)) {
                    NormReport rep = lp_norm(mult->g, Exponent(p * q / (q - p)), cfg.nu, tol);
                    value = rep.value;
                    abs_error = rep.abs_error_estimate;
                    if (rep.divergence_reason) diag = *rep.divergence_reason;
                } else {
                    value = multiplicative_norm(mult->g, Exponent(p), Exponent(q), cfg.nu, tol);
                }
            } else if (const auto* prod = std::get_if<ProductOp>(&*cfg.op)) {
                if (prod->independent) {
                    value = independent_product_norm(*prod, Exponent(p), Exponent(q), spaces, tol);
                    method = "independent-exact";
                } else {
                    BoundResult b = product_norm_bound(*prod, Exponent(p), Exponent(q), spaces, tol);
                    value = b.value;
                    method = "factored-bound";
                    if (b.diagnostic) diag = *b.diagnostic;
                }
            } else if (const auto* lin = std::get_if<LinearSubstitutionOp>(&*cfg.op)) {
                value = ExtReal(linear_substitution_norm(lin->abs_det, Exponent(p)));
                method = "closed-form";
            }

            t.rows.push_back({format_value(p), format_value(q), format_value(value.value()),
                              value.is_finite() ? "true" : "false", method,
                              format_value(abs_error), diag});
        }
    return t;
}

Table transform_table(const JobConfig& cfg) {
    if (cfg.transform_kind.empty())
        throw ConfigError("transform: config must declare a transform kind");
    Table t;
    t.schema = "transform-v1";
    t.columns = {"p", "value"};

    const std::string& kind = cfg.transform_kind;
    auto psi = [&]() -> PsiFunction {
        if (!cfg.psi) throw ConfigError("transform: config must declare psi");
        return build_psi(*cfg.psi);
    };

    auto tabulate = [&](const PsiFunction& out) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "support: (%.9g, %.9g)", out.support_lo(),
                      out.support_hi());
        t.comments.push_back(buf);
        if (!cfg.points.empty()) {
            for (double p : cfg.points)
                t.rows.push_back({format_value(p), format_value(out(p))});
        } else if (out.kind() == PsiFunction::Kind::Tabulated) {
            for (std::size_t i = 0; i < out.grid().size(); ++i)
                t.rows.push_back({format_value(out.grid()[i]), format_value(out.values()[i])});
        } else {
            std::vector<double> ps = make_grid(out.support_lo() * (1 + 1e-9),
                                               std::min(out.support_hi(), 1e4) * (1 - 1e-9), 64,
                                               true);
            for (double p : ps) t.rows.push_back({format_value(p), format_value(out(p))});
        }
    };

    if (kind == "sigma") {
        PsiFunction out = sigma_transform(psi(), cfg.transform_r);
        if (out.is_empty())
            throw AnomalyError(
                "sigma transform has empty support: no exponent satisfies q > p*r inside the "
                "generating function's support, so the transformed function is infinite "
                "everywhere");
        tabulate(out);
    } else if (kind == "tau") {
        PsiFunction out = tau_transform(psi(), cfg.transform_t);
        if (out.is_empty()) throw AnomalyError("tau transform has empty support");
        tabulate(out);
    } else if (kind == "theta") {
        if (!cfg.op) throw ConfigError("transform: theta needs an operator");
        SpacePair spaces{cfg.mu, cfg.nu};
        auto bound = [&](double p, double q) -> double {
            if (const auto* comp = std::get_if<CompositionOp>(&*cfg.op)) {
                Derivative z = radon_nikodym(comp->xi, cfg.mu, cfg.nu);
                return composition_norm(z, Exponent(p), Exponent(q), cfg.nu).value();
            }
            if (const auto* mult = std::get_if<MultiplicativeOp>(&*cfg.op))
                return multiplicative_norm(mult->g, Exponent(p), Exponent(q), cfg.nu).value();
            if (const auto* prod = std::get_if<ProductOp>(&*cfg.op))
                return product_norm_bound(*prod, Exponent(p), Exponent(q), spaces).value.value();
            throw ConfigError("transform: theta supports composition/multiplicative/product");
        };
        try {
            PsiFunction out = theta_transform(psi(), bound);
            tabulate(out);
        } catch (const std::runtime_error& e) {
            throw AnomalyError(e.what());
        }
    } else if (kind == "fundamental") {
        t.columns = {"delta", "value"};
        PsiFunction tau = psi();
        std::vector<double> deltas = cfg.points;
        if (deltas.empty()) deltas = {cfg.transform_delta};
        for (double d : deltas)
            t.rows.push_back(
                {format_value(d), format_value(fundamental_function(tau, d).value())});
    } else if (kind == "orlicz") {
        t.columns = {"u", "value"};
        OrliczFunction N(psi());
        std::vector<double> us = cfg.points;
        if (us.empty()) us = make_grid(1.0, 1e3, 48, true);
        for (double u : us) t.rows.push_back({format_value(u), format_value(N(u))});
    } else {
        throw ConfigError("transform: unknown kind '" + kind + "'");
    }
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharp operator norms on Lebesgue and grand Lebesgue spaces"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "csv", suite = "all";
    double tol = 1e-10;
    std::uint64_t seed = 42;

    CLI::App* norm = app.add_subcommand("norm", "compute operator-norm constants");
    norm->add_option("--config", config_path, "job config (JSON)")->required();
    norm->add_option("--tol", tol, "quadrature tolerance");
    norm->add_option("--format", format, "csv|json");
    norm->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* transform = app.add_subcommand("transform", "tabulate generating-function transforms");
    transform->add_option("--config", config_path, "job config (JSON)")->required();
    transform->add_option("--format", format, "csv|json");
    transform->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "sharpness|holder|gls|counterexample|all");
    verify->add_option("--seed", seed, "probe seed");
    verify->add_option("--out", out_path, "also write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (norm->parsed()) {
            JobConfig cfg = load_config(config_path);
            if (!out_path.empty()) cfg.out_path = out_path;
            if (format != "csv") cfg.out_format = format;
            emit(norm_table(cfg, tol), cfg.out_format, cfg.out_path);
        } else if (transform->parsed()) {
            JobConfig cfg = load_config(config_path);
            if (!out_path.empty()) cfg.out_path = out_path;
            if (format != "csv") cfg.out_format = format;
            emit(transform_table(cfg), cfg.out_format, cfg.out_path);
        } else if (verify->parsed()) {
            std::vector<CheckResult> results;
            try {
                results = run_suite(suite, seed);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitConfig;
            }
            std::string report = render_report(suite, seed, results);
            std::cout << report;
            if (!out_path.empty()) write_file_atomic(out_path, report);
            return all_passed(results) ? kExitOk : kExitAnomaly;
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const AnomalyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnomaly;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitAnomaly;
    }
    return kExitOk;
}
