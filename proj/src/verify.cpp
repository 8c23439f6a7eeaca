#include "glsnorm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "glsnorm/convex.hpp"
#include "glsnorm/gls_calculus.hpp"
#include "glsnorm/oracle.hpp"
#include "glsnorm/parallel.hpp"

namespace glsnorm {

namespace {

const double kInf = std::numeric_limits<double>::infinity();

MeasureSpace unit_leb() { return MeasureSpace::lebesgue(0.0, 1.0); }
SpacePair unit_pair() { return {unit_leb(), unit_leb()}; }

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

CheckResult make(const std::string& name, double measured, double threshold,
                 const std::string& note = "") {
    CheckResult r;
    r.name = name;
    r.measured = measured;
    r.threshold = threshold;
    r.pass = measured <= threshold;
    r.note = note;
    return r;
}

// Doubling map frac(2x) on (0,1): two increasing branches, Lebesgue
// preserving. Step weights measurable w.r.t. the first binary digit are
// independent of f(frac(2x)) for every f.
Transform doubling_map() {
    Transform::Branch b1{0.0,
                         0.5,
                         [](double x) { return 2.0 * x; },
                         [](double y) { return 0.5 * y; },
                         [](double) { return 0.5; },
                         0.0,
                         1.0};
    Transform::Branch b2{0.5,
                         1.0,
                         [](double x) { return 2.0 * x - 1.0; },
                         [](double y) { return 0.5 * (y + 1.0); },
                         [](double) { return 0.5; },
                         0.0,
                         1.0};
    return Transform::monotone({b1, b2});
}

}  // namespace

namespace checks {

CheckResult composition_closed_form_vs_quadrature() {
    const double rs[] = {0.5, 2.0 / 3.0};
    const double ps[] = {1.0, 1.5, 2.0};
    double worst = 0.0;
    for (double r : rs) {
        Derivative z = radon_nikodym(Transform::power_map(r), unit_leb(), unit_leb());
        for (double p : ps)
            for (double q : {p + 0.5, 2.0 * p, 4.0 * p}) {
                ExtReal quad = composition_norm(z, Exponent(p), Exponent(q), unit_leb(), 1e-10,
                                                IntegrationMethod::numeric);
                ExtReal closed = composition_norm_power_map(r, Exponent(p), Exponent(q));
                worst = std::max(worst, rel_err(quad.value(), closed.value()));
            }
    }
    return make("composition.quadrature-vs-closed-form", worst, 1e-8);
}

CheckResult composition_beta_sweep() {
    const double rs[] = {0.5, 2.0 / 3.0};
    const double ps[] = {1.0, 1.5, 2.0};
    const double grid_step = std::log(16.0) / 64.0;  // 65 log nodes over [opt/4, 4 opt]
    double worst_val = 0.0, worst_beta = 0.0;
    for (double r : rs)
        for (double p : ps)
            for (double q : {p + 0.5, 2.0 * p, 4.0 * p}) {
                OperatorSpec op = CompositionOp{Transform::power_map(r)};
                BetaSweepResult sweep = beta_sweep(op, Exponent(p), Exponent(q), unit_pair());
                double want = composition_norm_power_map(r, Exponent(p), Exponent(q)).value();
                worst_val = std::max(worst_val, rel_err(sweep.value.value(), want));
                double opt = 1.0 / (q - p);
                worst_beta = std::max(worst_beta,
                                      std::fabs(std::log(sweep.beta_star / opt)) / grid_step);
            }
    CheckResult r = make("composition.beta-sweep-attains-constant", worst_val, 1e-6);
    if (worst_beta > 1.0 + 1e-9) {
        r.pass = false;
        r.note = "beta* further than one grid step from 1/(q-p)";
    }
    return r;
}

CheckResult hard_case_finiteness_boundary() {
    int mismatches = 0;
    for (double q : {1.5, 2.0, 2.5, 3.0})
        if (!composition_norm_power_map(3.0, Exponent(1.0), Exponent(q)).is_infinite())
            ++mismatches;
    for (double q : {3.0001, 3.5, 4.0, 10.0})
        if (composition_norm_power_map(3.0, Exponent(1.0), Exponent(q)).is_infinite())
            ++mismatches;
    // quadrature route agrees on both sides of the boundary
    Derivative z = radon_nikodym(Transform::power_map(3.0), unit_leb(), unit_leb());
    if (!composition_norm(z, Exponent(1.0), Exponent(2.0), unit_leb()).is_infinite()) ++mismatches;
    if (composition_norm(z, Exponent(1.0), Exponent(4.0), unit_leb()).is_infinite()) ++mismatches;
    return make("composition.hard-case-finite-iff-q-above-pr", mismatches, 0.0);
}

CheckResult hard_case_asymptotic_ratio() {
    double ratios[3];
    const double qs[3] = {3.1, 3.01, 3.001};
    for (int i = 0; i < 3; ++i) {
        double s = composition_norm_power_map(3.0, Exponent(1.0), Exponent(qs[i])).value();
        double a = hard_case_asymptotic(3.0, Exponent(1.0), Exponent(qs[i])).value();
        ratios[i] = s / a;
    }
    bool monotone = ratios[0] >= ratios[1] && ratios[1] >= ratios[2] && ratios[2] >= 1.0 - 1e-9;
    CheckResult r = make("composition.hard-case-asymptotic-ratio",
                         std::fabs(ratios[2] - 1.0), 0.1);
    if (!monotone) {
        r.pass = false;
        r.note = "ratio sequence not monotone toward 1";
    }
    return r;
}

CheckResult endpoint_equals_ess_sup() {
    Derivative z = radon_nikodym(Transform::power_map(0.5), unit_leb(), unit_leb());
    double worst = 0.0;
    for (double p : {1.0, 2.0, 4.0}) {
        double got = composition_norm(z, Exponent(p), Exponent(p), unit_leb()).value();
        double want = std::pow(0.5, -1.0 / p);  // ess-sup(z)^(1/p), z(y) = 2y on (0,1)
        worst = std::max(worst, rel_err(got, want));
        double sup = ess_sup(z.density(), unit_leb()).value();
        worst = std::max(worst, rel_err(std::pow(sup, 1.0 / p), want));
    }
    return make("composition.endpoint-p-equals-q-ess-sup", worst, 1e-10);
}

CheckResult multiplicative_discrete_oracle(std::uint64_t seed) {
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        SplitMix64 rng = substream(seed, 1000 + static_cast<std::uint64_t>(trial));
        int n = static_cast<int>(rng.uniform_int(2, 200));
        std::vector<double> pos(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n)),
            g(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            pos[static_cast<std::size_t>(i)] = i;
            w[static_cast<std::size_t>(i)] = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
            g[static_cast<std::size_t>(i)] = std::exp(rng.uniform(std::log(1e-2), std::log(1e2)));
        }
        double p = 1.0 + 2.0 * rng.next_double();
        double q = p + 0.2 + 3.0 * rng.next_double();
        MeasureSpace atoms = MeasureSpace::atoms_at(pos, w);
        OperatorSpec op = MultiplicativeOp{FuncSpec::table(pos, g)};
        double got = discrete_exact_norm(op, Exponent(p), Exponent(q), atoms).value();

        double s = p * q / (q - p), acc = 0.0;
        for (int i = 0; i < n; ++i)
            acc += std::pow(g[static_cast<std::size_t>(i)], s) * w[static_cast<std::size_t>(i)];
        double want = std::pow(acc, 1.0 / p - 1.0 / q);
        worst = std::max(worst, rel_err(got, want));
    }
    return make("multiplicative.discrete-oracle-100-spaces", worst, 1e-12);
}

CheckResult multiplicative_continuous_example() {
    const double t = 0.1, p = 2.0, q = 4.0;
    double want = std::pow(1.0 - t * p * q / (q - p), 1.0 / q - 1.0 / p);
    double got =
        multiplicative_norm(FuncSpec::power(1.0, -t), Exponent(p), Exponent(q), unit_leb()).value();
    double worst = rel_err(got, want);

    OperatorSpec op = MultiplicativeOp{FuncSpec::power(1.0, -t)};
    BetaSweepResult sweep = beta_sweep(op, Exponent(p), Exponent(q), unit_pair());
    worst = std::max(worst, rel_err(sweep.value.value(), want));
    return make("multiplicative.continuous-example-attained", worst, 1e-6);
}

CheckResult multiplicative_divergence_flag() {
    const double p = 2.0, q = 4.0;
    int mismatches = 0;
    for (double t : {0.25, 0.3, 0.6}) {  // t*p*q/(q-p) >= 1
        ExtReal v =
            multiplicative_norm(FuncSpec::power(1.0, -t), Exponent(p), Exponent(q), unit_leb());
        if (!v.is_infinite()) ++mismatches;
    }
    for (double t : {0.2499, 0.1, 0.01}) {
        ExtReal v =
            multiplicative_norm(FuncSpec::power(1.0, -t), Exponent(p), Exponent(q), unit_leb());
        if (v.is_infinite()) ++mismatches;
    }
    if (!multiplicative_norm(FuncSpec::power(1.0, -0.1), Exponent(4.0), Exponent(2.0), unit_leb())
             .is_infinite())
        ++mismatches;  // q < p diverges outright
    return make("multiplicative.divergence-flag-exact", mismatches, 0.0);
}

CheckResult product_bound_reduces_to_composition() {
    ProductOp op{FuncSpec::constant(1.0), Transform::power_map(0.5)};
    BoundResult b = product_norm_bound(op, Exponent(2.0), Exponent(4.0), unit_pair());
    double want = composition_norm_power_map(0.5, Exponent(2.0), Exponent(4.0)).value();
    return make("product.bound-reduces-to-composition", rel_err(b.value.value(), want), 1e-6);
}

CheckResult product_bound_reduces_to_multiplicative() {
    ProductOp op{FuncSpec::power(1.0, -0.1), Transform::identity()};
    BoundResult b = product_norm_bound(op, Exponent(2.0), Exponent(4.0), unit_pair());
    double want =
        multiplicative_norm(FuncSpec::power(1.0, -0.1), Exponent(2.0), Exponent(4.0), unit_leb())
            .value();
    return make("product.bound-reduces-to-multiplicative", rel_err(b.value.value(), want), 1e-6);
}

CheckResult transfer_matches_product_bound() {
    const double r = 2.0, t = 0.05, p = 1.0, q = 8.0;
    BoundResult transfer = transfer_function(r, t, Exponent(p), Exponent(q));
    ProductOp op{FuncSpec::power(1.0, -r * t), Transform::power_map(r)};
    op.factored_h = FuncSpec::power(1.0, -t);
    BoundResult bound = product_norm_bound(op, Exponent(p), Exponent(q), unit_pair());
    double worst = rel_err(transfer.value.value(), bound.value.value());

    CheckResult res = make("product.transfer-matches-product-bound", worst, 1e-9);
    double lo = std::max(p, p * r), hi = q / (t * q + 1.0);
    if (!(transfer.minimizer > lo && transfer.minimizer < hi)) {
        res.pass = false;
        res.note = "minimizer escaped the feasible interval";
    }
    // good case keeps the closed bound r^(-1/p) e^(-1/q)
    BoundResult good = transfer_function(0.5, 0.1, Exponent(1.0), Exponent(4.0));
    if (!(good.value.value() <= 2.0 * std::exp(-0.25) * (1.0 + 1e-12))) {
        res.pass = false;
        res.note = "good-case transfer bound violated";
    }
    return res;
}

namespace {
CheckResult probe_family(const std::string& name, const OperatorSpec& op, double p, double q,
                         double constant, std::uint64_t seed, int count) {
    ExtReal maxq = random_probe(op, Exponent(p), Exponent(q), unit_pair(), seed, count);
    double excess = maxq.value() / constant - 1.0;
    std::ostringstream note;
    note << "max quotient " << maxq.value() << " vs constant " << constant;
    return make(name, excess, 1e-8, note.str());
}
}  // namespace

CheckResult random_probes_composition(std::uint64_t seed, int count) {
    double c = composition_norm_power_map(0.5, Exponent(2.0), Exponent(4.0)).value();
    return probe_family("probes.composition-upper-bound",
                        CompositionOp{Transform::power_map(0.5)}, 2.0, 4.0, c, seed, count);
}

CheckResult random_probes_multiplicative(std::uint64_t seed, int count) {
    double c =
        multiplicative_norm(FuncSpec::power(1.0, -0.1), Exponent(2.0), Exponent(4.0), unit_leb())
            .value();
    return probe_family("probes.multiplicative-upper-bound",
                        MultiplicativeOp{FuncSpec::power(1.0, -0.1)}, 2.0, 4.0, c, seed, count);
}

CheckResult random_probes_product(std::uint64_t seed, int count) {
    ProductOp op{FuncSpec::power(1.0, -0.1), Transform::power_map(2.0)};
    op.factored_h = FuncSpec::power(1.0, -0.05);
    double c = product_norm_bound(op, Exponent(1.0), Exponent(8.0), unit_pair()).value.value();
    return probe_family("probes.product-upper-bound", op, 1.0, 8.0, c, seed, count);
}

CheckResult random_probes_independent(std::uint64_t seed, int count) {
    ProductOp op{FuncSpec::piecewise_constant({0.0, 0.5, 1.0}, {0.7, 1.9}), doubling_map()};
    op.independent = true;
    double c = independent_product_norm(op, Exponent(2.0), Exponent(4.0), unit_pair()).value();
    return probe_family("probes.independent-product-exact-norm", op, 2.0, 4.0, c, seed, count);
}

CheckResult hoelder_property(std::uint64_t seed) {
    double worst = -kInf;
    for (int i = 0; i < 50; ++i) {
        SplitMix64 rng = substream(seed, 2000 + static_cast<std::uint64_t>(i));
        double s1 = rng.uniform(-0.4, 2.0), s2 = rng.uniform(-0.4, 2.0);
        double c1 = std::exp(rng.uniform(-1.0, 1.0)), c2 = std::exp(rng.uniform(-1.0, 1.0));
        double alpha = rng.uniform(1.1, 4.0);
        double gamma = alpha / (alpha - 1.0);
        FuncSpec f = FuncSpec::power(c1, s1), g = FuncSpec::power(c2, s2);
        ExtReal lhs = lp_norm_value(FuncSpec::multiply(f, g), Exponent(1.0), unit_leb());
        ExtReal rhs = lp_norm_value(f, Exponent(alpha), unit_leb()) *
                      lp_norm_value(g, Exponent(gamma), unit_leb());
        if (rhs.is_infinite()) continue;  // inequality trivially holds
        worst = std::max(worst, lhs.value() / rhs.value() - 1.0);
    }
    return make("analysis.hoelder-inequality", worst, 1e-9);
}

CheckResult truncation_monotone() {
    // bounded density: the sequence is constant once the cutoff clears it
    OperatorSpec good = CompositionOp{Transform::power_map(0.5)};
    auto seq = truncation_sequence(good, Exponent(2.0), Exponent(4.0), unit_pair(),
                                   {1.0, 2.0, 4.0, 1e3, 1e6});
    double worst = 0.0;
    for (std::size_t i = 1; i < seq.size(); ++i)
        worst = std::max(worst, seq[i - 1].value() - seq[i].value());
    double k = composition_norm_power_map(0.5, Exponent(2.0), Exponent(4.0)).value();
    worst = std::max(worst, std::fabs(seq.back().value() - k) / k - 1e-4);

    // divergent constant: quotients pass any fixed bound
    OperatorSpec hard = CompositionOp{Transform::power_map(3.0)};
    auto hard_seq = truncation_sequence(hard, Exponent(1.0), Exponent(2.0), unit_pair(),
                                        {1e2, 1e4, 1e6, 1e9});
    for (std::size_t i = 1; i < hard_seq.size(); ++i)
        worst = std::max(worst, hard_seq[i - 1].value() - hard_seq[i].value());
    CheckResult r = make("oracle.truncation-sequence-monotone", std::max(worst, 0.0), 1e-9);
    if (hard_seq.back().value() <= 100.0) {
        r.pass = false;
        r.note = "divergent-case quotient failed to exceed 100 by n = 1e9";
    }
    return r;
}

CheckResult natural_psi_normalization() {
    FuncSpec f = FuncSpec::power(1.0, -0.5);
    PsiFunction psi = natural_psi(f, unit_leb(), Exponent(1.0), Exponent(2.0));
    double worst = std::fabs(gls_norm(f, psi, unit_leb()).value() - 1.0);
    // the generating function itself matches the closed form |f|_p
    for (double p : {1.25, 1.5, 1.75}) {
        double want = std::pow(2.0 / (2.0 - p), 1.0 / p);
        worst = std::max(worst, rel_err(psi(p), want));
    }
    return make("gls.natural-psi-normalization", worst, 1e-9);
}

CheckResult degenerate_reproduces_lr() {
    FuncSpec f = FuncSpec::power(1.0, -0.5);
    double worst = 0.0;
    for (double r : {1.25, 1.5, 1.9}) {
        double via_gls = gls_norm(f, PsiFunction::degenerate(r), unit_leb()).value();
        double direct = lp_norm_value(f, Exponent(r), unit_leb()).value();
        worst = std::max(worst, rel_err(via_gls, direct));
    }
    ExtReal one = gls_norm(FuncSpec::constant(1.0), PsiFunction::degenerate(2.0), unit_leb());
    worst = std::max(worst, std::fabs(one.value() - 1.0));
    return make("gls.degenerate-psi-reproduces-lr", worst, 1e-15);
}

CheckResult gls_contract_sigma(std::uint64_t seed) {
    const double r = 0.5;
    PsiFunction psi = PsiFunction::power_growth(1.0, 0.5);
    PsiFunction sigma = sigma_transform(psi, r);
    double worst = -kInf;
    for (int i = 0; i < 50; ++i) {
        SplitMix64 rng = substream(seed, 3000 + static_cast<std::uint64_t>(i));
        double s = rng.uniform(0.0, 3.0);
        double c = std::exp(rng.uniform(-2.0, 2.0));
        FuncSpec f = FuncSpec::power(c, s);
        double rhs = gls_norm(f, psi, unit_leb()).value();
        double lhs = gls_norm(f.compose_power_arg(r), sigma, unit_leb()).value();
        worst = std::max(worst, lhs / rhs - 1.0);
    }
    return make("gls.composition-contract-sigma", worst, 1e-8);
}

CheckResult weak_delta2_cases() {
    std::vector<double> lambdas{2.5, 3.0, 4.0, 8.0};
    std::vector<double> ps;
    for (double p = 1.0; p <= 1024.0; p *= 2.0) ps.push_back(p);

    int mismatches = 0;
    double cmax = 0.0;
    for (double m : {1.0, 2.0}) {
        Delta2Result d = weak_delta2_check(PsiFunction::power_growth(1.0, 1.0 / m), 2.0, lambdas,
                                           ps);
        if (!d.holds) ++mismatches;
        cmax = std::max(cmax, d.constant);
    }
    Delta2Result one = weak_delta2_check(PsiFunction::constant_one(), 1.0, {1.5, 2.0}, ps);
    if (!one.holds || std::fabs(one.constant - 1.0) > 1e-6) ++mismatches;

    PsiFunction bounded =
        natural_psi(FuncSpec::power(1.0, -0.5), unit_leb(), Exponent(1.0), Exponent(2.0));
    Delta2Result fail = weak_delta2_check(bounded, 3.0, lambdas, {1.0, 1.2, 1.5});
    if (fail.holds) ++mismatches;

    std::ostringstream note;
    note << "max fitted constant " << cmax;
    return make("gls.weak-delta2-cases", mismatches, 0.0, note.str());
}

CheckResult counterexample_pipeline() {
    int mismatches = 0;
    FuncSpec f = FuncSpec::power(1.0, -0.5);

    PsiFunction psi_f = natural_psi(f, unit_leb(), Exponent(1.0), Exponent(2.0));
    if (psi_f.support_lo() != 1.0 || psi_f.support_hi() != 2.0) ++mismatches;

    Derivative z = radon_nikodym(Transform::power_map(3.0), unit_leb(), unit_leb());
    if (!z.absolutely_continuous() || !z.density().is_power() ||
        rel_err(z.density().power_coeff(), 1.0 / 3.0) > 1e-15 ||
        rel_err(z.density().power_expo(), -2.0 / 3.0) > 1e-15)
        ++mismatches;

    if (!sigma_transform(psi_f, 3.0).is_empty()) ++mismatches;

    FuncSpec composed = Transform::power_map(3.0).compose(f);
    if (!composed.is_power() || rel_err(composed.power_expo(), -1.5) > 1e-15) ++mismatches;
    for (double p : {1.0, 1.5, 2.0, 4.0, 8.0}) {
        NormReport rep = lp_norm(composed, Exponent(p), unit_leb());
        if (!rep.value.is_infinite() || !rep.divergence_reason) ++mismatches;
    }
    return make("counterexample.pipeline-reproduced", mismatches, 0.0);
}

CheckResult min_identity_vs_grid(std::uint64_t seed) {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        SplitMix64 rng = substream(seed, 4000 + static_cast<std::uint64_t>(i));
        double a = rng.uniform(-2.0, 2.0);
        double b = a + std::exp(rng.uniform(-2.0, 2.0));
        double gamma = std::exp(rng.uniform(-1.5, 1.5));
        double beta = std::exp(rng.uniform(-1.5, 1.5));
        MinIdentityResult closed = min_identity(a, b, gamma, beta);

        auto objective = [&](double x) {
            return std::pow(x - a, -gamma) * std::pow(b - x, -beta);
        };
        SearchOptions opts;
        opts.grid_nodes = 100001;
        opts.log_spaced = false;
        ExtremumResult grid = minimize_on_interval(objective, a, b, opts);
        worst = std::max(worst, rel_err(grid.value, closed.value));
        worst = std::max(worst, std::fabs(grid.x - closed.x_star) / (b - a));
    }
    return make("analysis.min-identity-vs-grid", worst, 1e-9);
}

CheckResult young_fenchel_biconjugacy(std::uint64_t seed) {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
        SplitMix64 rng = substream(seed, 5000 + static_cast<std::uint64_t>(t));
        int n = static_cast<int>(rng.uniform_int(8, 40));
        std::vector<double> grid(static_cast<std::size_t>(n));
        double x = rng.uniform(0.0, 1.0);
        for (int i = 0; i < n; ++i) {
            grid[static_cast<std::size_t>(i)] = x;
            x += 0.05 + rng.uniform(0.0, 0.5);
        }
        std::vector<double> vals(static_cast<std::size_t>(n));
        double v = rng.uniform(-1.0, 1.0), slope = rng.uniform(-5.0, 0.0);
        vals[0] = v;
        for (int i = 1; i < n; ++i) {
            slope += std::exp(rng.uniform(-3.0, 1.0));
            v += slope * (grid[static_cast<std::size_t>(i)] - grid[static_cast<std::size_t>(i - 1)]);
            vals[static_cast<std::size_t>(i)] = v;
        }
        ConvexFunctionTable nu{grid, vals};
        ConvexFunctionTable back = biconjugate(nu);
        for (int i = 0; i < n; ++i)
            worst = std::max(worst, std::fabs(back.values[static_cast<std::size_t>(i)] -
                                              vals[static_cast<std::size_t>(i)]));
    }

    // self-conjugate case u^2/2 against the analytic conjugate
    {
        std::vector<double> grid = make_grid(1e-4, 10.0, 512, false);
        std::vector<double> vals(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = 0.5 * grid[i] * grid[i];
        ConjugateTable conj = young_fenchel({grid, vals});
        for (std::size_t i = 0; i < conj.table.grid.size(); ++i) {
            double vv = conj.table.grid[i];
            if (vv < 0.5 || vv > 5.0 || conj.at_boundary[i]) continue;
            worst = std::max(worst, std::fabs(conj.table.values[i] - 0.5 * vv * vv) / 1e2);
        }
    }
    return make("analysis.young-fenchel-biconjugacy", worst, 1e-6);
}

CheckResult orlicz_continuity_and_slope() {
    double worst = 0.0;
    for (double m : {1.0, 2.0}) {
        OrliczFunction N(PsiFunction::power_growth(1.0, 1.0 / m));
        double below = N(M_E * (1.0 - 1e-9)), above = N(M_E * (1.0 + 1e-9));
        worst = std::max(worst, std::fabs(above - below) / N(M_E));

        double slope = (std::log(std::log(N(1e3))) - std::log(std::log(N(10.0)))) /
                       (std::log(1e3) - std::log(10.0));
        worst = std::max(worst, std::fabs(slope / m - 1.0) / 0.05 * 1e-6);
        if (std::fabs(slope / m - 1.0) > 0.05) worst = std::max(worst, 1.0);
    }
    return make("analysis.orlicz-continuity-and-growth-slope", worst, 1e-6);
}

}  // namespace checks

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
    using namespace checks;
    std::vector<CheckResult> out;
    auto add = [&out](CheckResult r) { out.push_back(std::move(r)); };

    const bool all = suite == "all";
    if (all || suite == "sharpness") {
        add(composition_closed_form_vs_quadrature());
        add(composition_beta_sweep());
        add(hard_case_finiteness_boundary());
        add(hard_case_asymptotic_ratio());
        add(endpoint_equals_ess_sup());
        add(multiplicative_discrete_oracle(seed));
        add(multiplicative_continuous_example());
        add(multiplicative_divergence_flag());
        add(product_bound_reduces_to_composition());
        add(product_bound_reduces_to_multiplicative());
        add(transfer_matches_product_bound());
    }
    if (all || suite == "holder") {
        add(random_probes_composition(seed, 500));
        add(random_probes_multiplicative(seed, 500));
        add(random_probes_product(seed, 500));
        add(random_probes_independent(seed, 500));
        add(hoelder_property(seed));
        add(truncation_monotone());
    }
    if (all || suite == "gls") {
        add(natural_psi_normalization());
        add(degenerate_reproduces_lr());
        add(gls_contract_sigma(seed));
        add(weak_delta2_cases());
        add(min_identity_vs_grid(seed));
        add(young_fenchel_biconjugacy(seed));
        add(orlicz_continuity_and_slope());
    }
    if (all || suite == "counterexample") {
        add(counterexample_pipeline());
    }
    if (out.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
    return out;
}

std::string render_report(const std::string& suite, std::uint64_t seed,
                          const std::vector<CheckResult>& results) {
    std::ostringstream os;
    os << "glsnorm verify suite=" << suite << " seed=" << seed << "\n";
    std::size_t passed = 0;
    for (const auto& r : results) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), " measured=%.6e threshold=%.6e", r.measured, r.threshold);
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << buf;
        if (!r.note.empty()) os << " | " << r.note;
        os << "\n";
        if (r.pass) ++passed;
    }
    os << "result: " << (passed == results.size() ? "PASS" : "FAIL") << " (" << passed << "/"
       << results.size() << ")\n";
    return os.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace glsnorm
