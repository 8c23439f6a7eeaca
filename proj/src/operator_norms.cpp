#include "glsnorm/operator_norms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace glsnorm {

namespace {
const double kInf = std::numeric_limits<double>::infinity();

double ext_to_double(ExtReal v) { return v.value(); }
}  // namespace

NormComputation composition_norm_detailed(const Derivative& deriv, Exponent p, Exponent q,
                                          const MeasureSpace& nu, double tol,
                                          IntegrationMethod method) {
    if (q < p)
        throw std::invalid_argument("composition_norm: requires q >= p");
    NormComputation out;
    if (!deriv.absolutely_continuous()) {
        out.value = ExtReal::infinity();
        out.method = "not-absolutely-continuous";
        out.diagnostics = deriv.reason();
        return out;
    }
    const FuncSpec& z = deriv.density();

    if (p == q) {
        out.value = ess_sup(z, nu).pow(p.reciprocal());
        out.method = "ess-sup";
        return out;
    }

    NormReport rep;
    double outer;
    if (q.is_inf()) {
        rep = integrate(z, nu, tol, method);
        outer = p.reciprocal();
        out.method = "total-mass";
    } else {
        const double pe = p.value(), qe = q.value();
        rep = integrate(z.abs_pow(qe / (qe - pe)), nu, tol, method);
        outer = 1.0 / pe - 1.0 / qe;
        out.method = "quadrature";
    }
    out.value = rep.value.pow(outer);
    out.diagnostics = rep.divergence_reason;
    if (rep.value.is_finite() && rep.value.value() > 0.0)
        out.abs_error = rep.abs_error_estimate * outer *
                        std::pow(rep.value.value(), outer - 1.0);
    return out;
}

ExtReal composition_norm(const Derivative& deriv, Exponent p, Exponent q, const MeasureSpace& nu,
                         double tol, IntegrationMethod method) {
    return composition_norm_detailed(deriv, p, q, nu, tol, method).value;
}

ExtReal composition_norm_power_map(double r, Exponent p, Exponent q) {
    if (!(r > 0.0)) throw std::invalid_argument("composition_norm_power_map: r must be positive");
    if (q < p) throw std::invalid_argument("composition_norm_power_map: requires q >= p");

    if (p == q) {
        if (r > 1.0) return ExtReal::infinity();  // density unbounded near 0
        return ExtReal(std::pow(r, -p.reciprocal()));
    }
    const double pe = p.value();
    if (q.is_inf()) return ExtReal(1.0);  // unit total mass on (0,1)
    const double qe = q.value();
    if (r > 1.0 && qe <= pe * r) return ExtReal::infinity();
    double val = std::pow(r, -1.0 / qe) *
                 std::pow((qe - pe) / (qe - pe * r), 1.0 / pe - 1.0 / qe);
    return ExtReal(val);
}

ExtReal hard_case_asymptotic(double r, Exponent p, Exponent q) {
    if (!(r > 1.0)) throw std::invalid_argument("hard_case_asymptotic: requires r > 1");
    if (p.is_inf() || q.is_inf())
        throw std::invalid_argument("hard_case_asymptotic: finite exponents required");
    const double pe = p.value(), qe = q.value();
    if (!(qe > pe * r)) throw std::invalid_argument("hard_case_asymptotic: requires q > p*r");
    double expo = (r - 1.0) / (pe * r);
    double val = std::pow(r, -1.0 / (pe * r)) * std::pow(pe * (r - 1.0) / (qe - pe * r), expo);
    return ExtReal(val);
}

ExtReal multiplicative_norm(const FuncSpec& g, Exponent p, Exponent q, const MeasureSpace& nu,
                            double tol) {
    if (q < p) return ExtReal::infinity();
    if (p == q) return ess_sup(g, nu);
    if (q.is_inf()) return lp_norm_value(g, p, nu, tol);
    const double pe = p.value(), qe = q.value();
    return lp_norm_value(g, Exponent(pe * qe / (qe - pe)), nu, tol);
}

BoundResult product_norm_bound(const ProductOp& op, Exponent p, Exponent q,
                               const SpacePair& spaces, double tol) {
    if (!(p < q)) throw std::invalid_argument("product_norm_bound: requires p < q");
    Derivative deriv = radon_nikodym(op.xi, spaces.mu, spaces.nu);
    const FuncSpec& w = op.factored_h ? *op.factored_h : op.g;

    auto objective = [&](double l) {
        ExtReal k = composition_norm(deriv, p, Exponent(l), spaces.nu, tol);
        if (k.is_infinite()) return kInf;
        ExtReal m = multiplicative_norm(w, Exponent(l), q, spaces.nu, tol);
        return ext_to_double(k * m);
    };

    ExtremumResult res;
    if (q.is_inf())
        res = minimize_on_ray(objective, p.value());
    else
        res = minimize_on_interval(objective, p.value(), q.value());

    BoundResult out;
    out.minimizer = res.x;
    if (res.all_infinite) {
        out.value = ExtReal::infinity();
        out.diagnostic = "every intermediate exponent gives an infinite factor";
    } else {
        out.value = std::isinf(res.value) ? ExtReal::infinity() : ExtReal(res.value);
    }
    return out;
}

BoundResult product_particular_bound(const FuncSpec& h, const Derivative& deriv, Exponent p,
                                     Exponent q, const MeasureSpace& nu, double tol) {
    if (!(p < q)) throw std::invalid_argument("product_particular_bound: requires p < q");
    if (q.is_inf())
        throw std::invalid_argument("product_particular_bound: finite q required");
    if (!deriv.absolutely_continuous()) return {ExtReal::infinity(), 0.0, deriv.reason()};

    const double pe = p.value(), qe = q.value();
    const double budget = (qe - pe) / qe;  // 1/theta + 1/tau
    const FuncSpec& z = deriv.density();

    // u = 1/theta in (0, budget); tau = 1/(budget - u)
    auto objective = [&](double u) {
        double theta = 1.0 / u;
        double tau = 1.0 / (budget - u);
        ExtReal hn = lp_norm_value(h, Exponent(pe * theta), nu, tol);
        if (hn.is_infinite()) return kInf;
        ExtReal zn = lp_norm_value(z, Exponent(tau), nu, tol);
        if (zn.is_infinite()) return kInf;
        return ext_to_double(hn * zn.pow(1.0 / pe));
    };

    ExtremumResult res = minimize_on_interval(objective, 0.0, budget);
    BoundResult out;
    out.minimizer = 1.0 / res.x;  // report theta*
    if (res.all_infinite) {
        out.value = ExtReal::infinity();
        out.diagnostic = "every Hoelder splitting gives an infinite factor";
    } else {
        out.value = std::isinf(res.value) ? ExtReal::infinity() : ExtReal(res.value);
    }
    return out;
}

ExtReal independent_product_norm(const ProductOp& op, Exponent p, Exponent q,
                                 const SpacePair& spaces, double tol) {
    if (!op.independent)
        throw std::invalid_argument(
            "independent_product_norm: operator not declared independent; the formula is invalid "
            "without that hypothesis");
    if (!(p < q)) throw std::invalid_argument("independent_product_norm: requires p < q");
    Derivative deriv = radon_nikodym(op.xi, spaces.mu, spaces.nu);
    ExtReal gnorm = lp_norm_value(op.g, p, spaces.mu, tol);
    return gnorm * composition_norm(deriv, p, q, spaces.nu, tol);
}

MinIdentityResult min_identity(double a, double b, double gamma, double beta) {
    if (!(a < b)) throw std::invalid_argument("min_identity: requires a < b");
    if (!(gamma > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("min_identity: exponents must be positive");
    double s = beta + gamma;
    double x_star = (gamma * b + beta * a) / s;
    double log_val = s * std::log(s) - beta * std::log(beta) - gamma * std::log(gamma) -
                     s * std::log(b - a);
    return {x_star, std::exp(log_val)};
}

BoundResult transfer_function(double r, double t, Exponent p, Exponent q) {
    if (!(r > 0.0)) throw std::invalid_argument("transfer_function: r must be positive");
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("transfer_function: t in (0,1)");
    if (p.is_inf() || q.is_inf())
        throw std::invalid_argument("transfer_function: finite exponents required");
    const double pe = p.value(), qe = q.value();

    const double lo = std::max(pe, pe * r);
    const double hi = qe / (t * qe + 1.0);
    BoundResult out;
    if (!(lo < hi)) {
        out.value = ExtReal::infinity();
        out.diagnostic = "empty feasible interval: max(p, p*r) >= q/(t*q + 1)";
        return out;
    }

    auto objective = [&](double l) {
        ExtReal k = composition_norm_power_map(r, p, Exponent(l));
        if (k.is_infinite()) return kInf;
        double base = 1.0 - t * l * qe / (qe - l);
        if (base <= 0.0) return kInf;
        return k.value() * std::pow(base, 1.0 / qe - 1.0 / l);
    };

    SearchOptions opts;
    // stationary-point candidate; untrusted, used only when feasible
    double denom = (1.0 + qe * t) * (r - 1.0 + t * pe * r);
    if (denom != 0.0) {
        double l0 = (pe * pe * r * (1.0 + qe * t) + qe * (r - 1.0)) / denom;
        if (std::isfinite(l0) && l0 > lo && l0 < hi) opts.extra_candidates.push_back(l0);
    }

    ExtremumResult res = minimize_on_interval(objective, lo, hi, opts);
    out.minimizer = res.x;
    if (res.all_infinite) {
        out.value = ExtReal::infinity();
        out.diagnostic = "objective infinite on the whole feasible interval";
    } else {
        out.value = ExtReal(res.value);
    }
    return out;
}

double linear_substitution_norm(double abs_det, Exponent p) {
    if (!(abs_det > 0.0))
        throw std::invalid_argument("linear_substitution_norm: determinant must be nonzero");
    return std::pow(abs_det, -p.reciprocal());
}

}  // namespace glsnorm
