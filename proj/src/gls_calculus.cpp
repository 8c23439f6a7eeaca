#include "glsnorm/gls_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "glsnorm/minimize.hpp"
#include "glsnorm/operator_norms.hpp"
#include "glsnorm/parallel.hpp"

namespace glsnorm {

namespace {
const double kInf = std::numeric_limits<double>::infinity();

SearchOptions inner_search(const TransformOptions& opts, double p) {
    SearchOptions s;
    s.grid_nodes = opts.inner_nodes;
    for (double lam : opts.extra_q_candidates) s.extra_candidates.push_back(lam * p);
    return s;
}

// Generic inner infimum over feasible q, handling degenerate psi and
// bounded/unbounded psi support.
double inner_inf(const PsiFunction& psi, double q_lo,
                 const std::function<double(double)>& factor, const SearchOptions& sopts) {
    if (psi.is_empty()) return kInf;
    if (psi.is_degenerate()) {
        double q0 = psi.degenerate_r();
        if (!(q0 > q_lo)) return kInf;
        return factor(q0);  // psi(q0) = 1
    }
    double lo = std::max(q_lo, psi.support_lo());
    double hi = psi.support_hi();
    if (!(lo < hi)) return kInf;
    auto objective = [&](double q) {
        double pv = psi(q);
        if (std::isinf(pv)) return kInf;
        double fv = factor(q);
        return std::isinf(fv) ? kInf : fv * pv;
    };
    ExtremumResult res = std::isinf(hi) ? minimize_on_ray(objective, lo, sopts)
                                        : minimize_on_interval(objective, lo, hi, sopts);
    return res.all_infinite ? kInf : res.value;
}

struct SupportScan {
    std::vector<double> grid, values;  // finite nodes only
    double lo = 0.0, hi = 0.0;
    bool empty = true;
};

// Evaluates `at` over a log grid on (p_lo, p_hi) and bisects the finiteness
// endpoints to opts.support_bisect_tol.
SupportScan scan_support(const std::function<double(double)>& at, double p_lo, double p_hi,
                         const TransformOptions& opts) {
    SupportScan scan;
    std::vector<double> xs = make_grid(p_lo * (1.0 + 1e-12) + 1e-12, p_hi * (1.0 - 1e-12),
                                       opts.tab_nodes, true);
    std::vector<double> vals = par::map_grid(xs, at);

    std::vector<std::size_t> finite;
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (vals[i] < opts.finite_threshold) finite.push_back(i);
    if (finite.empty()) return scan;

    scan.empty = false;
    for (std::size_t i : finite) {
        scan.grid.push_back(xs[i]);
        scan.values.push_back(vals[i]);
    }

    auto bisect_edge = [&](double inside, double outside) {
        while (std::fabs(outside - inside) > opts.support_bisect_tol) {
            double mid = 0.5 * (inside + outside);
            if (at(mid) < opts.finite_threshold)
                inside = mid;
            else
                outside = mid;
        }
        return inside;
    };

    std::size_t first = finite.front(), last = finite.back();
    scan.lo = first > 0 ? bisect_edge(xs[first], xs[first - 1]) : p_lo;
    scan.hi = last + 1 < xs.size() ? bisect_edge(xs[last], xs[last + 1]) : p_hi;
    return scan;
}

PsiFunction tabulate_scan(const SupportScan& scan) {
    if (scan.grid.size() < 2) {
        // single finite node: widen to a tiny analytic plateau
        double p0 = scan.grid.front(), v0 = scan.values.front();
        return PsiFunction::analytic(std::max(1.0, scan.lo), scan.hi,
                                     [v0, p0](double) { return v0; });
    }
    return PsiFunction::tabulated(scan.grid, scan.values, std::max(1.0, scan.lo), scan.hi);
}
}  // namespace

ExtReal gls_norm(const FuncSpec& f, const PsiFunction& psi, const MeasureSpace& space,
                 int p_grid_size, double tol) {
    if (psi.is_empty()) throw std::invalid_argument("gls_norm: empty generating function");
    if (p_grid_size < 16) throw std::invalid_argument("gls_norm: p_grid_size must be >= 16");
    if (psi.is_degenerate()) return lp_norm_value(f, Exponent(psi.degenerate_r()), space, tol);

    const double a = psi.support_lo();
    const double b = std::min(psi.support_hi(), 1e6);
    const double width = b - a;
    std::vector<double> ps = make_grid(a + 1e-9 * std::min(width, 1.0),
                                       b - 1e-9 * std::min(width, 1.0), p_grid_size, true);

    std::vector<double> ratios(ps.size());
    std::vector<char> diverged(ps.size(), 0);
    par::for_index(ps.size(), [&](std::size_t i) {
        ExtReal n = lp_norm_value(f, Exponent(ps[i]), space, tol);
        double pv = psi(ps[i]);
        if (n.is_infinite()) {
            diverged[i] = !std::isinf(pv);
            ratios[i] = std::isinf(pv) ? 0.0 : kInf;
        } else {
            ratios[i] = std::isinf(pv) ? 0.0 : n.value() / pv;
        }
    });
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (diverged[i]) return ExtReal::infinity();

    std::size_t best = par::argmax(ratios);
    double lo = best > 0 ? ps[best - 1] : ps.front();
    double hi = best + 1 < ps.size() ? ps[best + 1] : ps.back();
    auto ratio_at = [&](double p) {
        double pv = psi(p);
        if (std::isinf(pv)) return 0.0;
        ExtReal n = lp_norm_value(f, Exponent(p), space, tol);
        return n.is_infinite() ? kInf : n.value() / pv;
    };
    ExtremumResult res = maximize_on_interval(ratio_at, lo, hi);
    double out = std::max(ratios[best], res.value);
    return std::isinf(out) ? ExtReal::infinity() : ExtReal(out);
}

PsiFunction natural_psi(const FuncSpec& f, const MeasureSpace& space, Exponent a_end,
                        Exponent b_end) {
    const double a = a_end.value();
    const double b = b_end.is_inf() ? kInf : b_end.value();
    if (!(a < b)) throw std::invalid_argument("natural_psi: need A < B");

    // probe |f|_p across the support before committing
    const double probe_hi = std::isinf(b) ? std::max(4.0 * a, 64.0) : b;
    std::vector<double> probes = make_grid(a * (1.0 + 1e-9) + 1e-12, probe_hi * (1.0 - 1e-9), 64,
                                           true);
    for (double p : probes) {
        if (p <= a || p >= b) continue;
        if (lp_norm_value(f, Exponent(p), space).is_infinite()) {
            std::ostringstream os;
            os << "natural_psi: |f|_p diverges at p = " << p << " inside the requested support";
            throw std::invalid_argument(os.str());
        }
    }

    const bool analytic = as_power_segments(f, space.lo(), space.hi()).has_value() &&
                          space.is_interval();
    if (analytic || space.kind() == MeasureSpace::Kind::Atoms) {
        FuncSpec fc = f;
        MeasureSpace sp = space;
        return PsiFunction::analytic(
            a, b, [fc, sp](double p) { return lp_norm_value(fc, Exponent(p), sp).value(); });
    }

    std::vector<double> grid = make_grid(a * (1.0 + 1e-7), std::isinf(b) ? 1e4 : b * (1.0 - 1e-7),
                                         512, true);
    std::vector<double> vals = par::map_grid(grid, [&](double p) {
        return lp_norm_value(f, Exponent(p), space).value();
    });
    return PsiFunction::tabulated(std::move(grid), std::move(vals), a, b);
}

double theta_transform_at(const PsiFunction& psi, const std::function<double(double, double)>& bound,
                          double p, const TransformOptions& opts) {
    auto factor = [&](double q) { return bound(p, q); };
    return inner_inf(psi, p, factor, inner_search(opts, p));
}

double tau_transform_at(const PsiFunction& psi, double t, double p, const TransformOptions& opts) {
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("tau_transform: t in (0,1)");
    if (p >= 1.0 / t) return kInf;
    double q_lo = p / (1.0 - p * t);
    auto factor = [p, t](double q) {
        double base = 1.0 - t * p * q / (q - p);
        if (base <= 0.0) return kInf;
        return std::pow(base, 1.0 / q - 1.0 / p);
    };
    return inner_inf(psi, q_lo, factor, inner_search(opts, p));
}

double sigma_transform_at(const PsiFunction& psi, double r, double p,
                          const TransformOptions& opts) {
    if (!(r > 0.0)) throw std::invalid_argument("sigma_transform: r must be positive");
    double q_lo = std::max(p, p * r);
    auto factor = [p, r](double q) {
        ExtReal k = composition_norm_power_map(r, Exponent(p), Exponent(q));
        return k.is_infinite() ? kInf : k.value();
    };
    return inner_inf(psi, q_lo, factor, inner_search(opts, p));
}

PsiFunction theta_transform(const PsiFunction& psi,
                            const std::function<double(double, double)>& bound,
                            const TransformOptions& opts) {
    double p_hi = std::isinf(psi.support_hi()) ? opts.p_cap : psi.support_hi();
    auto at = [&](double p) { return theta_transform_at(psi, bound, p, opts); };
    SupportScan scan = scan_support(at, 1.0, p_hi, opts);
    if (scan.empty)
        throw std::runtime_error("theta_transform: transformed function is infinite everywhere "
                                 "(empty support)");
    return tabulate_scan(scan);
}

PsiFunction tau_transform(const PsiFunction& psi, double t, const TransformOptions& opts) {
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("tau_transform: t in (0,1)");
    if (std::isfinite(psi.support_hi()) && !psi.is_degenerate()) {
        // feasibility q > p/(1-pt) must intersect (A,B)
    }
    double p_hi = 1.0 / t;
    auto at = [&](double p) { return tau_transform_at(psi, t, p, opts); };
    SupportScan scan = scan_support(at, 1.0, p_hi, opts);
    if (scan.empty) return PsiFunction::empty();
    return tabulate_scan(scan);
}

PsiFunction sigma_transform(const PsiFunction& psi, double r, const TransformOptions& opts) {
    if (!(r > 0.0)) throw std::invalid_argument("sigma_transform: r must be positive");
    double b = psi.is_degenerate() ? psi.degenerate_r() * (1.0 + 1e-12) : psi.support_hi();
    double p_hi = std::isinf(b) ? opts.p_cap : (r >= 1.0 ? b / r : b);
    if (!(p_hi > 1.0)) return PsiFunction::empty();
    auto at = [&](double p) { return sigma_transform_at(psi, r, p, opts); };
    SupportScan scan = scan_support(at, 1.0, p_hi, opts);
    if (scan.empty) return PsiFunction::empty();
    return tabulate_scan(scan);
}

Delta2Result weak_delta2_check(const PsiFunction& psi, double r,
                               const std::vector<double>& lambda_grid,
                               const std::vector<double>& p_grid) {
    if (p_grid.empty() || lambda_grid.empty())
        throw std::invalid_argument("weak_delta2_check: grids must be nonempty");
    TransformOptions opts;
    opts.extra_q_candidates = lambda_grid;

    std::vector<double> ratios(p_grid.size());
    par::for_index(p_grid.size(), [&](std::size_t i) {
        double s = sigma_transform_at(psi, r, p_grid[i], opts);
        double pv = psi(p_grid[i]);
        ratios[i] = std::isinf(s) || std::isinf(pv) ? kInf : s / pv;
    });

    Delta2Result out;
    double cmax = 0.0;
    for (double v : ratios) {
        if (std::isinf(v)) {
            out.holds = false;
            out.constant = kInf;
            return out;
        }
        cmax = std::max(cmax, v);
    }
    out.constant = cmax;

    // log-log slope over the last decade of the p grid
    double p_max = *std::max_element(p_grid.begin(), p_grid.end());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        if (p_grid[i] < p_max / 10.0) continue;
        double x = std::log(p_grid[i]), y = std::log(std::max(ratios[i], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    out.trend_slope = n >= 2 ? (n * sxy - sx * sy) / std::max(n * sxx - sx * sx, 1e-300) : 0.0;
    out.holds = out.trend_slope <= 0.05;
    return out;
}

ExtReal fundamental_function(const PsiFunction& tau, double delta) {
    if (delta < 0.0) throw std::invalid_argument("fundamental_function: delta >= 0 required");
    if (tau.is_empty()) return ExtReal(0.0);  // sup over an empty support
    if (delta == 0.0) return ExtReal(0.0);
    if (tau.is_degenerate()) return ExtReal(std::pow(delta, 1.0 / tau.degenerate_r()));

    const double a = tau.support_lo();
    const double b = std::min(tau.support_hi(), 1e6);
    auto ratio = [&](double p) {
        double tv = tau(p);
        return std::isinf(tv) ? 0.0 : std::exp(std::log(delta) / p) / tv;
    };
    ExtremumResult res = maximize_on_interval(ratio, a, b);
    std::vector<double> xs = make_grid(a * (1 + 1e-9), b * (1 - 1e-9), 128, true);
    double best = res.value;
    for (double p : xs) best = std::max(best, ratio(p));
    return ExtReal(best);
}

double linear_substitution_gls_bound(double f_norm, double abs_det, const PsiFunction& zeta,
                                     const PsiFunction& tau) {
    if (f_norm < 0.0) throw std::invalid_argument("linear_substitution_gls_bound: f_norm >= 0");
    if (!(abs_det > 0.0))
        throw std::invalid_argument("linear_substitution_gls_bound: determinant must be nonzero");
    auto close = [](double x, double y) {
        if (std::isinf(x) && std::isinf(y)) return true;
        return std::fabs(x - y) <= 1e-9 * (1.0 + std::fabs(x) + std::fabs(y));
    };
    if (!close(zeta.support_lo(), tau.support_lo()) || !close(zeta.support_hi(), tau.support_hi()))
        throw std::invalid_argument(
            "linear_substitution_gls_bound: zeta and tau must share their support");
    if (f_norm == 0.0) return 0.0;
    ExtReal phi = fundamental_function(tau, 1.0 / abs_det);
    return phi.is_infinite() ? kInf : f_norm * phi.value();
}

}  // namespace glsnorm
