#include "glsnorm/lp_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace glsnorm {

namespace {
const double kInf = std::numeric_limits<double>::infinity();

// sup of |c| x^e over (lo, hi); monotone, so only the endpoint limits matter.
double seg_sup(const PowerSeg& s) {
    double c = std::fabs(s.coeff);
    if (c == 0.0) return 0.0;
    if (s.expo == 0.0) return c;
    if (s.expo > 0.0) return std::isinf(s.hi) ? kInf : c * std::pow(s.hi, s.expo);
    return s.lo <= 0.0 ? kInf : c * std::pow(s.lo, s.expo);
}

double golden_max_1d(const std::function<double(double)>& g, double a, double b, int iters) {
    const double phi = 0.6180339887498949;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = g(x1), f2 = g(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = g(x1);
        }
    }
    return std::max(f1, f2);
}
}  // namespace

ExtReal ess_sup(const FuncSpec& f, const MeasureSpace& space) {
    if (space.kind() == MeasureSpace::Kind::Atoms) {
        double best = 0.0;
        for (double x : space.positions()) best = std::max(best, std::fabs(f(x)));
        return std::isinf(best) ? ExtReal::infinity() : ExtReal(best);
    }
    const double a = space.lo(), b = space.hi();
    if (auto segs = as_power_segments(f, a, b)) {
        double best = 0.0;
        for (const auto& s : *segs) best = std::max(best, seg_sup(s));
        return std::isinf(best) ? ExtReal::infinity() : ExtReal(best);
    }
    if (std::isinf(a) || std::isinf(b))
        throw std::runtime_error("ess_sup: sampled search needs a bounded interval");
    // sampled lower-bound heuristic for opaque/table functions
    const int n = 4096;
    double h = (b - a) / (n + 1);
    double best = 0.0;
    double best_x = a + h;
    for (int i = 1; i <= n; ++i) {
        double x = a + i * h;
        double v = std::fabs(f(x));
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    double lo = std::max(a, best_x - h), hi = std::min(b, best_x + h);
    double refined = golden_max_1d([&](double x) { return std::fabs(f(x)); }, lo, hi, 80);
    best = std::max(best, refined);
    return std::isinf(best) ? ExtReal::infinity() : ExtReal(best);
}

NormReport lp_norm(const FuncSpec& f, Exponent p, const MeasureSpace& space, double tol,
                   IntegrationMethod method) {
    NormReport out;
    if (p.is_inf()) {
        out.value = ess_sup(f, space);
        out.converged = out.value.is_finite();
        if (!out.converged) out.divergence_reason = "essential supremum is infinite";
        return out;
    }
    const double pe = p.value();
    NormReport inner = integrate(f.abs_pow(pe), space, tol, method);
    if (inner.value.is_infinite()) {
        out.value = ExtReal::infinity();
        out.converged = false;
        out.divergence_reason = inner.divergence_reason;
        return out;
    }
    double ip = inner.value.value();
    out.value = ExtReal(std::pow(ip, 1.0 / pe));
    out.converged = inner.converged;
    out.divergence_reason = inner.divergence_reason;
    // d(I^{1/p}) = I^{1/p-1}/p dI
    out.abs_error_estimate =
        ip > 0.0 ? inner.abs_error_estimate * std::pow(ip, 1.0 / pe - 1.0) / pe
                 : inner.abs_error_estimate;
    return out;
}

ExtReal lp_norm_value(const FuncSpec& f, Exponent p, const MeasureSpace& space, double tol,
                      IntegrationMethod method) {
    return lp_norm(f, p, space, tol, method).value;
}

}  // namespace glsnorm
