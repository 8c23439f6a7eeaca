#include "glsnorm/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "glsnorm/parallel.hpp"

namespace glsnorm {

namespace {
const double kInf = std::numeric_limits<double>::infinity();

double golden_min(const std::function<double(double)>& fn, double a, double b, double rel) {
    const double phi = 0.6180339887498949;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = fn(x1), f2 = fn(x2);
    int guard = 200;
    while ((b - a) > rel * (std::fabs(a) + std::fabs(b) + 1e-300) && guard-- > 0) {
        if (f1 > f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = fn(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = fn(x1);
        }
    }
    return f1 < f2 ? x1 : x2;
}
}  // namespace

std::vector<double> make_grid(double lo, double hi, int n, bool log_spaced) {
    std::vector<double> xs(static_cast<std::size_t>(n));
    if (n == 1) {
        xs[0] = 0.5 * (lo + hi);
        return xs;
    }
    if (log_spaced && lo > 0.0) {
        double la = std::log(lo), lb = std::log(hi);
        for (int i = 0; i < n; ++i)
            xs[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / (n - 1));
    } else {
        for (int i = 0; i < n; ++i)
            xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    }
    return xs;
}

ExtremumResult minimize_on_interval(const std::function<double(double)>& fn, double lo, double hi,
                                    const SearchOptions& opts) {
    if (!(lo < hi)) throw std::invalid_argument("minimize_on_interval: need lo < hi");
    const double w = hi - lo;
    double a = lo + opts.open_shrink * w;
    double b = hi - opts.open_shrink * w;

    std::vector<double> xs = make_grid(a, b, opts.grid_nodes, opts.log_spaced);
    for (double c : opts.extra_candidates)
        if (c > a && c < b) xs.push_back(c);
    std::sort(xs.begin(), xs.end());

    std::vector<double> vals = par::map_grid(xs, fn);
    std::size_t i = par::argmin(vals);

    ExtremumResult res;
    if (std::isinf(vals[i])) {
        res.all_infinite = true;
        res.value = kInf;
        res.x = xs[i];
        return res;
    }
    double bl = i > 0 ? xs[i - 1] : a;
    double br = i + 1 < xs.size() ? xs[i + 1] : b;
    double xstar = golden_min(fn, bl, br, opts.refine_rel);
    double vstar = fn(xstar);
    if (vstar <= vals[i]) {
        res.x = xstar;
        res.value = vstar;
    } else {
        res.x = xs[i];
        res.value = vals[i];
    }
    return res;
}

ExtremumResult minimize_on_ray(const std::function<double(double)>& fn, double lo,
                               const SearchOptions& opts) {
    // v in (0,1) -> x = lo + v/(1-v); v near 1 probes the limit x -> inf
    auto wrapped = [&fn, lo](double v) { return fn(lo + v / (1.0 - v)); };
    SearchOptions o = opts;
    o.log_spaced = false;
    o.extra_candidates.clear();
    ExtremumResult inner = minimize_on_interval(wrapped, 0.0, 1.0, o);
    ExtremumResult res;
    res.all_infinite = inner.all_infinite;
    res.value = inner.value;
    res.x = lo + inner.x / (1.0 - inner.x);
    for (double c : opts.extra_candidates) {
        if (c > lo) {
            double v = fn(c);
            if (v < res.value) {
                res.value = v;
                res.x = c;
                res.all_infinite = false;
            }
        }
    }
    return res;
}

ExtremumResult maximize_on_interval(const std::function<double(double)>& fn, double lo, double hi,
                                    const SearchOptions& opts) {
    auto neg = [&fn](double x) {
        double v = fn(x);
        return -v;
    };
    ExtremumResult r = minimize_on_interval(neg, lo, hi, opts);
    r.value = -r.value;
    return r;
}

}  // namespace glsnorm
