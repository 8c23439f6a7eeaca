#include "glsnorm/psi_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace glsnorm {

namespace {
const double kInf = std::numeric_limits<double>::infinity();

// Fritsch-Carlson monotone cubic slopes.
std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> d(n, 0.0);
    if (n == 2) {
        d[0] = d[1] = (y[1] - y[0]) / (x[1] - x[0]);
        return d;
    }
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        delta[i] = (y[i + 1] - y[i]) / h[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            double w1 = 2.0 * h[i] + h[i - 1];
            double w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    auto endpoint = [](double h0, double h1, double d0, double d1) {
        double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (d * d0 <= 0.0) return 0.0;
        if (d0 * d1 < 0.0 && std::fabs(d) > 3.0 * std::fabs(d0)) return 3.0 * d0;
        return d;
    };
    d[0] = endpoint(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = endpoint(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    return d;
}

double pchip_eval(const std::vector<double>& x, const std::vector<double>& y,
                  const std::vector<double>& d, double t) {
    if (t <= x.front()) return y.front();
    if (t >= x.back()) return y.back();
    auto it = std::upper_bound(x.begin(), x.end(), t);
    std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
    double h = x[i + 1] - x[i];
    double s = (t - x[i]) / h;
    double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
    double h10 = s * (1.0 - s) * (1.0 - s);
    double h01 = s * s * (3.0 - 2.0 * s);
    double h11 = s * s * (s - 1.0);
    return h00 * y[i] + h * h10 * d[i] + h01 * y[i + 1] + h * h11 * d[i + 1];
}
}  // namespace

PsiFunction PsiFunction::analytic(double a, double b, std::function<double(double)> eval) {
    if (!(a >= 1.0) || !(a < b))
        throw std::invalid_argument("PsiFunction: need 1 <= A < B");
    if (!eval) throw std::invalid_argument("PsiFunction: empty evaluator");
    PsiFunction f;
    f.kind_ = Kind::Analytic;
    f.a_ = a;
    f.b_ = b;
    f.eval_ = std::move(eval);
    f.validate_positive();
    return f;
}

PsiFunction PsiFunction::degenerate(double r) {
    if (!(r >= 1.0)) throw std::invalid_argument("PsiFunction::degenerate: need r >= 1");
    PsiFunction f;
    f.kind_ = Kind::Degenerate;
    f.r_ = r;
    f.a_ = r;
    f.b_ = r;
    return f;
}

PsiFunction PsiFunction::tabulated(std::vector<double> grid, std::vector<double> values,
                                   double support_lo, double support_hi) {
    if (grid.size() != values.size() || grid.size() < 2)
        throw std::invalid_argument("PsiFunction::tabulated: need matching grid/values");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("PsiFunction::tabulated: grid must be increasing");
    for (double v : values)
        if (!(v > 0.0) || std::isinf(v))
            throw std::invalid_argument("PsiFunction::tabulated: values must be positive finite");
    PsiFunction f;
    f.kind_ = Kind::Tabulated;
    f.a_ = std::isnan(support_lo) ? grid.front() : support_lo;
    f.b_ = std::isnan(support_hi) ? grid.back() : support_hi;
    if (!(f.a_ >= 1.0) || !(f.a_ < f.b_))
        throw std::invalid_argument("PsiFunction: need 1 <= A < B");
    f.slopes_ = pchip_slopes(grid, values);
    f.grid_ = std::move(grid);
    f.values_ = std::move(values);
    return f;
}

PsiFunction PsiFunction::power_growth(double coeff, double expo, double a, double b) {
    if (!(coeff > 0.0)) throw std::invalid_argument("PsiFunction::power_growth: coeff > 0");
    return analytic(a, b, [coeff, expo](double p) { return coeff * std::pow(p, expo); });
}

PsiFunction PsiFunction::constant_one(double a, double b) {
    return analytic(a, b, [](double) { return 1.0; });
}

PsiFunction PsiFunction::empty() {
    PsiFunction f;
    f.kind_ = Kind::Empty;
    return f;
}

double PsiFunction::degenerate_r() const {
    if (kind_ != Kind::Degenerate) throw std::logic_error("PsiFunction: not degenerate");
    return r_;
}

double PsiFunction::operator()(double p) const {
    switch (kind_) {
        case Kind::Empty:
            return kInf;
        case Kind::Degenerate:
            return p == r_ ? 1.0 : kInf;
        case Kind::Analytic: {
            if (!(p > a_ && p < b_)) return kInf;
            return eval_(p);
        }
        case Kind::Tabulated: {
            if (!(p > a_ && p < b_)) return kInf;
            return pchip_eval(grid_, values_, slopes_, p);
        }
    }
    return kInf;
}

void PsiFunction::validate_positive() const {
    // probe grid surrogate for inf psi > 0 over the open support
    const int n = 64;
    double hi = std::isinf(b_) ? std::max(a_ * 1e4, 1e4) : b_;
    for (int i = 1; i < n; ++i) {
        double t = static_cast<double>(i) / n;
        double p = a_ > 0.0 ? a_ * std::pow(hi / a_, t) : a_ + (hi - a_) * t;
        if (p <= a_ || p >= b_) continue;
        double v = eval_(p);
        if (std::isnan(v) || v <= 0.0)
            throw std::invalid_argument("PsiFunction: evaluator must be positive on the support");
    }
}

}  // namespace glsnorm
