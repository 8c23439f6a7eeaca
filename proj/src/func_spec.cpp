#include "glsnorm/func_spec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace glsnorm {

namespace {
const double kInf = std::numeric_limits<double>::infinity();

double eval_power(double coeff, double expo, double x) {
    if (coeff == 0.0) return 0.0;
    if (x > 0.0) return coeff * std::pow(x, expo);
    // one-sided limit at the origin
    if (expo > 0.0) return 0.0;
    if (expo == 0.0) return coeff;
    return coeff > 0.0 ? kInf : -kInf;
}
}  // namespace

FuncSpec FuncSpec::power(double coeff, double expo) {
    if (std::isnan(coeff) || std::isnan(expo))
        throw std::invalid_argument("FuncSpec::power: NaN parameter");
    FuncSpec f;
    f.kind_ = Kind::Power;
    f.coeff_ = coeff;
    f.expo_ = coeff == 0.0 ? 0.0 : expo;
    return f;
}

FuncSpec FuncSpec::piecewise(std::vector<double> breaks, std::vector<FuncSpec> pieces) {
    if (breaks.size() != pieces.size() + 1 || pieces.empty())
        throw std::invalid_argument("FuncSpec::piecewise: need n+1 breaks for n pieces");
    if (!std::is_sorted(breaks.begin(), breaks.end()) ||
        std::adjacent_find(breaks.begin(), breaks.end()) != breaks.end())
        throw std::invalid_argument("FuncSpec::piecewise: breaks must be strictly increasing");
    FuncSpec f;
    f.kind_ = Kind::Piecewise;
    f.knots_ = std::move(breaks);
    f.pieces_ = std::move(pieces);
    return f;
}

FuncSpec FuncSpec::piecewise_constant(std::vector<double> edges, std::vector<double> values) {
    std::vector<FuncSpec> pieces;
    pieces.reserve(values.size());
    for (double v : values) pieces.push_back(constant(v));
    return piecewise(std::move(edges), std::move(pieces));
}

FuncSpec FuncSpec::indicator(double lo, double hi) {
    return piecewise({lo, hi}, {constant(1.0)});
}

FuncSpec FuncSpec::truncated(FuncSpec base, double level) {
    FuncSpec f;
    f.kind_ = Kind::Truncated;
    f.level_ = level;
    f.base_ = std::make_shared<const FuncSpec>(std::move(base));
    return f;
}

FuncSpec FuncSpec::table(std::vector<double> grid, std::vector<double> values) {
    if (grid.size() != values.size() || grid.size() < 2)
        throw std::invalid_argument("FuncSpec::table: need matching grid/values, size >= 2");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("FuncSpec::table: grid must be increasing");
    FuncSpec f;
    f.kind_ = Kind::Table;
    f.knots_ = std::move(grid);
    f.values_ = std::move(values);
    return f;
}

FuncSpec FuncSpec::opaque(std::function<double(double)> eval) {
    if (!eval) throw std::invalid_argument("FuncSpec::opaque: empty evaluator");
    FuncSpec f;
    f.kind_ = Kind::Opaque;
    f.eval_ = std::move(eval);
    return f;
}

double FuncSpec::power_coeff() const {
    if (kind_ != Kind::Power) throw std::logic_error("FuncSpec: not a power variant");
    return coeff_;
}

double FuncSpec::power_expo() const {
    if (kind_ != Kind::Power) throw std::logic_error("FuncSpec: not a power variant");
    return expo_;
}

double FuncSpec::operator()(double x) const {
    switch (kind_) {
        case Kind::Power:
            return eval_power(coeff_, expo_, x);
        case Kind::Piecewise: {
            if (x <= knots_.front() || x >= knots_.back()) return 0.0;
            auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
            std::size_t i = static_cast<std::size_t>(it - knots_.begin()) - 1;
            if (i >= pieces_.size()) i = pieces_.size() - 1;
            return pieces_[i](x);
        }
        case Kind::Truncated: {
            double v = (*base_)(x);
            return v <= level_ ? v : 0.0;
        }
        case Kind::Table: {
            if (x <= knots_.front()) return x == knots_.front() ? values_.front() : 0.0;
            if (x >= knots_.back()) return x == knots_.back() ? values_.back() : 0.0;
            auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
            std::size_t i = static_cast<std::size_t>(it - knots_.begin()) - 1;
            double t = (x - knots_[i]) / (knots_[i + 1] - knots_[i]);
            return values_[i] + t * (values_[i + 1] - values_[i]);
        }
        case Kind::Opaque:
            return eval_(x);
    }
    return 0.0;
}

FuncSpec FuncSpec::scaled(double c) const {
    if (c == 0.0) return zero();
    switch (kind_) {
        case Kind::Power:
            return power(c * coeff_, expo_);
        case Kind::Piecewise: {
            std::vector<FuncSpec> pieces;
            pieces.reserve(pieces_.size());
            for (const auto& p : pieces_) pieces.push_back(p.scaled(c));
            return piecewise(knots_, std::move(pieces));
        }
        case Kind::Table: {
            std::vector<double> vals = values_;
            for (double& v : vals) v *= c;
            return table(knots_, std::move(vals));
        }
        default: {
            FuncSpec self = *this;
            return opaque([self, c](double x) { return c * self(x); });
        }
    }
}

FuncSpec FuncSpec::abs_pow(double e) const {
    if (e == 1.0 && kind_ == Kind::Power && coeff_ >= 0.0) return *this;
    switch (kind_) {
        case Kind::Power:
            if (coeff_ == 0.0) return zero();
            return power(std::pow(std::fabs(coeff_), e), expo_ * e);
        case Kind::Piecewise: {
            std::vector<FuncSpec> pieces;
            pieces.reserve(pieces_.size());
            for (const auto& p : pieces_) pieces.push_back(p.abs_pow(e));
            return piecewise(knots_, std::move(pieces));
        }
        case Kind::Truncated: {
            // monotone in the base value: |base|^e restricted to base <= level
            if (base_->is_power() && base_->power_coeff() > 0.0 && e > 0.0) {
                FuncSpec b = base_->abs_pow(e);
                return truncated(std::move(b), std::pow(level_, e));
            }
            break;
        }
        default:
            break;
    }
    FuncSpec self = *this;
    return opaque([self, e](double x) { return std::pow(std::fabs(self(x)), e); });
}

FuncSpec FuncSpec::compose_power_arg(double r) const {
    if (r <= 0.0) throw std::invalid_argument("compose_power_arg: r must be positive");
    if (r == 1.0) return *this;
    switch (kind_) {
        case Kind::Power:
            return power(coeff_, expo_ * r);
        case Kind::Piecewise: {
            std::vector<double> breaks;
            breaks.reserve(knots_.size());
            for (double b : knots_)
                breaks.push_back(std::isinf(b) ? kInf : std::pow(b, 1.0 / r));
            std::vector<FuncSpec> pieces;
            pieces.reserve(pieces_.size());
            for (const auto& p : pieces_) pieces.push_back(p.compose_power_arg(r));
            return piecewise(std::move(breaks), std::move(pieces));
        }
        case Kind::Truncated: {
            FuncSpec b = base_->compose_power_arg(r);
            return truncated(std::move(b), level_);
        }
        default: {
            FuncSpec self = *this;
            return opaque([self, r](double x) { return self(x > 0.0 ? std::pow(x, r) : 0.0); });
        }
    }
}

FuncSpec FuncSpec::multiply(const FuncSpec& a, const FuncSpec& b) {
    if (a.is_power() && b.is_power())
        return power(a.coeff_ * b.coeff_, a.expo_ + b.expo_);
    if (a.is_power() && a.coeff_ == 0.0) return zero();
    if (b.is_power() && b.coeff_ == 0.0) return zero();
    if (b.kind_ == Kind::Piecewise && a.kind_ != Kind::Piecewise) return multiply(b, a);
    if (a.kind_ == Kind::Piecewise && (b.is_power() || b.kind_ == Kind::Piecewise ||
                                       b.kind_ == Kind::Truncated)) {
        std::vector<FuncSpec> pieces;
        pieces.reserve(a.pieces_.size());
        for (const auto& p : a.pieces_) pieces.push_back(multiply(p, b));
        return piecewise(a.knots_, std::move(pieces));
    }
    FuncSpec fa = a, fb = b;
    return opaque([fa, fb](double x) { return fa(x) * fb(x); });
}

std::vector<double> FuncSpec::breakpoints() const {
    switch (kind_) {
        case Kind::Piecewise: {
            std::vector<double> out = knots_;
            for (const auto& p : pieces_) {
                auto inner = p.breakpoints();
                out.insert(out.end(), inner.begin(), inner.end());
            }
            return out;
        }
        case Kind::Truncated: {
            auto out = base_->breakpoints();
            if (base_->is_power()) {
                double c = base_->power_coeff(), s = base_->power_expo();
                if (c > 0.0 && s != 0.0 && level_ > 0.0)
                    out.push_back(std::pow(level_ / c, 1.0 / s));
            }
            return out;
        }
        case Kind::Table:
            return knots_;
        default:
            return {};
    }
}

namespace {
void clip_append(std::vector<PowerSeg>& out, double lo, double hi, double coeff, double expo) {
    if (coeff == 0.0 || hi <= lo) return;
    out.push_back({lo, hi, coeff, expo});
}
}  // namespace

bool FuncSpec::collect_segments(double lo, double hi, std::vector<PowerSeg>& out) const {
    if (hi <= lo) return true;
    switch (kind_) {
        case Kind::Power:
            clip_append(out, lo, hi, coeff_, expo_);
            return true;
        case Kind::Piecewise: {
            for (std::size_t i = 0; i < pieces_.size(); ++i) {
                double a = std::max(lo, knots_[i]);
                double b = std::min(hi, knots_[i + 1]);
                if (b > a && !pieces_[i].collect_segments(a, b, out)) return false;
            }
            return true;
        }
        case Kind::Truncated: {
            // only power-law bases resolve analytically
            if (!base_->is_power()) return false;
            double c = base_->power_coeff(), s = base_->power_expo();
            if (c == 0.0) return true;  // identically zero, 0 <= level or not: 0*[0<=n]
            if (c < 0.0) {
                // negative base is always <= level for level >= 0
                if (level_ >= 0.0) clip_append(out, lo, hi, c, s);
                return true;
            }
            if (level_ <= 0.0) return true;  // positive base never kept
            if (s == 0.0) {
                if (c <= level_) clip_append(out, lo, hi, c, s);
                return true;
            }
            double threshold = std::pow(level_ / c, 1.0 / s);
            if (s > 0.0)  // increasing: keep x <= threshold
                clip_append(out, lo, std::min(hi, threshold), c, s);
            else  // decreasing: keep x >= threshold
                clip_append(out, std::max(lo, threshold), hi, c, s);
            return true;
        }
        default:
            return false;
    }
}

std::optional<std::vector<PowerSeg>> as_power_segments(const FuncSpec& f, double lo, double hi) {
    std::vector<PowerSeg> out;
    if (!f.collect_segments(lo, hi, out)) return std::nullopt;
    std::sort(out.begin(), out.end(),
              [](const PowerSeg& x, const PowerSeg& y) { return x.lo < y.lo; });
    return out;
}

std::vector<PowerSeg> intersect_segments(const std::vector<PowerSeg>& a,
                                         const std::vector<PowerSeg>& b) {
    std::vector<PowerSeg> out;
    for (const auto& sa : a)
        for (const auto& sb : b) {
            double lo = std::max(sa.lo, sb.lo);
            double hi = std::min(sa.hi, sb.hi);
            if (hi > lo) out.push_back({lo, hi, sa.coeff * sb.coeff, sa.expo + sb.expo});
        }
    std::sort(out.begin(), out.end(), [](const PowerSeg& x, const PowerSeg& y) {
        return x.lo < y.lo;
    });
    return out;
}

}  // namespace glsnorm
