#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace glsnorm {

/// Nonnegative extended real in [0, +inf].
///
/// Used for norms and operator constants that may legitimately diverge.
/// Arithmetic follows the measure-theoretic conventions:
///   0 * inf = 0,  c / inf = 0,  inf absorbs addition and positive products.
class ExtReal {
  public:
    ExtReal() : v_(0.0) {}

    explicit ExtReal(double v) : v_(v) {
        if (std::isnan(v) || v < 0.0)
            throw std::invalid_argument("ExtReal: value must be nonnegative and not NaN");
    }

    static ExtReal infinity() {
        ExtReal x;
        x.v_ = std::numeric_limits<double>::infinity();
        return x;
    }

    double value() const { return v_; }
    bool is_finite() const { return std::isfinite(v_); }
    bool is_infinite() const { return std::isinf(v_); }

    friend ExtReal operator+(ExtReal a, ExtReal b) {
        ExtReal r;
        r.v_ = a.v_ + b.v_;
        return r;
    }

    friend ExtReal operator*(ExtReal a, ExtReal b) {
        ExtReal r;
        if ((a.v_ == 0.0 && b.is_infinite()) || (b.v_ == 0.0 && a.is_infinite()))
            r.v_ = 0.0;  // 0 * inf = 0
        else
            r.v_ = a.v_ * b.v_;
        return r;
    }

    /// x / inf = 0 for finite x; x / 0 = inf for x > 0; 0 / 0 = 0.
    friend ExtReal operator/(ExtReal a, ExtReal b) {
        ExtReal r;
        if (b.is_infinite())
            r.v_ = a.is_infinite() ? std::numeric_limits<double>::quiet_NaN() : 0.0;
        else if (b.v_ == 0.0)
            r.v_ = (a.v_ == 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
        else
            r.v_ = a.v_ / b.v_;
        if (std::isnan(r.v_)) throw std::domain_error("ExtReal: inf / inf undefined");
        return r;
    }

    /// inf^e = inf (e > 0), 1 (e = 0), 0 (e < 0); finite base uses std::pow.
    ExtReal pow(double e) const {
        ExtReal r;
        if (is_infinite()) {
            if (e > 0.0)
                r.v_ = std::numeric_limits<double>::infinity();
            else if (e == 0.0)
                r.v_ = 1.0;
            else
                r.v_ = 0.0;
        } else if (v_ == 0.0 && e < 0.0) {
            r.v_ = std::numeric_limits<double>::infinity();
        } else {
            r.v_ = std::pow(v_, e);
        }
        return r;
    }

    friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
    friend bool operator!=(ExtReal a, ExtReal b) { return a.v_ != b.v_; }
    friend bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
    friend bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
    friend bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
    friend bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

  private:
    double v_;
};

}  // namespace glsnorm
