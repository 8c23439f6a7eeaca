#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace glsnorm {

/// A Lebesgue exponent p in [1, inf], with inf representable.
class Exponent {
  public:
    Exponent(double p) : p_(p) {
        if (std::isnan(p) || p < 1.0)
            throw std::invalid_argument("Exponent: p must satisfy p >= 1");
    }

    static Exponent inf() { return Exponent(std::numeric_limits<double>::infinity()); }

    double value() const { return p_; }
    bool is_inf() const { return std::isinf(p_); }

    /// Conjugate exponent: 1/p + 1/p' = 1, with conjugate(1) = inf.
    Exponent conjugate() const {
        if (p_ == 1.0) return inf();
        if (is_inf()) return Exponent(1.0);
        return Exponent(p_ / (p_ - 1.0));
    }

    /// 1/p, with 1/inf = 0.
    double reciprocal() const { return is_inf() ? 0.0 : 1.0 / p_; }

    friend bool operator==(Exponent a, Exponent b) { return a.p_ == b.p_; }
    friend bool operator<(Exponent a, Exponent b) { return a.p_ < b.p_; }
    friend bool operator<=(Exponent a, Exponent b) { return a.p_ <= b.p_; }
    friend bool operator>(Exponent a, Exponent b) { return a.p_ > b.p_; }
    friend bool operator>=(Exponent a, Exponent b) { return a.p_ >= b.p_; }

  private:
    double p_;
};

}  // namespace glsnorm
