#pragma once

#include <functional>
#include <string>
#include <vector>

#include "glsnorm/exponent.hpp"
#include "glsnorm/lp_norm.hpp"

namespace glsnorm {

/// Measurable transformation xi: X -> Y.
///
/// power_map(r) is the bijection x -> x^r of (0,1); monotone transforms are
/// declared branch lists with explicit inverses; constant branches are what
/// makes failure of absolute continuity detectable.
class Transform {
  public:
    struct Branch {
        double x_lo, x_hi;  // domain of the branch in X
        std::function<double(double)> forward;
        std::function<double(double)> inverse;             // empty for constant branches
        std::function<double(double)> inverse_derivative;  // |d inverse / dy|
        double y_lo, y_hi;                                 // range of the branch
        bool constant = false;
        double constant_value = 0.0;
    };

    enum class Kind { PowerMap, MeasurePreserving, Monotone, ConstantMap };

    static Transform power_map(double r);
    static Transform identity() { return power_map(1.0); }

    /// Declared measure preserving: the pushforward density is 1 by fiat.
    /// Accepted on trust; preimages are not computable without branches.
    static Transform measure_preserving(std::function<double(double)> map);

    static Transform constant_map(double value, double x_lo = 0.0, double x_hi = 1.0);
    static Transform monotone(std::vector<Branch> branches);

    Kind kind() const { return kind_; }
    double power_r() const;
    const std::vector<Branch>& branches() const { return branches_; }

    double operator()(double x) const;

    /// x -> f(xi(x)); analytic for power maps over power-law trees.
    FuncSpec compose(const FuncSpec& f) const;

  private:
    Transform() = default;
    Kind kind_ = Kind::PowerMap;
    double r_ = 1.0;
    double const_value_ = 0.0, const_lo_ = 0.0, const_hi_ = 1.0;
    std::function<double(double)> map_;
    std::vector<Branch> branches_;
};

/// Radon-Nikodym derivative of the pushforward measure, or the flag that the
/// pushforward is not absolutely continuous w.r.t. the target measure.
class Derivative {
  public:
    static Derivative density(FuncSpec z) {
        Derivative d;
        d.ac_ = true;
        d.z_ = std::move(z);
        return d;
    }
    static Derivative not_absolutely_continuous(std::string reason) {
        Derivative d;
        d.ac_ = false;
        d.reason_ = std::move(reason);
        return d;
    }

    bool absolutely_continuous() const { return ac_; }
    const FuncSpec& density() const;
    const std::string& reason() const { return reason_; }

  private:
    Derivative() = default;
    bool ac_ = false;
    FuncSpec z_;
    std::string reason_;
};

/// mu(xi^{-1}((b_lo, b_hi))), computed through branch inverses.
ExtReal distribution_mass(const Transform& xi, const MeasureSpace& mu, double b_lo, double b_hi,
                          double tol = 1e-10);

/// dF_xi/dnu. Analytic for power maps between power-density intervals; branch
/// lists use mu-density(inv(y)) * |inv'(y)| / nu-density(y) summed over
/// branches. Returns the NotAbsolutelyContinuous flag when a constant branch
/// carries positive mass or the nu-density vanishes where the numerator does
/// not.
Derivative radon_nikodym(const Transform& xi, const MeasureSpace& mu, const MeasureSpace& nu);

struct ChangeOfVariablesCheck {
    bool ok = false;
    bool vacuous_both_divergent = false;  // warning: both sides diverged
    double lhs = 0.0, rhs = 0.0;
};

/// Checks integral h(xi(x)) dmu == integral h z dnu within
/// tol * (1 + |rhs|). Both sides divergent passes vacuously with the warning
/// flag set; one-sided divergence fails.
ChangeOfVariablesCheck verify_change_of_variables(const Transform& xi, const Derivative& z,
                                                  const FuncSpec& h, const MeasureSpace& mu,
                                                  const MeasureSpace& nu, double tol = 1e-8);

}  // namespace glsnorm
