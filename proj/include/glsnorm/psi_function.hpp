#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace glsnorm {

/// Generating function of a grand Lebesgue space: positive and continuous on
/// an open exponent interval (A,B) with 1 <= A < B <= inf, bounded away from
/// zero, formally +inf outside. The degenerate variant equals 1 at a single
/// exponent r and +inf elsewhere, which recovers the plain L_r norm.
///
/// Transforms that turn out to be infinite everywhere produce the empty
/// variant (evaluates to +inf for every p).
class PsiFunction {
  public:
    enum class Kind { Analytic, Tabulated, Degenerate, Empty };

    static PsiFunction analytic(double a, double b, std::function<double(double)> eval);
    static PsiFunction degenerate(double r);

    /// Monotone-safe piecewise-cubic interpolant of (grid, values); support is
    /// (support_lo, support_hi) when given, else the grid span.
    static PsiFunction tabulated(std::vector<double> grid, std::vector<double> values,
                                 double support_lo = std::numeric_limits<double>::quiet_NaN(),
                                 double support_hi = std::numeric_limits<double>::quiet_NaN());

    /// coeff * p^expo on (a, b).
    static PsiFunction power_growth(double coeff, double expo, double a = 1.0,
                                    double b = std::numeric_limits<double>::infinity());

    static PsiFunction constant_one(double a = 1.0,
                                    double b = std::numeric_limits<double>::infinity());

    static PsiFunction empty();

    /// +inf outside the open support; the degenerate variant returns 1 at r.
    double operator()(double p) const;

    Kind kind() const { return kind_; }
    double support_lo() const { return a_; }
    double support_hi() const { return b_; }
    bool is_degenerate() const { return kind_ == Kind::Degenerate; }
    bool is_empty() const { return kind_ == Kind::Empty; }
    double degenerate_r() const;

    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

  private:
    PsiFunction() = default;
    void validate_positive() const;

    Kind kind_ = Kind::Empty;
    double a_ = 0.0, b_ = 0.0;
    double r_ = 0.0;  // degenerate point
    std::function<double(double)> eval_;
    std::vector<double> grid_, values_, slopes_;  // pchip data
};

}  // namespace glsnorm
