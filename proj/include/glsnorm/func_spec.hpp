#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace glsnorm {

/// Descriptor of a measurable function on an interval domain.
///
/// Analytic variants (power laws, piecewise combinations, truncations of
/// power laws, indicators) expose their structure through
/// as_power_segments(), which the integration and norm machinery uses for
/// exact closed forms. Table and opaque variants fall back to numerics.
///
/// Power laws c*x^s are defined for x > 0; at x <= 0 the value is taken as
/// the one-sided limit (+inf is allowed as a value flag for s < 0).
class FuncSpec {
  public:
    enum class Kind { Power, Piecewise, Truncated, Table, Opaque };

    FuncSpec() : FuncSpec(power(0.0, 0.0)) {}

    static FuncSpec power(double coeff, double expo);
    static FuncSpec constant(double c) { return power(c, 0.0); }
    static FuncSpec zero() { return power(0.0, 0.0); }

    /// Pieces live on (breaks[i], breaks[i+1]); zero outside [front, back].
    /// breaks.front() may be 0 and breaks.back() may be +inf.
    static FuncSpec piecewise(std::vector<double> breaks, std::vector<FuncSpec> pieces);

    /// Step function: values[i] on (edges[i], edges[i+1]).
    static FuncSpec piecewise_constant(std::vector<double> edges, std::vector<double> values);

    /// 1 on (lo, hi), 0 elsewhere.
    static FuncSpec indicator(double lo, double hi);

    /// base(x) * [base(x) <= level].
    static FuncSpec truncated(FuncSpec base, double level);

    /// Piecewise-linear interpolant of (grid, values); zero outside the grid.
    static FuncSpec table(std::vector<double> grid, std::vector<double> values);

    static FuncSpec opaque(std::function<double(double)> eval);

    double operator()(double x) const;

    Kind kind() const { return kind_; }
    bool is_power() const { return kind_ == Kind::Power; }
    double power_coeff() const;
    double power_expo() const;

    /// c * f
    FuncSpec scaled(double c) const;

    /// |f|^e, analytic when the structure allows.
    FuncSpec abs_pow(double e) const;

    /// x -> f(x^r), r > 0. Analytic for power-law trees.
    FuncSpec compose_power_arg(double r) const;

    /// Pointwise product, analytic when both factors reduce to power segments.
    static FuncSpec multiply(const FuncSpec& a, const FuncSpec& b);

    /// Interior knots where the function may be non-smooth. Quadrature seeds
    /// its initial segmentation with these.
    std::vector<double> breakpoints() const;

  private:
    bool collect_segments(double lo, double hi, std::vector<struct PowerSeg>& out) const;
    friend std::optional<std::vector<struct PowerSeg>> as_power_segments(const FuncSpec&, double,
                                                                         double);

    Kind kind_;
    double coeff_ = 0.0, expo_ = 0.0;              // Power
    double level_ = 0.0;                           // Truncated
    std::shared_ptr<const FuncSpec> base_;         // Truncated
    std::vector<double> knots_;                    // Piecewise breaks / Table grid
    std::vector<FuncSpec> pieces_;                 // Piecewise
    std::vector<double> values_;                   // Table
    std::function<double(double)> eval_;           // Opaque
};

/// f restricted to (lo, hi) equals coeff * x^expo. Segments are disjoint,
/// ordered, and cover only where f is nonzero; gaps mean f == 0 there.
struct PowerSeg {
    double lo, hi;
    double coeff, expo;
};

/// Exact power-law decomposition of f over (lo, hi), or nullopt when the
/// variant carries no analytic structure (table, opaque).
std::optional<std::vector<PowerSeg>> as_power_segments(const FuncSpec& f, double lo, double hi);

/// Pairwise products of overlapping segments.
std::vector<PowerSeg> intersect_segments(const std::vector<PowerSeg>& a,
                                         const std::vector<PowerSeg>& b);

}  // namespace glsnorm
