#pragma once

#include <vector>

#include "glsnorm/ext_real.hpp"
#include "glsnorm/func_spec.hpp"

namespace glsnorm {

/// Sigma-finite measure: a weighted interval (density against Lebesgue) or a
/// finite list of atoms. Atom i sits at positions()[i] with mass weights()[i];
/// functions on an atom space are evaluated at the positions.
class MeasureSpace {
  public:
    enum class Kind { Interval, Atoms };

    static MeasureSpace lebesgue(double a, double b);
    static MeasureSpace interval(double a, double b, FuncSpec density);
    static MeasureSpace atoms(std::vector<double> weights);
    static MeasureSpace atoms_at(std::vector<double> positions, std::vector<double> weights);

    Kind kind() const { return kind_; }
    bool is_interval() const { return kind_ == Kind::Interval; }

    double lo() const { return a_; }
    double hi() const { return b_; }
    const FuncSpec& density() const { return density_; }

    const std::vector<double>& weights() const { return weights_; }
    const std::vector<double>& positions() const { return positions_; }
    std::size_t atom_count() const { return weights_.size(); }

    /// mu(restriction of the space to (u, v)).
    ExtReal mass_on(double u, double v, double tol = 1e-10) const;

    ExtReal total_mass(double tol = 1e-10) const;

  private:
    MeasureSpace() : density_(FuncSpec::constant(1.0)) {}

    Kind kind_ = Kind::Interval;
    double a_ = 0.0, b_ = 1.0;
    FuncSpec density_;
    std::vector<double> positions_, weights_;
};

}  // namespace glsnorm
