#include "glsnorm/measure_space.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "glsnorm/quadrature.hpp"

namespace glsnorm {

MeasureSpace MeasureSpace::lebesgue(double a, double b) {
    return interval(a, b, FuncSpec::constant(1.0));
}

MeasureSpace MeasureSpace::interval(double a, double b, FuncSpec density) {
    if (!(a < b)) throw std::invalid_argument("MeasureSpace: need a < b");
    if (std::isnan(a) || std::isnan(b)) throw std::invalid_argument("MeasureSpace: NaN endpoint");
    MeasureSpace m;
    m.kind_ = Kind::Interval;
    m.a_ = a;
    m.b_ = b;
    m.density_ = std::move(density);
    return m;
}

MeasureSpace MeasureSpace::atoms(std::vector<double> weights) {
    std::vector<double> pos(weights.size());
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = static_cast<double>(i);
    return atoms_at(std::move(pos), std::move(weights));
}

MeasureSpace MeasureSpace::atoms_at(std::vector<double> positions, std::vector<double> weights) {
    if (positions.size() != weights.size() || weights.empty())
        throw std::invalid_argument("MeasureSpace: positions/weights size mismatch");
    for (double w : weights)
        if (!(w > 0.0)) throw std::invalid_argument("MeasureSpace: atom weights must be positive");
    MeasureSpace m;
    m.kind_ = Kind::Atoms;
    m.positions_ = std::move(positions);
    m.weights_ = std::move(weights);
    return m;
}

ExtReal MeasureSpace::mass_on(double u, double v, double tol) const {
    if (v <= u) return ExtReal(0.0);
    if (kind_ == Kind::Atoms) {
        double s = 0.0;
        for (std::size_t i = 0; i < weights_.size(); ++i)
            if (positions_[i] > u && positions_[i] < v) s += weights_[i];
        return ExtReal(s);
    }
    double lo = std::max(u, a_), hi = std::min(v, b_);
    if (hi <= lo) return ExtReal(0.0);
    auto sub = MeasureSpace::interval(lo, hi, density_);
    return integrate(FuncSpec::constant(1.0), sub, tol).value;
}

ExtReal MeasureSpace::total_mass(double tol) const {
    if (kind_ == Kind::Atoms)
        return ExtReal(std::accumulate(weights_.begin(), weights_.end(), 0.0));
    return integrate(FuncSpec::constant(1.0), *this, tol).value;
}

}  // namespace glsnorm
