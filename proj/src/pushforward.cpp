#include "glsnorm/pushforward.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace glsnorm {

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

Transform Transform::power_map(double r) {
    if (!(r > 0.0)) throw std::invalid_argument("Transform::power_map: r must be positive");
    Transform t;
    t.kind_ = Kind::PowerMap;
    t.r_ = r;
    return t;
}

Transform Transform::measure_preserving(std::function<double(double)> map) {
    Transform t;
    t.kind_ = Kind::MeasurePreserving;
    t.map_ = std::move(map);
    return t;
}

Transform Transform::constant_map(double value, double x_lo, double x_hi) {
    if (!(x_lo < x_hi)) throw std::invalid_argument("Transform::constant_map: empty domain");
    Transform t;
    t.kind_ = Kind::ConstantMap;
    t.const_value_ = value;
    t.const_lo_ = x_lo;
    t.const_hi_ = x_hi;
    return t;
}

Transform Transform::monotone(std::vector<Branch> branches) {
    if (branches.empty()) throw std::invalid_argument("Transform::monotone: no branches");
    for (const auto& b : branches) {
        if (!(b.x_lo < b.x_hi)) throw std::invalid_argument("Transform: branch domain empty");
        if (!b.constant && (!b.inverse || !b.inverse_derivative))
            throw std::invalid_argument("Transform: non-constant branch needs inverse data");
    }
    Transform t;
    t.kind_ = Kind::Monotone;
    t.branches_ = std::move(branches);
    return t;
}

double Transform::power_r() const {
    if (kind_ != Kind::PowerMap) throw std::logic_error("Transform: not a power map");
    return r_;
}

double Transform::operator()(double x) const {
    switch (kind_) {
        case Kind::PowerMap:
            return x > 0.0 ? std::pow(x, r_) : 0.0;
        case Kind::MeasurePreserving:
            return map_(x);
        case Kind::ConstantMap:
            return const_value_;
        case Kind::Monotone:
            for (const auto& b : branches_)
                if (x >= b.x_lo && x <= b.x_hi)
                    return b.constant ? b.constant_value : b.forward(x);
            throw std::domain_error("Transform: x outside every branch domain");
    }
    return 0.0;
}

FuncSpec Transform::compose(const FuncSpec& f) const {
    switch (kind_) {
        case Kind::PowerMap:
            return f.compose_power_arg(r_);
        case Kind::ConstantMap:
            return FuncSpec::constant(f(const_value_));
        default: {
            Transform self = *this;
            return FuncSpec::opaque([self, f](double x) { return f(self(x)); });
        }
    }
}

const FuncSpec& Derivative::density() const {
    if (!ac_)
        throw std::logic_error("Derivative: pushforward is not absolutely continuous (" + reason_ +
                               ")");
    return z_;
}

ExtReal distribution_mass(const Transform& xi, const MeasureSpace& mu, double b_lo, double b_hi,
                          double tol) {
    if (!(b_lo < b_hi)) return ExtReal(0.0);
    switch (xi.kind()) {
        case Transform::Kind::PowerMap: {
            double r = xi.power_r();
            double lo = b_lo <= 0.0 ? 0.0 : std::pow(b_lo, 1.0 / r);
            double hi = b_hi <= 0.0 ? 0.0 : std::pow(b_hi, 1.0 / r);
            return mu.mass_on(lo, hi, tol);
        }
        case Transform::Kind::ConstantMap: {
            // whole domain maps to a single point
            Transform::Branch b;
            (void)b;
            double c = xi(0.0);
            if (c > b_lo && c < b_hi) return mu.total_mass(tol);
            return ExtReal(0.0);
        }
        case Transform::Kind::Monotone: {
            ExtReal total(0.0);
            for (const auto& br : xi.branches()) {
                if (br.constant) {
                    if (br.constant_value > b_lo && br.constant_value < b_hi)
                        total = total + mu.mass_on(br.x_lo, br.x_hi, tol);
                    continue;
                }
                double lo = std::max(b_lo, br.y_lo), hi = std::min(b_hi, br.y_hi);
                if (hi <= lo) continue;
                double xa = br.inverse(lo), xb = br.inverse(hi);
                if (xa > xb) std::swap(xa, xb);
                total = total + mu.mass_on(xa, xb, tol);
            }
            return total;
        }
        case Transform::Kind::MeasurePreserving:
            throw std::runtime_error(
                "distribution_mass: branch inverses missing for an opaque transform");
    }
    return ExtReal(0.0);
}

Derivative radon_nikodym(const Transform& xi, const MeasureSpace& mu, const MeasureSpace& nu) {
    if (!mu.is_interval() || !nu.is_interval())
        throw std::invalid_argument("radon_nikodym: interval measures required");

    switch (xi.kind()) {
        case Transform::Kind::MeasurePreserving:
            return Derivative::density(FuncSpec::constant(1.0));

        case Transform::Kind::ConstantMap:
            return Derivative::not_absolutely_continuous(
                "constant transform maps a positive-mass set onto a single point");

        case Transform::Kind::PowerMap: {
            double r = xi.power_r();
            // analytic when both densities are power laws
            if (mu.density().is_power() && nu.density().is_power()) {
                double cm = mu.density().power_coeff(), sm = mu.density().power_expo();
                double cn = nu.density().power_coeff(), sn = nu.density().power_expo();
                if (cn == 0.0)
                    return Derivative::not_absolutely_continuous("target density vanishes");
                // mu-density(y^(1/r)) * (1/r) y^(1/r - 1) / nu-density(y)
                double coeff = cm / (r * cn);
                double expo = (sm + 1.0) / r - 1.0 - sn;
                return Derivative::density(FuncSpec::power(coeff, expo));
            }
            const FuncSpec md = mu.density(), nd = nu.density();
            auto eval = [md, nd, r](double y) {
                double x = y > 0.0 ? std::pow(y, 1.0 / r) : 0.0;
                double num = md(x) * (1.0 / r) * (y > 0.0 ? std::pow(y, 1.0 / r - 1.0) : kInf);
                double den = nd(y);
                if (den == 0.0) return num == 0.0 ? 0.0 : kInf;
                return num / den;
            };
            return Derivative::density(FuncSpec::opaque(eval));
        }

        case Transform::Kind::Monotone: {
            for (const auto& br : xi.branches())
                if (br.constant) {
                    std::ostringstream os;
                    os << "constant branch on (" << br.x_lo << ", " << br.x_hi
                       << ") maps positive mass onto the point " << br.constant_value;
                    return Derivative::not_absolutely_continuous(os.str());
                }
            auto branches = xi.branches();
            const FuncSpec md = mu.density(), nd = nu.density();
            auto eval = [branches, md, nd](double y) {
                double num = 0.0;
                for (const auto& br : branches) {
                    if (y <= br.y_lo || y >= br.y_hi) continue;
                    double x = br.inverse(y);
                    num += md(x) * std::fabs(br.inverse_derivative(y));
                }
                double den = nd(y);
                if (den == 0.0) return num == 0.0 ? 0.0 : kInf;
                return num / den;
            };
            // nu-density vanishing where the numerator is positive -> not AC
            const int probes = 512;
            for (int i = 1; i < probes; ++i) {
                double y = nu.lo() + (nu.hi() - nu.lo()) * i / probes;
                if (nd(y) == 0.0) {
                    double num = 0.0;
                    for (const auto& br : branches)
                        if (y > br.y_lo && y < br.y_hi)
                            num += md(br.inverse(y)) * std::fabs(br.inverse_derivative(y));
                    if (num > 0.0) {
                        std::ostringstream os;
                        os << "target density vanishes at y = " << y
                           << " where the pushforward has mass";
                        return Derivative::not_absolutely_continuous(os.str());
                    }
                }
            }
            return Derivative::density(FuncSpec::opaque(eval));
        }
    }
    throw std::logic_error("radon_nikodym: unreachable");
}

ChangeOfVariablesCheck verify_change_of_variables(const Transform& xi, const Derivative& z,
                                                  const FuncSpec& h, const MeasureSpace& mu,
                                                  const MeasureSpace& nu, double tol) {
    if (!z.absolutely_continuous())
        throw std::invalid_argument("verify_change_of_variables: derivative flag present");
    SignedIntegral lhs = integrate_signed(xi.compose(h), mu, std::min(tol, 1e-10));
    SignedIntegral rhs =
        integrate_signed(FuncSpec::multiply(h, z.density()), nu, std::min(tol, 1e-10));

    ChangeOfVariablesCheck out;
    out.lhs = lhs.value;
    out.rhs = rhs.value;
    bool lhs_div = std::isinf(lhs.value), rhs_div = std::isinf(rhs.value);
    if (lhs_div && rhs_div) {
        out.ok = true;
        out.vacuous_both_divergent = true;
        return out;
    }
    if (lhs_div != rhs_div) {
        out.ok = false;
        return out;
    }
    out.ok = std::fabs(lhs.value - rhs.value) <= tol * (1.0 + std::fabs(rhs.value));
    return out;
}

}  // namespace glsnorm
