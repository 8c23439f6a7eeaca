#include "glsnorm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "glsnorm/parallel.hpp"

namespace glsnorm {

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

namespace trial {

FuncSpec density_power(const Derivative& deriv, double beta) {
    if (!deriv.absolutely_continuous())
        throw std::invalid_argument("trial::density_power: no density available");
    return deriv.density().abs_pow(beta);
}

FuncSpec density_power_truncated(const Derivative& deriv, double beta, double level) {
    if (!deriv.absolutely_continuous())
        throw std::invalid_argument("trial::density_power_truncated: no density available");
    if (!(beta > 0.0) || !(level > 0.0))
        throw std::invalid_argument("trial::density_power_truncated: beta, level > 0");
    // z^beta * [z <= n] == w * [w <= n^beta] with w = z^beta (beta > 0)
    return FuncSpec::truncated(deriv.density().abs_pow(beta), std::pow(level, beta));
}

FuncSpec weight_power(const FuncSpec& g, double beta) { return g.abs_pow(beta); }

FuncSpec random_piecewise(std::uint64_t seed, std::uint64_t index, double lo, double hi) {
    SplitMix64 rng = substream(seed, index);
    int pieces = static_cast<int>(rng.uniform_int(8, 64));
    std::vector<double> edges(static_cast<std::size_t>(pieces) + 1);
    edges.front() = lo;
    edges.back() = hi;
    for (int i = 1; i < pieces; ++i) edges[static_cast<std::size_t>(i)] = rng.uniform(lo, hi);
    std::sort(edges.begin(), edges.end());
    // collapse duplicate edges (measure-zero chance, but keep the invariant)
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] <= edges[i - 1]) edges[i] = std::nextafter(edges[i - 1], hi);
    std::vector<double> vals(static_cast<std::size_t>(pieces));
    const double lmin = std::log(1e-3), lmax = std::log(1e3);
    for (auto& v : vals) v = std::exp(rng.uniform(lmin, lmax));
    return FuncSpec::piecewise_constant(std::move(edges), std::move(vals));
}

}  // namespace trial

ExtReal rayleigh_quotient(const FuncSpec& f, const OperatorSpec& op, Exponent p, Exponent q,
                          const SpacePair& spaces, double tol) {
    ExtReal den = lp_norm_value(f, q, spaces.nu, tol);
    if (den.is_infinite())
        throw std::invalid_argument("rayleigh_quotient: |f|_q diverges; trial not in L_q");
    if (den.value() == 0.0)
        throw std::invalid_argument("rayleigh_quotient: |f|_q = 0");

    ExtReal num;
    if (const auto* comp = std::get_if<CompositionOp>(&op)) {
        Derivative deriv = radon_nikodym(comp->xi, spaces.mu, spaces.nu);
        if (!deriv.absolutely_continuous())
            throw std::invalid_argument("rayleigh_quotient: pushforward not absolutely continuous");
        if (p.is_inf()) {
            num = ess_sup(f, spaces.nu);  // z > 0 a.e. for the supported transforms
        } else {
            NormReport r = integrate(FuncSpec::multiply(f.abs_pow(p.value()), deriv.density()),
                                     spaces.nu, tol);
            num = r.value.pow(p.reciprocal());
        }
    } else if (const auto* mult = std::get_if<MultiplicativeOp>(&op)) {
        num = lp_norm_value(FuncSpec::multiply(mult->g, f), p, spaces.nu, tol);
    } else if (const auto* prod = std::get_if<ProductOp>(&op)) {
        FuncSpec composed = prod->xi.compose(f);
        if (p.is_inf()) {
            num = ess_sup(FuncSpec::multiply(prod->g, composed), spaces.mu);
        } else {
            NormReport r = integrate(
                FuncSpec::multiply(prod->g.abs_pow(p.value()), composed.abs_pow(p.value())),
                spaces.mu, tol);
            num = r.value.pow(p.reciprocal());
        }
    } else if (const auto* lin = std::get_if<LinearSubstitutionOp>(&op)) {
        num = ExtReal(linear_substitution_norm(lin->abs_det, p)) *
              lp_norm_value(f, p, spaces.nu, tol);
    } else {
        throw std::logic_error("rayleigh_quotient: unknown operator variant");
    }
    return num / den;
}

BetaSweepResult beta_sweep(const OperatorSpec& op, Exponent p, Exponent q, const SpacePair& spaces,
                           std::vector<double> beta_grid, double tol) {
    if (q.is_inf()) throw std::invalid_argument("beta_sweep: finite q required");
    if (!(p < q)) throw std::invalid_argument("beta_sweep: requires p < q");
    const double gap = q.value() - p.value();

    double optimum;
    std::function<FuncSpec(double)> make_trial;
    if (const auto* comp = std::get_if<CompositionOp>(&op)) {
        Derivative deriv = radon_nikodym(comp->xi, spaces.mu, spaces.nu);
        optimum = 1.0 / gap;
        make_trial = [deriv](double b) { return trial::density_power(deriv, b); };
    } else if (const auto* mult = std::get_if<MultiplicativeOp>(&op)) {
        FuncSpec g = mult->g;
        optimum = p.value() / gap;
        make_trial = [g](double b) { return trial::weight_power(g, b); };
    } else {
        throw std::invalid_argument("beta_sweep: composition or multiplicative operators only");
    }

    if (beta_grid.empty()) beta_grid = make_grid(optimum / 4.0, optimum * 4.0, 65, true);

    std::vector<double> vals(beta_grid.size(), -kInf);
    par::for_index(beta_grid.size(), [&](std::size_t i) {
        try {
            ExtReal v = rayleigh_quotient(make_trial(beta_grid[i]), op, p, q, spaces, tol);
            vals[i] = v.is_infinite() ? -kInf : v.value();  // divergent trials are out of family
        } catch (const std::invalid_argument&) {
            vals[i] = -kInf;  // trial escaped L_q
        }
    });

    std::size_t best = par::argmax(vals);
    if (std::isinf(vals[best]))
        throw std::runtime_error(
            "beta_sweep: every trial quotient degenerate; density outside the integrability "
            "class");
    return {beta_grid[best], ExtReal(vals[best])};
}

std::vector<ExtReal> truncation_sequence(const OperatorSpec& op, Exponent p, Exponent q,
                                         const SpacePair& spaces, const std::vector<double>& n_list,
                                         double tol) {
    if (!std::is_sorted(n_list.begin(), n_list.end()))
        throw std::invalid_argument("truncation_sequence: n_list must be increasing");
    if (q.is_inf() || !(p < q))
        throw std::invalid_argument("truncation_sequence: requires finite p < q");
    const auto* comp = std::get_if<CompositionOp>(&op);
    if (!comp) throw std::invalid_argument("truncation_sequence: composition operators only");

    Derivative deriv = radon_nikodym(comp->xi, spaces.mu, spaces.nu);
    const double beta = 1.0 / (q.value() - p.value());

    std::vector<ExtReal> out(n_list.size());
    par::for_index(n_list.size(), [&](std::size_t i) {
        FuncSpec fn = trial::density_power_truncated(deriv, beta, n_list[i]);
        out[i] = rayleigh_quotient(fn, op, p, q, spaces, tol);
    });
    return out;
}

ExtReal discrete_exact_norm(const OperatorSpec& op, Exponent p, Exponent q,
                            const MeasureSpace& atoms) {
    if (atoms.kind() != MeasureSpace::Kind::Atoms)
        throw std::invalid_argument("discrete_exact_norm: atom space required");
    if (q.is_inf() || !(p < q))
        throw std::invalid_argument("discrete_exact_norm: requires finite p < q");
    const double pe = p.value(), qe = q.value();

    // per-atom weight entering the closed form, and its exponent
    std::vector<double> a(atoms.atom_count());
    double closed_expo;
    if (const auto* mult = std::get_if<MultiplicativeOp>(&op)) {
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] = std::fabs(mult->g(atoms.positions()[i]));
        closed_expo = pe * qe / (qe - pe);  // |g|_{pq/(q-p)} structure
    } else if (const auto* comp = std::get_if<CompositionOp>(&op)) {
        Derivative deriv =
            radon_nikodym(comp->xi, MeasureSpace::lebesgue(0.0, 1.0), MeasureSpace::lebesgue(0.0, 1.0));
        if (!deriv.absolutely_continuous())
            throw std::invalid_argument("discrete_exact_norm: pushforward not absolutely continuous");
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] = deriv.density()(atoms.positions()[i]);
        closed_expo = qe / (qe - pe);
    } else {
        throw std::invalid_argument(
            "discrete_exact_norm: composition or multiplicative operators only");
    }

    const auto& w = atoms.weights();
    double s_closed = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s_closed += std::pow(a[i], closed_expo) * w[i];
    if (s_closed == 0.0) return ExtReal(0.0);
    double closed = std::pow(s_closed, 1.0 / pe - 1.0 / qe);

    // extremizer quotient, evaluated explicitly
    double num = 0.0, den = 0.0;
    const bool multiplicative = std::holds_alternative<MultiplicativeOp>(op);
    for (std::size_t i = 0; i < a.size(); ++i) {
        double fi = multiplicative ? std::pow(a[i], pe / (qe - pe))
                                   : std::pow(a[i], 1.0 / (qe - pe));
        if (multiplicative) {
            num += std::pow(a[i] * fi, pe) * w[i];
        } else {
            num += std::pow(fi, pe) * a[i] * w[i];
        }
        den += std::pow(fi, qe) * w[i];
    }
    double attained = std::pow(num, 1.0 / pe) / std::pow(den, 1.0 / qe);

    if (std::fabs(attained - closed) > 1e-9 * (1.0 + closed))
        throw std::runtime_error("discrete_exact_norm: extremizer and closed form disagree");
    return ExtReal(attained);
}

ExtReal random_probe(const OperatorSpec& op, Exponent p, Exponent q, const SpacePair& spaces,
                     std::uint64_t seed, int count, double tol) {
    if (count < 1) throw std::invalid_argument("random_probe: count >= 1");
    std::vector<double> quotients(static_cast<std::size_t>(count));
    par::for_index(static_cast<std::size_t>(count), [&](std::size_t i) {
        FuncSpec f = trial::random_piecewise(seed, i, spaces.nu.lo(), spaces.nu.hi());
        ExtReal v = rayleigh_quotient(f, op, p, q, spaces, tol);
        quotients[i] = v.value();
    });
    double best = quotients[par::argmax(quotients)];
    return std::isinf(best) ? ExtReal::infinity() : ExtReal(best);
}

ExtReal indicator_necessity_probe(const Transform& xi, const MeasureSpace& mu,
                                  const MeasureSpace& nu, double set_lo, double set_hi, Exponent p,
                                  Exponent q, int levels) {
    if (!(set_lo < set_hi)) throw std::invalid_argument("indicator_necessity_probe: empty set");
    const double mid = 0.5 * (set_lo + set_hi);
    const double width = set_hi - set_lo;
    double best = 0.0;
    for (int k = 0; k < levels; ++k) {
        double half = 0.5 * width * std::pow(2.0, -k);
        double lo = mid - half, hi = mid + half;
        ExtReal mass = distribution_mass(xi, mu, lo, hi);
        ExtReal nub = nu.mass_on(lo, hi);
        if (nub.value() == 0.0) {
            if (mass.value() > 0.0) return ExtReal::infinity();
            continue;
        }
        double quot = mass.pow(p.reciprocal()).value() / nub.pow(q.reciprocal()).value();
        best = std::max(best, quot);
        if (best > 1e12) return ExtReal::infinity();
    }
    return ExtReal(best);
}

}  // namespace glsnorm
