#pragma once

#include <cstdint>
#include <vector>

#include "glsnorm/operator_norms.hpp"
#include "glsnorm/rng.hpp"

namespace glsnorm {

/// Trial-function families whose Rayleigh quotients attain or approach the
/// sharp operator constants.
namespace trial {

/// z^beta — the extremal family for composition operators.
FuncSpec density_power(const Derivative& deriv, double beta);

/// z^beta restricted to {z <= level} — the truncation family that certifies
/// divergent constants.
FuncSpec density_power_truncated(const Derivative& deriv, double beta, double level);

/// g^beta — the extremal family for multiplicative operators.
FuncSpec weight_power(const FuncSpec& g, double beta);

/// Seeded random step function on (lo, hi): 8..64 pieces, breakpoints
/// uniform, values log-uniform in [1e-3, 1e3]. Probe `index` of a batch uses
/// an independent splitmix64 substream, so batch results are
/// schedule-independent.
FuncSpec random_piecewise(std::uint64_t seed, std::uint64_t index, double lo, double hi);

}  // namespace trial

/// |op[f]|_{p,X} / |f|_{q,Y}. Composition numerators are evaluated on the Y
/// side through the pushforward density (never by sampling the transform);
/// product numerators are evaluated on the X side directly.
/// Throws when |f|_q is zero or divergent.
ExtReal rayleigh_quotient(const FuncSpec& f, const OperatorSpec& op, Exponent p, Exponent q,
                          const SpacePair& spaces, double tol = 1e-10);

struct BetaSweepResult {
    double beta_star = 0.0;
    ExtReal value;
};

/// Sweeps the trial family's exponent over a grid (default: 65 log-spaced
/// nodes spanning [opt/4, 4*opt] around the analytic optimum 1/(q-p) for
/// composition, p/(q-p) for multiplicative) and returns the best quotient.
BetaSweepResult beta_sweep(const OperatorSpec& op, Exponent p, Exponent q, const SpacePair& spaces,
                           std::vector<double> beta_grid = {}, double tol = 1e-10);

/// Quotients of the truncated trial family along n_list (increasing).
/// Nondecreasing; converges to the constant when finite and grows without
/// bound when it is not.
std::vector<ExtReal> truncation_sequence(const OperatorSpec& op, Exponent p, Exponent q,
                                         const SpacePair& spaces, const std::vector<double>& n_list,
                                         double tol = 1e-10);

/// Exact finite-dimensional norm on an atom space, attained by the
/// Hoelder-equality extremizer. The closed form and the extremizer quotient
/// are both computed and compared internally.
ExtReal discrete_exact_norm(const OperatorSpec& op, Exponent p, Exponent q,
                            const MeasureSpace& atoms);

/// Max Rayleigh quotient over `count` seeded random step functions.
/// Falsification probe for the upper-bound direction of the sharp constants.
ExtReal random_probe(const OperatorSpec& op, Exponent p, Exponent q, const SpacePair& spaces,
                     std::uint64_t seed, int count, double tol = 1e-10);

/// Indicator quotients F_xi(B)^(1/p) / nu(B)^(1/q) along a family of
/// intervals shrinking onto the target set. Unbounded growth certifies that
/// the pushforward is not absolutely continuous.
ExtReal indicator_necessity_probe(const Transform& xi, const MeasureSpace& mu,
                                  const MeasureSpace& nu, double set_lo, double set_hi, Exponent p,
                                  Exponent q, int levels = 40);

}  // namespace glsnorm
