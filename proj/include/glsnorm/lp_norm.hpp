#pragma once

#include "glsnorm/exponent.hpp"
#include "glsnorm/quadrature.hpp"

namespace glsnorm {

/// Essential supremum of |f| on the space.
///
/// Exact for power-law structure (monotone on each segment, so endpoint
/// limits suffice) and for tables; opaque evaluators use a 4096-point sample
/// with golden-section refinement around the maximum, which is a lower-bound
/// heuristic.
ExtReal ess_sup(const FuncSpec& f, const MeasureSpace& space);

/// ( integral |f|^p dmu )^(1/p), or ess_sup for p = inf.
NormReport lp_norm(const FuncSpec& f, Exponent p, const MeasureSpace& space, double tol = 1e-10,
                   IntegrationMethod method = IntegrationMethod::automatic);

/// Convenience accessor: the norm value with divergence mapped to +inf.
ExtReal lp_norm_value(const FuncSpec& f, Exponent p, const MeasureSpace& space,
                      double tol = 1e-10,
                      IntegrationMethod method = IntegrationMethod::automatic);

}  // namespace glsnorm
