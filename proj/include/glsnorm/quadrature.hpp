#pragma once

#include <optional>
#include <string>

#include "glsnorm/ext_real.hpp"
#include "glsnorm/func_spec.hpp"
#include "glsnorm/measure_space.hpp"

namespace glsnorm {

/// Outcome of an integral or norm computation.
///
/// converged == false means either value == +inf (with divergence_reason set)
/// or the error estimate did not reach the tolerance.
struct NormReport {
    ExtReal value;
    bool converged = true;
    double abs_error_estimate = 0.0;
    std::optional<std::string> divergence_reason;
};

/// automatic: exact closed forms whenever the integrand and density reduce to
///            power-law segments, adaptive quadrature otherwise.
/// numeric:   always run the adaptive engine. Keeps the quadrature route
///            independent from the closed forms it is checked against.
enum class IntegrationMethod { automatic, numeric };

/// Signed integral for internal use (change-of-variables checks need signs).
struct SignedIntegral {
    double value = 0.0;  // +-inf when divergent
    bool converged = true;
    double abs_error_estimate = 0.0;
    std::optional<std::string> divergence_reason;
};

SignedIntegral integrate_signed(const FuncSpec& f, const MeasureSpace& space, double tol,
                                IntegrationMethod method = IntegrationMethod::automatic);

/// integral of f against the measure, with endpoint-singularity handling.
///
/// Integrable endpoint singularities are regularized by the substitution
/// x = a + u^k before adaptive subdivision; k comes from the power-law
/// exponent when the structure is known, else k = 4. A local exponent <= -1
/// at an endpoint is classified as divergence (value = +inf), as is growth by
/// a factor > 10 across four refinement generations.
NormReport integrate(const FuncSpec& f, const MeasureSpace& space, double tol = 1e-10,
                     IntegrationMethod method = IntegrationMethod::automatic);

}  // namespace glsnorm
