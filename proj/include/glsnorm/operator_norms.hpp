#pragma once

#include <optional>
#include <string>
#include <variant>

#include "glsnorm/minimize.hpp"
#include "glsnorm/pushforward.hpp"

namespace glsnorm {

struct CompositionOp {
    Transform xi;
};

struct MultiplicativeOp {
    FuncSpec g;
};

struct ProductOp {
    FuncSpec g;
    Transform xi;
    bool independent = false;
    std::optional<FuncSpec> factored_h;  // set when g(x) = h(xi(x))
};

struct LinearSubstitutionOp {
    int dim = 1;
    double abs_det = 1.0;
};

using OperatorSpec = std::variant<CompositionOp, MultiplicativeOp, ProductOp, LinearSubstitutionOp>;

struct SpacePair {
    MeasureSpace mu;  // X
    MeasureSpace nu;  // Y
};

/// Sharp norm of the composition operator from L_q(Y,nu) to L_p(X,mu):
///     ( integral z^(q/(q-p)) dnu )^(1/p - 1/q)      for p < q,
///     ess-sup(z)^(1/p)                              for p = q,
///     ( integral z dnu )^(1/p)                      for q = inf,
/// and +inf when the pushforward is not absolutely continuous or the
/// integral diverges. Throws on q < p.
ExtReal composition_norm(const Derivative& deriv, Exponent p, Exponent q, const MeasureSpace& nu,
                         double tol = 1e-10,
                         IntegrationMethod method = IntegrationMethod::automatic);

struct NormComputation {
    ExtReal value;
    double abs_error = 0.0;
    std::string method;
    std::optional<std::string> diagnostics;
};

/// composition_norm with the underlying integration report exposed.
NormComputation composition_norm_detailed(const Derivative& deriv, Exponent p, Exponent q,
                                          const MeasureSpace& nu, double tol = 1e-10,
                                          IntegrationMethod method = IntegrationMethod::automatic);

/// Closed form of composition_norm for x -> x^r on (0,1) with Lebesgue
/// measure on both sides:
///     r^(-1/q) * ((q-p)/(q-pr))^(1/p - 1/q),
/// finite exactly on q > pr when r > 1, everywhere on [p, inf] when r <= 1.
ExtReal composition_norm_power_map(double r, Exponent p, Exponent q);

/// Leading behavior of the power-map constant as q approaches pr from above
/// (r > 1): r^(-1/(pr)) * (p(r-1)/(q-pr))^((r-1)/(pr)).
ExtReal hard_case_asymptotic(double r, Exponent p, Exponent q);

/// Sharp norm of f -> g*f from L_q(nu) to L_p(nu): |g|_{pq/(q-p)} for q > p,
/// ess-sup |g| at q = p (limit exponent), +inf for q < p.
ExtReal multiplicative_norm(const FuncSpec& g, Exponent p, Exponent q, const MeasureSpace& nu,
                            double tol = 1e-10);

struct BoundResult {
    ExtReal value;
    double minimizer = 0.0;
    std::optional<std::string> diagnostic;
};

/// Upper bound for the product operator f -> g * (f o xi) from L_q to L_p:
/// inf over l in (p,q) of composition_norm(z,p,l) * multiplicative_norm(w,l,q)
/// where w is the factored weight h when declared (g = h o xi) and g itself
/// otherwise. 64-node logarithmic grid plus golden-section refinement.
BoundResult product_norm_bound(const ProductOp& op, Exponent p, Exponent q,
                               const SpacePair& spaces, double tol = 1e-10);

/// Upper bound for the factored product operator: inf over one-parameter
/// Hoelder splittings 1/theta + 1/tau = (q-p)/q of
/// |h|_{p*theta} * (|z|_tau)^(1/p). Exposed as a bound; sharpness is not
/// claimed.
BoundResult product_particular_bound(const FuncSpec& h, const Derivative& deriv, Exponent p,
                                     Exponent q, const MeasureSpace& nu, double tol = 1e-10);

/// Exact norm |g|_{p,mu} * composition_norm(z,p,q) under the declared
/// independence of g and f o xi. Refuses when the flag is absent.
ExtReal independent_product_norm(const ProductOp& op, Exponent p, Exponent q,
                                 const SpacePair& spaces, double tol = 1e-10);

struct MinIdentityResult {
    double x_star;
    double value;
};

/// min over x in (a,b) of (x-a)^(-gamma) (b-x)^(-beta):
///     ((beta+gamma)^(beta+gamma) / (beta^beta gamma^gamma)) * (b-a)^(-(beta+gamma)),
/// attained at x* = (gamma*b + beta*a)/(beta+gamma). Translation invariant,
/// so any a < b is accepted.
MinIdentityResult min_identity(double a, double b, double gamma, double beta);

/// Transfer function for the product of the power weight y^(-t) with the
/// power map x -> x^r: infimum over l in (max(p,pr), q/(tq+1)) of
/// composition_norm_power_map(r,p,l) * (1 - t l q/(q-l))^(1/q - 1/l).
/// The printed stationary-point candidate is used only as a seed and only
/// when it lies inside the feasible interval.
BoundResult transfer_function(double r, double t, Exponent p, Exponent q);

/// Exact L_p -> L_p norm factor of f -> f(Ax): |det A|^(-1/p).
double linear_substitution_norm(double abs_det, Exponent p);

}  // namespace glsnorm
