#pragma once

#include <functional>

#include "glsnorm/lp_norm.hpp"
#include "glsnorm/psi_function.hpp"

namespace glsnorm {

struct TransformOptions {
    int tab_nodes = 512;       // tabulation grid for transformed functions
    int inner_nodes = 64;      // grid for the pointwise infima
    double finite_threshold = 1e12;
    double support_bisect_tol = 1e-6;
    double p_cap = 1e4;        // tabulation cap when the candidate support is unbounded
    std::vector<double> extra_q_candidates;  // additional inner-minimization seeds
};

/// Grand Lebesgue norm: sup over p in the support of |f|_p / psi(p),
/// computed on a refined exponent grid with golden-section polish around the
/// argmax. The degenerate psi short-circuits to the plain |f|_r.
/// Returns +inf as soon as |f|_p diverges at an exponent where psi is finite.
ExtReal gls_norm(const FuncSpec& f, const PsiFunction& psi, const MeasureSpace& space,
                 int p_grid_size = 64, double tol = 1e-10);

/// The generating function p -> |f|_p on (A,B), under which f has unit norm.
/// Analytic function descriptors keep an exact evaluator; others are
/// tabulated. Throws (naming the exponent) when |f|_p diverges inside (A,B).
PsiFunction natural_psi(const FuncSpec& f, const MeasureSpace& space, Exponent a_end,
                        Exponent b_end);

/// Pointwise transform values. `bound(p, q)` is any operator-norm upper bound
/// for the L_q -> L_p step; infinite values mark infeasible pairs.
double theta_transform_at(const PsiFunction& psi, const std::function<double(double, double)>& bound,
                          double p, const TransformOptions& opts = {});
double tau_transform_at(const PsiFunction& psi, double t, double p,
                        const TransformOptions& opts = {});
double sigma_transform_at(const PsiFunction& psi, double r, double p,
                          const TransformOptions& opts = {});

/// Tabulated transforms with numerically detected finiteness support.
/// theta_transform throws std::runtime_error when the support is empty;
/// sigma/tau return the empty PsiFunction instead (their callers test for
/// emptiness as a legitimate outcome).
PsiFunction theta_transform(const PsiFunction& psi,
                            const std::function<double(double, double)>& bound,
                            const TransformOptions& opts = {});
PsiFunction tau_transform(const PsiFunction& psi, double t, const TransformOptions& opts = {});
PsiFunction sigma_transform(const PsiFunction& psi, double r, const TransformOptions& opts = {});

struct Delta2Result {
    bool holds = false;
    double constant = 0.0;     // fitted bound for sigma_r[psi]/psi over the grid
    double trend_slope = 0.0;  // log-log slope over the last decade of p
};

/// Numeric surrogate for the weak Delta_2 condition at infinity: the ratio
/// sigma_r[psi](p)/psi(p) must stay finite over p_grid with no growth trend
/// (last-decade log-log slope <= 0.05). lambda_grid supplies extra inner
/// candidates q = lambda*p.
Delta2Result weak_delta2_check(const PsiFunction& psi, double r,
                               const std::vector<double>& lambda_grid,
                               const std::vector<double>& p_grid);

/// sup over p in the support of delta^(1/p) / tau(p); the norm of an
/// indicator of mass delta. Empty support gives 0 by convention.
ExtReal fundamental_function(const PsiFunction& tau, double delta);

/// Norm bound for f -> f(Ax) between grand Lebesgue spaces with factored
/// generating function psi = zeta/tau:
///     f_norm * fundamental_function(tau, 1/abs_det).
double linear_substitution_gls_bound(double f_norm, double abs_det, const PsiFunction& zeta,
                                     const PsiFunction& tau);

}  // namespace glsnorm
