#pragma once

#include <vector>

#include "glsnorm/psi_function.hpp"

namespace glsnorm {

/// Tabulated convex function on an increasing grid. The function between
/// nodes is read as the piecewise-linear interpolant, which makes vertex
/// maxima exact for conjugation.
struct ConvexFunctionTable {
    std::vector<double> grid;
    std::vector<double> values;
};

/// Discrete convexity: second differences >= -tol.
bool is_convex_table(const ConvexFunctionTable& t, double tol = 1e-12);

struct ConjugateTable {
    ConvexFunctionTable table;
    /// Set where the defining supremum was attained at a grid boundary; the
    /// tabulated value is then only a lower bound for the true conjugate.
    std::vector<bool> at_boundary;
};

/// Legendre transform nu*(v) = sup_u (u v - nu(u)) over the table's grid.
/// The default v-grid consists of the secant slopes plus their midpoints,
/// on which the piecewise-linear conjugate is exact.
ConjugateTable young_fenchel(const ConvexFunctionTable& nu);
ConjugateTable young_fenchel_on(const ConvexFunctionTable& nu, const std::vector<double>& v_grid);

/// Conjugate twice and evaluate back on the original grid; equals the input
/// for convex tables.
ConvexFunctionTable biconjugate(const ConvexFunctionTable& nu);

/// Young function of the exponential Orlicz space matching G-psi:
///     N(u) = exp( nu*(ln|u|) )   for |u| >= e,
///     N(u) = C u^2               for |u| < e,   C e^2 = exp( nu*(1) ),
/// where nu(p) = p ln psi(p). Construction checks convexity of nu on the
/// support and refuses otherwise.
class OrliczFunction {
  public:
    explicit OrliczFunction(const PsiFunction& psi);

    double operator()(double u) const;

    /// nu*(v) by grid + golden-section maximization over the support.
    double conjugate_rate(double v) const;

  private:
    PsiFunction psi_;
    double quad_coeff_;  // C in the |u| < e branch
    double u_lo_, u_hi_;
};

double orlicz_function(const PsiFunction& psi, double u);

}  // namespace glsnorm
