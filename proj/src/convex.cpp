#include "glsnorm/convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "glsnorm/minimize.hpp"

namespace glsnorm {

namespace {
const double kInf = std::numeric_limits<double>::infinity();

void check_table(const ConvexFunctionTable& t) {
    if (t.grid.size() != t.values.size() || t.grid.size() < 2)
        throw std::invalid_argument("ConvexFunctionTable: need matching grid/values, size >= 2");
    if (!std::is_sorted(t.grid.begin(), t.grid.end()))
        throw std::invalid_argument("ConvexFunctionTable: grid must be increasing");
}
}  // namespace

bool is_convex_table(const ConvexFunctionTable& t, double tol) {
    check_table(t);
    double prev = -kInf;
    for (std::size_t i = 0; i + 1 < t.grid.size(); ++i) {
        double slope = (t.values[i + 1] - t.values[i]) / (t.grid[i + 1] - t.grid[i]);
        if (slope < prev - tol) return false;
        prev = slope;
    }
    return true;
}

ConjugateTable young_fenchel_on(const ConvexFunctionTable& nu, const std::vector<double>& v_grid) {
    check_table(nu);
    ConjugateTable out;
    out.table.grid = v_grid;
    out.table.values.resize(v_grid.size());
    out.at_boundary.resize(v_grid.size());
    const std::size_t n = nu.grid.size();
    for (std::size_t k = 0; k < v_grid.size(); ++k) {
        double v = v_grid[k];
        double best = -kInf;
        std::size_t arg = 0;
        for (std::size_t j = 0; j < n; ++j) {
            double cand = nu.grid[j] * v - nu.values[j];
            if (cand > best) {
                best = cand;
                arg = j;
            }
        }
        out.table.values[k] = best;
        out.at_boundary[k] = (arg == 0 || arg + 1 == n);
    }
    return out;
}

ConjugateTable young_fenchel(const ConvexFunctionTable& nu) {
    check_table(nu);
    std::vector<double> slopes;
    slopes.reserve(nu.grid.size() - 1);
    for (std::size_t i = 0; i + 1 < nu.grid.size(); ++i)
        slopes.push_back((nu.values[i + 1] - nu.values[i]) / (nu.grid[i + 1] - nu.grid[i]));
    std::sort(slopes.begin(), slopes.end());
    slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());

    std::vector<double> v_grid;
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        v_grid.push_back(slopes[i]);
        if (i + 1 < slopes.size()) v_grid.push_back(0.5 * (slopes[i] + slopes[i + 1]));
    }
    return young_fenchel_on(nu, v_grid);
}

ConvexFunctionTable biconjugate(const ConvexFunctionTable& nu) {
    ConjugateTable conj = young_fenchel(nu);
    ConjugateTable back = young_fenchel_on(conj.table, nu.grid);
    return back.table;
}

OrliczFunction::OrliczFunction(const PsiFunction& psi) : psi_(psi), quad_coeff_(0.0) {
    if (psi.is_empty() || psi.is_degenerate())
        throw std::invalid_argument("OrliczFunction: need a nondegenerate generating function");
    u_lo_ = std::max(1.0, psi.support_lo());
    u_hi_ = std::min(psi.support_hi(), 1e8);
    if (!(u_lo_ < u_hi_))
        throw std::invalid_argument("OrliczFunction: support does not reach above p = 1");

    // convexity of nu(p) = p ln psi(p), probed on a log grid
    std::vector<double> ps = make_grid(u_lo_ * (1.0 + 1e-9), std::min(u_hi_, 1e6), 256, true);
    double prev_slope = -kInf;
    double scale = 1.0;
    std::vector<double> vals(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        double pv = psi_(ps[i]);
        if (std::isinf(pv)) throw std::domain_error("OrliczFunction: psi infinite inside support");
        vals[i] = ps[i] * std::log(pv);
        scale = std::max(scale, std::fabs(vals[i]));
    }
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
        double slope = (vals[i + 1] - vals[i]) / (ps[i + 1] - ps[i]);
        if (slope < prev_slope - 1e-8 * scale)
            throw std::domain_error(
                "OrliczFunction: p ln psi(p) is not convex on the support; the exponential "
                "Orlicz bridge does not apply");
        prev_slope = slope;
    }

    quad_coeff_ = std::exp(conjugate_rate(1.0)) / (M_E * M_E);
}

double OrliczFunction::conjugate_rate(double v) const {
    auto objective = [&](double u) {
        double pv = psi_(u);
        if (std::isinf(pv)) return kInf;
        return -(u * v - u * std::log(pv));
    };
    SearchOptions opts;
    opts.grid_nodes = 256;
    ExtremumResult res = minimize_on_interval(objective, u_lo_, u_hi_, opts);
    double best = -res.value;
    // support boundary at p = u_lo_ may carry the supremum (e.g. small v)
    double edge = u_lo_ * v - u_lo_ * std::log(psi_(u_lo_ * (1.0 + 1e-12)));
    return std::max(best, edge);
}

double OrliczFunction::operator()(double u) const {
    double au = std::fabs(u);
    if (au < M_E) return quad_coeff_ * u * u;
    return std::exp(conjugate_rate(std::log(au)));
}

double orlicz_function(const PsiFunction& psi, double u) { return OrliczFunction(psi)(u); }

}  // namespace glsnorm
