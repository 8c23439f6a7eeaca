#pragma once

#include <functional>
#include <vector>

namespace glsnorm {

/// Result of a 1-D extremum search. all_infinite is set when no grid node
/// produced a finite objective value.
struct ExtremumResult {
    double x = 0.0;
    double value = 0.0;
    bool all_infinite = false;
};

struct SearchOptions {
    int grid_nodes = 64;
    bool log_spaced = true;
    double open_shrink = 1e-9;    // fraction of the width kept away from open endpoints
    double refine_rel = 1e-10;    // golden-section target relative bracket width
    std::vector<double> extra_candidates;  // seeded initial guesses (used only if inside)
};

/// Minimize fn over the open interval (lo, hi): logarithmic grid scan
/// followed by golden-section refinement around the best node. fn may return
/// +inf on infeasible points. Grid evaluation runs through the parallel
/// kernels; the scan and refinement are serial, so results are
/// schedule-independent.
ExtremumResult minimize_on_interval(const std::function<double(double)>& fn, double lo, double hi,
                                    const SearchOptions& opts = {});

/// Minimize fn over the open ray (lo, inf) via the substitution
/// x = lo + v/(1-v), v in (0,1). Detects infima attained in the limit.
ExtremumResult minimize_on_ray(const std::function<double(double)>& fn, double lo,
                               const SearchOptions& opts = {});

ExtremumResult maximize_on_interval(const std::function<double(double)>& fn, double lo, double hi,
                                    const SearchOptions& opts = {});

/// Log-spaced grid of n nodes on [lo, hi] (falls back to linear when lo <= 0).
std::vector<double> make_grid(double lo, double hi, int n, bool log_spaced);

}  // namespace glsnorm
