#include "glsnorm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace glsnorm {

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// 7-point Gauss / 15-point Kronrod pair on [-1, 1].
const double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                        0.741531185599394, 0.586087235467691, 0.405845151377397,
                        0.207784955007898, 0.0};
const double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                        0.140653259715525, 0.169004726639267, 0.190350578064785,
                        0.204432940075298, 0.209482141084728};
const double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                       0.417959183673469};

struct Panel {
    double a, b, val, err;
};

template <class G>
Panel gk15(const G& g, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = g(c);
    if (!std::isfinite(fc)) throw std::runtime_error("quadrature: non-finite integrand value");
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double f1 = g(c - h * kXgk[j]);
        double f2 = g(c + h * kXgk[j]);
        if (!std::isfinite(f1) || !std::isfinite(f2))
            throw std::runtime_error("quadrature: non-finite integrand value");
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    double val = resk * h;
    double err = std::fabs((resk - resg) * h);
    return {a, b, val, err};
}

// Exact integral of c * x^e over (lo, hi), 0 <= lo < hi <= inf.
// Sets *divergent when the integral is infinite.
double power_integral(double lo, double hi, double c, double e, bool* divergent) {
    *divergent = false;
    if (c == 0.0 || hi <= lo) return 0.0;
    if (lo <= 0.0 && e <= -1.0) {
        *divergent = true;
        return c > 0.0 ? kInf : -kInf;
    }
    if (std::isinf(hi) && e >= -1.0) {
        *divergent = true;
        return c > 0.0 ? kInf : -kInf;
    }
    if (e == -1.0) return c * (std::log(hi) - std::log(lo));
    double hp = std::isinf(hi) ? 0.0 : std::pow(hi, e + 1.0);  // inf with e < -1 only
    double lp = lo <= 0.0 ? 0.0 : std::pow(lo, e + 1.0);
    return c * (hp - lp) / (e + 1.0);
}

struct EndpointHint {
    double expo = 0.0;   // local exponent s: integrand ~ x^s near the endpoint
    bool known = false;  // analytic structure available
    bool zero = false;   // integrand vanishes near the endpoint
};

EndpointHint analytic_hint(const std::vector<PowerSeg>& segs, double end, bool left) {
    EndpointHint h;
    for (const auto& s : segs) {
        bool touches = left ? (s.lo <= end && s.hi > end) : (s.hi >= end && s.lo < end);
        if (touches) {
            h.expo = s.expo;
            h.known = true;
            return h;
        }
    }
    h.known = true;
    h.zero = true;
    return h;
}

// Numeric local-exponent probe on |g| approaching `end` from inside.
EndpointHint numeric_hint(const std::function<double(double)>& g, double end, double width,
                          bool left) {
    EndpointHint h;
    double sgn = left ? 1.0 : -1.0;
    double h1 = width * 1e-3, h2 = width * 1e-5, h3 = width * 1e-7;
    double v1 = std::fabs(g(end + sgn * h1));
    double v2 = std::fabs(g(end + sgn * h2));
    double v3 = std::fabs(g(end + sgn * h3));
    if (v2 <= 1e-300 || v3 <= 1e-300) {
        h.zero = (v1 <= 1e-300);
        h.expo = 0.0;
        return h;
    }
    double s12 = std::log(v1 / v2) / std::log(h1 / h2);
    double s23 = std::log(v2 / v3) / std::log(h2 / h3);
    if (std::isfinite(s12) && std::isfinite(s23) && std::fabs(s12 - s23) < 0.2) {
        h.expo = s23;
        h.known = true;
    } else {
        h.expo = std::min({0.0, s12, s23});
    }
    return h;
}

int substitution_order(double s) {
    if (s >= -1e-9) return 1;
    int k = static_cast<int>(std::ceil(3.0 / (1.0 + s)));
    return std::clamp(k, 2, 12);
}

std::string format_endpoint_reason(double s, double x, const char* side) {
    std::ostringstream os;
    os << "integrand ~ x^(" << s << ") at the " << side << " endpoint " << x
       << " (local exponent <= -1)";
    return os.str();
}

}  // namespace

SignedIntegral integrate_signed(const FuncSpec& f, const MeasureSpace& space, double tol,
                                IntegrationMethod method) {
    if (!(tol > 0.0)) throw std::invalid_argument("integrate: tol must be positive");

    SignedIntegral out;

    if (space.kind() == MeasureSpace::Kind::Atoms) {
        double s = 0.0;
        for (std::size_t i = 0; i < space.atom_count(); ++i) {
            double v = f(space.positions()[i]);
            if (std::isnan(v)) throw std::runtime_error("integrate: NaN at atom");
            if (std::isinf(v)) {
                out.value = v > 0 ? kInf : -kInf;
                out.converged = false;
                out.divergence_reason = "infinite value at an atom";
                return out;
            }
            s += v * space.weights()[i];
        }
        out.value = s;
        out.abs_error_estimate = std::fabs(s) * 1e-15;
        return out;
    }

    const double a = space.lo(), b = space.hi();
    auto segs_f = as_power_segments(f, a, b);
    auto segs_w = as_power_segments(space.density(), a, b);

    if (method == IntegrationMethod::automatic && segs_f && segs_w) {
        auto combined = intersect_segments(*segs_f, *segs_w);
        double total = 0.0;
        bool pos_div = false, neg_div = false;
        std::string reason;
        for (const auto& seg : combined) {
            bool div = false;
            double v = power_integral(seg.lo, seg.hi, seg.coeff, seg.expo, &div);
            if (div) {
                (v > 0 ? pos_div : neg_div) = true;
                if (reason.empty())
                    reason = format_endpoint_reason(
                        seg.expo, seg.lo <= 0.0 ? seg.lo : seg.hi,
                        seg.lo <= 0.0 && seg.expo <= -1.0 ? "left" : "right");
            } else {
                total += v;
            }
        }
        if (pos_div && neg_div)
            throw std::runtime_error("integrate: opposite-sign divergences cancel formally");
        if (pos_div || neg_div) {
            out.value = pos_div ? kInf : -kInf;
            out.converged = false;
            out.divergence_reason = reason;
            return out;
        }
        out.value = total;
        out.abs_error_estimate = std::fabs(total) * 5e-16;
        return out;
    }

    if (std::isinf(a) || std::isinf(b))
        throw std::runtime_error("integrate: numeric quadrature needs a bounded interval");

    // ---- numeric path ----
    const FuncSpec fw = FuncSpec::multiply(f, space.density());
    auto g = [&fw](double x) { return fw(x); };

    std::set<double> cuts{a, b};
    for (double c : f.breakpoints())
        if (c > a && c < b) cuts.insert(c);
    for (double c : space.density().breakpoints())
        if (c > a && c < b) cuts.insert(c);

    struct Job {
        std::function<double(double)> integrand;
        double u_lo, u_hi;
    };
    std::vector<Job> jobs;

    std::vector<double> pts(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double alpha = pts[i], beta = pts[i + 1];
        double width = beta - alpha;

        EndpointHint hl, hr;
        if (segs_f && segs_w) {
            auto combined = intersect_segments(*segs_f, *segs_w);
            hl = analytic_hint(combined, alpha, true);
            hr = analytic_hint(combined, beta, false);
        } else {
            hl = numeric_hint(g, alpha, width, true);
            hr = numeric_hint(g, beta, width, false);
        }

        if (!hl.zero && hl.expo <= -1.0 + 1e-12) {
            out.value = g(alpha + width * 1e-6) > 0 ? kInf : -kInf;
            out.converged = false;
            out.divergence_reason = format_endpoint_reason(hl.expo, alpha, "left");
            return out;
        }
        if (!hr.zero && hr.expo <= -1.0 + 1e-12) {
            out.value = g(beta - width * 1e-6) > 0 ? kInf : -kInf;
            out.converged = false;
            out.divergence_reason = format_endpoint_reason(hr.expo, beta, "right");
            return out;
        }

        int kl = hl.zero ? 1 : (hl.known ? substitution_order(hl.expo) : 4);
        int kr = hr.zero ? 1 : (hr.known ? substitution_order(hr.expo) : 4);
        if (!hl.known && !hl.zero && hl.expo < -1e-3) kl = 4;
        if (!hr.known && !hr.zero && hr.expo < -1e-3) kr = 4;

        if (kl == 1 && kr == 1) {
            jobs.push_back({[g, alpha](double x) { return g(x); }, alpha, beta});
        } else {
            double mid = 0.5 * (alpha + beta);
            double dkl = static_cast<double>(kl), dkr = static_cast<double>(kr);
            // x = alpha + u^k on the left half, x = beta - u^k on the right
            jobs.push_back({[g, alpha, dkl](double u) {
                                return dkl * std::pow(u, dkl - 1.0) * g(alpha + std::pow(u, dkl));
                            },
                            0.0, std::pow(mid - alpha, 1.0 / dkl)});
            jobs.push_back({[g, beta, dkr](double u) {
                                return dkr * std::pow(u, dkr - 1.0) * g(beta - std::pow(u, dkr));
                            },
                            0.0, std::pow(beta - mid, 1.0 / dkr)});
        }
    }

    struct HeapItem {
        double err;
        std::size_t job;
        double a, b, val;
        bool operator<(const HeapItem& o) const { return err < o.err; }
    };
    std::priority_queue<HeapItem> heap;
    double total = 0.0, total_err = 0.0;

    for (std::size_t j = 0; j < jobs.size(); ++j) {
        Panel p = gk15(jobs[j].integrand, jobs[j].u_lo, jobs[j].u_hi);
        heap.push({p.err, j, p.a, p.b, p.val});
        total += p.val;
        total_err += p.err;
    }

    const int max_panels = 2000;
    int panels = static_cast<int>(jobs.size());
    std::vector<double> snapshots;
    int next_snapshot = 250;

    while (total_err > std::max(tol * std::fabs(total), 1e-12) && panels < max_panels) {
        HeapItem worst = heap.top();
        heap.pop();
        total -= worst.val;
        total_err -= worst.err;
        double mid = 0.5 * (worst.a + worst.b);
        for (auto [lo2, hi2] : {std::pair{worst.a, mid}, std::pair{mid, worst.b}}) {
            Panel p = gk15(jobs[worst.job].integrand, lo2, hi2);
            heap.push({p.err, worst.job, p.a, p.b, p.val});
            total += p.val;
            total_err += p.err;
        }
        ++panels;
        if (panels >= next_snapshot) {
            snapshots.push_back(std::fabs(total));
            next_snapshot *= 2;
        }
    }

    out.value = total;
    out.abs_error_estimate = total_err;
    out.converged = total_err <= std::max(tol * std::fabs(total), 1e-12);
    if (!out.converged && snapshots.size() >= 4 &&
        snapshots.back() > 10.0 * snapshots[snapshots.size() - 4]) {
        out.value = total > 0 ? kInf : -kInf;
        out.divergence_reason = "refinements grew by more than 10x across four generations";
    }
    return out;
}

NormReport integrate(const FuncSpec& f, const MeasureSpace& space, double tol,
                     IntegrationMethod method) {
    SignedIntegral s = integrate_signed(f, space, tol, method);
    NormReport r;
    if (s.value < 0.0)
        throw std::domain_error("integrate: negative integral; use integrate_signed");
    r.value = std::isinf(s.value) ? ExtReal::infinity() : ExtReal(s.value);
    r.converged = s.converged;
    r.abs_error_estimate = s.abs_error_estimate;
    r.divergence_reason = s.divergence_reason;
    return r;
}

}  // namespace glsnorm
