#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vdc/interval.hpp"

namespace vdc {

// Principal branch of the Lambert W function, W(x) e^{W(x)} = x, for x >= 0.
// Newton iteration at extended precision followed by an interval verification
// step; the result encloses W over the whole input enclosure.
Ival lambert_w0(const Ival& x);

// Certified root bracketing: f must have a rigorous sign change on [lo, hi]
// (f(lo).hi < 0 < f(hi).lo or reversed), else BracketError. Returns an
// enclosure of width <= tol_rel * max(1, |root|) containing a root.
Ival bisect_root(const std::function<Ival(const Ival&)>& f, const Ival& lo, const Ival& hi,
                 double tol_rel_log2 = -100);

// One term c * log(x)^p / x^q of a ray function. q may be any real; p >= 0.
struct RayTerm {
    Ival coeff;
    long log_pow;
    Ival x_pow;
};

// A function on [x_lo, inf) given as a sum of log-power terms plus a
// constant. Beyond tail_threshold every term must be certifiably dominated
// (decreasing with positive coefficient, or negative); the scan handles
// [x_lo, tail_threshold].
struct RayMaxProblem {
    std::vector<RayTerm> terms;
    Ival constant;
    Ival x_lo;
    Ival tail_threshold;

    Ival eval_logx(const Ival& logx) const;  // evaluate at x = e^{logx}
    Ival deriv_logx(const Ival& logx) const;  // d/dL of the same, L = log x
    // naive evaluation intersected with the mean-value form; tight near
    // critical points where the naive form cannot prune
    Ival eval_logx_sharp(const Ival& logx) const;
};

struct RayMaxResult {
    Ival bound;        // [best point value found, certified sup upper bound]
    Ival argmax_logx;  // cell (in log x) holding the best value
};

// Certified upper bound of sup f over [x_lo, inf): uniform subdivision in
// log x with interval evaluation per cell, adaptive refinement of the
// argmax cells, plus the term-dominance tail certificate.
RayMaxResult max_on_ray(const RayMaxProblem& p, long grid_points = 1 << 14,
                        int refine_rounds = 60, mpfr_prec_t prec = 256);

// Same machinery for an arbitrary interval-evaluable function on a finite
// segment [lo, hi] of the variable (no tail). Used for suprema that are not
// of log-power form.
Ival max_on_segment(const std::function<Ival(const Ival&)>& f, const Ival& lo, const Ival& hi,
                    long grid_points = 512, int refine_rounds = 60);

}  // namespace vdc
