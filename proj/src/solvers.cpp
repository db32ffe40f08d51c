#include "vdc/solvers.hpp"

#include <algorithm>
#include <cmath>

namespace vdc {

namespace {

// W at a point endpoint, returned as a tight verified enclosure.
Ival lambert_w0_point(mpfr_srcptr x, mpfr_prec_t prec) {
    if (mpfr_sgn(x) < 0) throw DomainViolation("lambert_w0: negative input");
    if (mpfr_zero_p(x)) return Ival::from_long(0, prec);

    mpfr_prec_t wp = prec + 64;
    mpfr_t w, ew, f, df, step, lx;
    mpfr_inits2(wp, w, ew, f, df, step, lx, (mpfr_ptr)nullptr);

    // initial guess: log x - log log x for x > e, else x/(1+x)
    mpfr_log(lx, x, MPFR_RNDN);
    if (mpfr_cmp_d(lx, 1.25) > 0) {
        mpfr_log(w, lx, MPFR_RNDN);
        mpfr_sub(w, lx, w, MPFR_RNDN);
    } else {
        mpfr_add_ui(df, x, 1, MPFR_RNDN);
        mpfr_div(w, x, df, MPFR_RNDN);
    }

    // Newton: w <- w - (w e^w - x)/(e^w (1 + w))
    for (int it = 0; it < 300; ++it) {
        mpfr_exp(ew, w, MPFR_RNDN);
        mpfr_mul(f, ew, w, MPFR_RNDN);
        mpfr_sub(f, f, x, MPFR_RNDN);
        mpfr_add_ui(df, w, 1, MPFR_RNDN);
        mpfr_mul(df, df, ew, MPFR_RNDN);
        mpfr_div(step, f, df, MPFR_RNDN);
        mpfr_sub(w, w, step, MPFR_RNDN);
        if (mpfr_zero_p(step)) break;
        long e_step = mpfr_get_exp(step);
        long e_w = mpfr_zero_p(w) ? 0 : mpfr_get_exp(w);
        if (e_step < e_w - (long)wp + 8) break;
    }

    Ival xi = Ival::point_from(x, prec + 32);
    Ival wpt = Ival::point_from(w, prec);
    mpfr_clears(w, ew, f, df, step, lx, (mpfr_ptr)nullptr);

    // Verification: widen [w - eps, w + eps] until g(w-eps) < 0 < g(w+eps),
    // g(u) = u e^u - x; g is increasing for u >= 0.
    Ival eps = abs(wpt) * exp(Ival::from_long(-(long)prec + 3, prec) * Ival::log2(prec));
    for (int attempt = 0; attempt < 40; ++attempt) {
        Ival lo_cand = wpt - eps;
        Ival hi_cand = wpt + eps;
        if (mpfr_sgn(lo_cand.lo()) < 0) lo_cand = Ival::from_long(0, prec);
        Ival g_lo = lo_cand * exp(lo_cand) - xi;
        Ival g_hi = hi_cand * exp(hi_cand) - xi;
        if (mpfr_sgn(g_lo.hi()) < 0 && mpfr_sgn(g_hi.lo()) > 0) {
            return Ival::hull(lo_cand, hi_cand);
        }
        eps = mul_long(eps, 16);
    }
    throw DomainViolation("lambert_w0: verification step failed to bracket");
}

int certain_sign(const Ival& v) {
    if (mpfr_sgn(v.hi()) < 0) return -1;
    if (mpfr_sgn(v.lo()) > 0) return 1;
    return 0;
}

}  // namespace

Ival lambert_w0(const Ival& x) {
    if (mpfr_sgn(x.lo()) < 0) throw DomainViolation("lambert_w0: negative input");
    mpfr_prec_t prec = x.prec();
    Ival a = lambert_w0_point(x.lo(), prec);
    if (x.is_point()) return a;
    Ival b = lambert_w0_point(x.hi(), prec);
    return Ival::hull(a, b);  // W is increasing
}

Ival bisect_root(const std::function<Ival(const Ival&)>& f, const Ival& lo, const Ival& hi,
                 double tol_rel_log2) {
    mpfr_prec_t prec = std::max(lo.prec(), hi.prec());
    Ival a = lo, b = hi;
    int sa = certain_sign(f(a));
    int sb = certain_sign(f(b));
    if (sa == 0 || sb == 0 || sa == sb) {
        throw BracketError("bisect_root: no certified sign change on the bracket");
    }

    Ival tol = exp(Ival::from_double(tol_rel_log2, prec) * Ival::log2(prec));
    for (int it = 0; it < 4 * (int)prec; ++it) {
        Ival bracket = Ival::hull(a, b);
        Ival w = bracket.width();
        Ival scale = max(Ival::from_long(1, prec), abs(bracket));
        if ((w / scale).certainly_le(tol)) break;

        bool placed = false;
        for (int nudge = 0; nudge < 8 && !placed; ++nudge) {
            Ival m = bracket.midpoint();
            if (nudge > 0) {
                // offset off-center to escape a root sitting exactly on the midpoint
                m = m + mul_long(w, nudge) / Ival::from_long(17, prec);
                m = m.midpoint();
            }
            int sm = certain_sign(f(m));
            if (sm == 0) continue;
            if (sm == sa) {
                a = m;
            } else {
                b = m;
            }
            placed = true;
        }
        if (!placed) break;  // sign ambiguous at every probe; return the current bracket
    }
    return Ival::hull(a, b);
}

Ival RayMaxProblem::eval_logx(const Ival& logx) const {
    Ival acc = constant + Ival::from_long(0, logx.prec());
    for (const auto& t : terms) {
        acc = acc + t.coeff * pow_si(logx, t.log_pow) * exp(-(t.x_pow * logx));
    }
    return acc;
}

Ival RayMaxProblem::deriv_logx(const Ival& logx) const {
    // d/dL of c L^p e^{-qL} is c e^{-qL} (p L^{p-1} - q L^p)
    mpfr_prec_t prec = logx.prec();
    Ival acc = Ival::from_long(0, prec);
    for (const auto& t : terms) {
        Ival inner = -(t.x_pow * pow_si(logx, t.log_pow));
        if (t.log_pow != 0) {
            inner = inner + mul_long(pow_si(logx, t.log_pow - 1), t.log_pow);
        }
        acc = acc + t.coeff * exp(-(t.x_pow * logx)) * inner;
    }
    return acc;
}

Ival RayMaxProblem::eval_logx_sharp(const Ival& logx) const {
    Ival naive = eval_logx(logx);
    if (logx.is_point()) return naive;
    Ival m = logx.midpoint();
    Ival centered = eval_logx(m) + deriv_logx(logx) * (logx - m);
    // both enclose the true range; intersect
    mpfr_prec_t prec = logx.prec();
    Ival out(prec);
    if (mpfr_cmp(naive.lo(), centered.lo()) >= 0 && mpfr_cmp(naive.hi(), centered.hi()) <= 0) {
        return naive;
    }
    if (mpfr_cmp(centered.lo(), naive.lo()) >= 0 && mpfr_cmp(centered.hi(), naive.hi()) <= 0) {
        return centered;
    }
    mpfr_t lo, hi;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_max(lo, naive.lo(), centered.lo(), MPFR_RNDD);
    mpfr_min(hi, naive.hi(), centered.hi(), MPFR_RNDU);
    if (mpfr_cmp(lo, hi) > 0) {
        mpfr_clears(lo, hi, (mpfr_ptr)nullptr);
        return naive;  // rounding produced a hairline inversion; fall back
    }
    out = Ival::from_endpoints(lo, hi, prec);
    mpfr_clears(lo, hi, (mpfr_ptr)nullptr);
    return out;
}

RayMaxResult max_on_ray(const RayMaxProblem& p, long grid_points, int refine_rounds,
                        mpfr_prec_t prec) {
    if (!p.x_lo.is_pos()) throw DomainViolation("max_on_ray: x_lo must be positive");
    if (p.tail_threshold.certainly_lt(p.x_lo)) {
        throw DomainViolation("max_on_ray: tail_threshold below x_lo");
    }

    Ival L0 = log(p.x_lo + Ival::from_long(0, prec));
    Ival L1 = log(p.tail_threshold + Ival::from_long(0, prec));

    // Tail certificate, term by term. log^p(x) x^{-q} is decreasing once
    // q log x >= p; a positive-coefficient term then contributes its value at
    // the threshold and a negative one contributes 0 (it decays to zero from
    // below). A growing term is only admissible with a negative coefficient.
    Ival tail = p.constant + Ival::from_long(0, prec);
    for (const auto& t : p.terms) {
        bool cpos = t.coeff.is_pos();
        bool cneg = mpfr_sgn(t.coeff.hi()) < 0;
        if (!cpos && !cneg) {
            if (t.coeff.is_point()) continue;  // exact zero
            throw TailError("max_on_ray: term coefficient sign ambiguous");
        }
        Ival g_at = pow_si(L1, t.log_pow) * exp(-(t.x_pow * L1));
        bool decreasing =
            t.x_pow.is_pos() && (t.x_pow * L1).certainly_ge(Ival::from_long(t.log_pow, prec));
        if (decreasing) {
            if (cpos) tail = tail + t.coeff * g_at;
        } else if (cneg) {
            tail = tail + t.coeff * g_at;
        } else {
            throw TailError("max_on_ray: growing term with positive coefficient; "
                            "raise tail_threshold");
        }
    }

    struct Cell {
        Ival seg;
        Ival val;
    };

    mpfr_t lbv;  // certified lower bound on the supremum (best point value)
    mpfr_init2(lbv, prec);
    mpfr_set(lbv, p.eval_logx(L0.midpoint()).lo(), MPFR_RNDD);
    Ival argmax = Ival::hull(L0, L1);

    Ival span = L1 - L0;
    std::vector<Cell> live;
    for (long i = 0; i < grid_points; ++i) {
        Ival l = L0 + mul_long(span, i) / Ival::from_long(grid_points, prec);
        Ival r = L0 + mul_long(span, i + 1) / Ival::from_long(grid_points, prec);
        Ival seg = Ival::hull(l, r);
        Ival v = p.eval_logx_sharp(seg);
        Ival pv = p.eval_logx(seg.midpoint());
        if (mpfr_cmp(pv.lo(), lbv) > 0) {
            mpfr_set(lbv, pv.lo(), MPFR_RNDD);
            argmax = seg;
        }
        if (mpfr_cmp(v.hi(), lbv) > 0) live.push_back({seg, v});
    }

    for (int round = 0; round < refine_rounds && !live.empty(); ++round) {
        std::vector<Cell> next;
        next.reserve(live.size() * 2);
        for (const auto& c : live) {
            if (mpfr_cmp(c.val.hi(), lbv) <= 0) continue;
            auto [left, right] = c.seg.split();
            for (const Ival& seg : {left, right}) {
                Ival v = p.eval_logx_sharp(seg);
                if (mpfr_cmp(v.hi(), lbv) <= 0) continue;
                Ival pv = p.eval_logx(seg.midpoint());
                if (mpfr_cmp(pv.lo(), lbv) > 0) {
                    mpfr_set(lbv, pv.lo(), MPFR_RNDD);
                    argmax = seg;
                }
                next.push_back({seg, v});
            }
        }
        live = std::move(next);
        if (live.size() > 8192) break;
    }

    Ival ub = Ival::point_from(lbv, prec);
    for (const auto& c : live) {
        if (mpfr_cmp(c.val.hi(), ub.hi()) > 0) {
            ub = Ival::from_endpoints(ub.lo(), c.val.hi(), prec);
        }
    }
    if (mpfr_cmp(tail.hi(), ub.hi()) > 0) {
        ub = Ival::from_endpoints(ub.lo(), tail.hi(), prec);
    }
    mpfr_clear(lbv);

    return RayMaxResult{ub, argmax};
}

Ival max_on_segment(const std::function<Ival(const Ival&)>& f, const Ival& lo, const Ival& hi,
                    long grid_points, int refine_rounds) {
    mpfr_prec_t prec = std::max(lo.prec(), hi.prec());

    struct Cell {
        Ival seg;
        Ival val;
    };
    mpfr_t lbv;
    mpfr_init2(lbv, prec);
    mpfr_set(lbv, f(lo).lo(), MPFR_RNDD);

    Ival span = hi - lo;
    std::vector<Cell> live;
    for (long i = 0; i < grid_points; ++i) {
        Ival l = lo + mul_long(span, i) / Ival::from_long(grid_points, prec);
        Ival r = lo + mul_long(span, i + 1) / Ival::from_long(grid_points, prec);
        Ival seg = Ival::hull(l, r);
        Ival v = f(seg);
        Ival pv = f(seg.midpoint());
        if (mpfr_cmp(pv.lo(), lbv) > 0) mpfr_set(lbv, pv.lo(), MPFR_RNDD);
        if (mpfr_cmp(v.hi(), lbv) > 0) live.push_back({seg, v});
    }
    for (int round = 0; round < refine_rounds && !live.empty(); ++round) {
        std::vector<Cell> next;
        for (const auto& c : live) {
            if (mpfr_cmp(c.val.hi(), lbv) <= 0) continue;
            auto [left, right] = c.seg.split();
            for (const Ival& seg : {left, right}) {
                Ival v = f(seg);
                if (mpfr_cmp(v.hi(), lbv) <= 0) continue;
                Ival pv = f(seg.midpoint());
                if (mpfr_cmp(pv.lo(), lbv) > 0) mpfr_set(lbv, pv.lo(), MPFR_RNDD);
                next.push_back({seg, v});
            }
        }
        live = std::move(next);
        if (live.size() > 8192) break;
    }
    Ival ub = Ival::point_from(lbv, prec);
    for (const auto& c : live) {
        if (mpfr_cmp(c.val.hi(), ub.hi()) > 0) {
            ub = Ival::from_endpoints(ub.lo(), c.val.hi(), prec);
        }
    }
    mpfr_clear(lbv);
    return ub;
}

}  // namespace vdc
