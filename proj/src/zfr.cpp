#include "vdc/zfr.hpp"

#include <fstream>
#include <sstream>

#include "vdc/solvers.hpp"

namespace vdc::zfr {

namespace {

Ival I(const std::string& s, mpfr_prec_t p) { return Ival::from_str(s, p); }

// L1(t) = log(D t + 1) expressed through x = log t
Ival L1_of(const Ival& log_t, long D, mpfr_prec_t prec) {
    return log_t + log(Ival::from_long(D, prec) + exp(-log_t));
}

const char* kAlpha = "0.13913";
const char* kM1 = "0.0470978";
const char* kE = "30.95461";
const char* kLogT0 = "170.2";
const char* kLogT1 = "967.6";

}  // namespace

TrigPolyData default_trig_poly(mpfr_prec_t prec) {
    TrigPolyData d;
    d.D = 46;
    d.b0 = Ival::from_long(1, prec);
    d.b1 = I("1.74708744081848", prec);
    d.b = I("3.57440943022073", prec);
    d.log_weight_constant = I("3.377", prec);
    return d;
}

SmoothingConstants smoothing_constants(const TrigPolyData& poly, mpfr_prec_t prec) {
    if (!poly.b1.is_pos() || !poly.b0.is_pos()) {
        throw DomainViolation("smoothing_constants: b0, b1 must be positive");
    }
    Ival one = Ival::from_long(1, prec);
    Ival ratio = poly.b1 / poly.b0;
    auto f = [&](const Ival& x) { return pow_si(sin(x), 2) - ratio * (one - x * cot(x)); };
    Ival theta = bisect_root(f, I("0.5", prec), I("1.5", prec));

    SmoothingConstants s;
    s.theta = theta;
    Ival sn = sin(theta), cs = cos(theta);
    Ival tn = sn / cs, ct = cs / sn;
    s.cos2theta = pow_si(cs, 2);
    Ival sec2 = one / s.cos2theta;
    s.g0 = sec2 * (theta * tn + mul_long(theta * ct, 3) - Ival::from_long(3, prec));
    Ival th2 = pow_si(theta, 2);
    Ival csc2 = one / pow_si(sn, 2);
    s.gprime0 = csc2 *
                    (mul_long(mul_long(th2, 4) - Ival::from_long(5, prec), 3) +
                     theta * (Ival::from_long(15, prec) - mul_long(th2, 4)) * ct) /
                    Ival::from_long(3, prec) -
                theta / (sn * cs);
    s.c0 = one / (sn * pow_si(cs, 3));
    s.c1 = (theta - sn * cs) * pow_si(tn, 4);
    s.c2 = pow_si(tn, 3) * pow_si(sn, 2);
    s.c3 = (theta - sn * cs) * pow_si(tn, 2);
    s.neg_gp_over_g0 = -(s.gprime0) / s.g0;
    return s;
}

Ival H_of_R(const Ival& R, const SmoothingConstants& s, mpfr_prec_t prec) {
    Ival one = Ival::from_long(1, prec);
    Ival tn = sqrt(one / s.cos2theta - one);  // tan(theta), theta in (0, pi/2)
    if (!R.certainly_gt(tn)) throw DomainViolation("H_of_R: R must exceed tan(theta)");
    Ival denom = pow_si(one - pow_si(tn / R, 2), 2);
    Ival egrow = exp(mul_long(s.theta / tn, 2)) + one;
    Ival inner = s.c2 * (R + one) / pow_si(R, 3) * egrow + s.c1 / pow_si(R, 2) + s.c3;
    return s.c0 / denom * inner;
}

Ival c_of_R(const Ival& R, const SmoothingConstants& s, mpfr_prec_t prec) {
    Ival one = Ival::from_long(1, prec);
    if (!R.certainly_ge(Ival::from_long(3, prec))) {
        throw DomainViolation("c_of_R: R must be >= 3");
    }
    return H_of_R(R, s, prec) * pow_si(R + one, 2) / (pow_si(R, 3) * s.g0) + one + one / R;
}

Ival zero_count_bound(const Ival& log_t, const Ival& eta, mpfr_prec_t prec) {
    Ival two7 = Ival::from_long(2, prec) / Ival::from_long(7, prec);
    if (!eta.is_pos() || mpfr_cmp(eta.hi(), two7.hi()) > 0) {
        throw DomainViolation("zero_count_bound: eta outside (0, 2/7]");
    }
    if (!log_t.certainly_ge(log(Ival::from_long(100, prec)))) {
        throw DomainViolation("zero_count_bound: t must be >= 100");
    }
    return I("5.9975", prec) * pow(eta, I("1.5", prec)) * log_t + I("6.12", prec) +
           (mul_long(log(log_t), 2) / Ival::from_long(3, prec) - log(eta)) / I("1.879", prec);
}

namespace {

ZeroSumCoeffs derived_common(const Ival& eta, const Ival& delta, const Ival& nu,
                             mpfr_prec_t prec) {
    // shared S1-part of both zero-sum assemblies at t0 = 3e12
    Ival one = Ival::from_long(1, prec);
    Ival pi = Ival::pi(prec);
    Ival t0 = I("3e12", prec);
    Ival d2 = pow_si(delta, 2);
    ZeroSumCoeffs out;
    out.log_c = I("0.44", prec) / d2 + (Ival::from_long(2, prec) / delta + one / t0) /
                                           (mul_long(pi, 2)) +
                nu * (delta / pi + I("0.22", prec));
    out.loglog_c = I("1.16", prec) / d2 + I("0.58", prec) * nu;
    out.const_c = I("9.222", prec) / d2 + (one + delta / t0) / (mul_long(pi, 2) * t0) -
                  log(delta) / t0 - log(mul_long(pi, 2)) / (pi * delta) +
                  nu * (delta / pi * (delta / t0 - log(mul_long(pi, 2))) + I("4.61", prec)) +
                  I("0.00014", prec);
    (void)eta;
    return out;
}

}  // namespace

ZeroSumCoeffs zero_sum_bound_small_eta(const Ival& eta, mpfr_prec_t prec) {
    Ival one = Ival::from_long(1, prec);
    Ival two7 = Ival::from_long(2, prec) / Ival::from_long(7, prec);
    if (!eta.is_pos() || mpfr_cmp(eta.hi(), two7.hi()) > 0) {
        throw DomainViolation("zero_sum_bound_small_eta: eta outside (0, 2/7]");
    }
    ZeroSumCoeffs out;
    out.log_c = I("23.99", prec) / sqrt(eta) - I("40.385", prec);
    out.loglog_c = I("0.3548", prec) / pow_si(eta, 2) + I("1.2031", prec);
    out.const_c = I("-40.236", prec) + I("5.86", prec) / pow_si(eta, 2) -
                  log(eta) / (I("1.879", prec) * pow_si(eta, 2));
    (void)one;
    return out;
}

ZeroSumCoeffs zero_sum_small_eta_derived(const Ival& eta, mpfr_prec_t prec) {
    Ival one = Ival::from_long(1, prec);
    Ival eta0 = Ival::from_long(2, prec) / Ival::from_long(7, prec);
    Ival nu0 = (one / pow_si(eta0, 2) + one / pow_si(one - eta0, 2)) / Ival::from_long(2, prec);
    Ival delta = I("0.90114", prec);
    ZeroSumCoeffs out = derived_common(eta, delta, nu0, prec);
    out.log_c = out.log_c + I("23.99", prec) * (one / sqrt(eta) - one / sqrt(eta0));
    Ival inv2diff = one / pow_si(eta, 2) - one / pow_si(eta0, 2);
    out.loglog_c = out.loglog_c + I("0.3548", prec) * inv2diff;
    out.const_c = out.const_c + I("5.86", prec) * inv2diff +
                  (log(eta0) / pow_si(eta0, 2) - log(eta) / pow_si(eta, 2)) / I("1.879", prec);
    return out;
}

ZeroSumCoeffs zero_sum_bound_large_eta(const Ival& eta, mpfr_prec_t prec) {
    Ival one = Ival::from_long(1, prec);
    Ival two7 = Ival::from_long(2, prec) / Ival::from_long(7, prec);
    Ival half = I("0.5", prec);
    if (mpfr_cmp(eta.lo(), two7.lo()) < 0 || mpfr_cmp(eta.hi(), half.hi()) > 0) {
        throw DomainViolation("zero_sum_bound_large_eta: eta outside [2/7, 1/2]");
    }
    Ival nu = (one / pow_si(eta, 2) + one / pow_si(one - eta, 2)) / Ival::from_long(2, prec);
    ZeroSumCoeffs out;
    out.log_c = I("0.5576", prec) + I("0.6079", prec) * nu;
    out.loglog_c = I("0.7813", prec) + I("0.58", prec) * nu;
    out.const_c = I("5.732", prec) + I("3.898", prec) * nu;
    return out;
}

ZeroSumCoeffs zero_sum_large_eta_derived(const Ival& eta, mpfr_prec_t prec) {
    Ival one = Ival::from_long(1, prec);
    Ival nu = (one / pow_si(eta, 2) + one / pow_si(one - eta, 2)) / Ival::from_long(2, prec);
    return derived_common(eta, I("1.2185", prec), nu, prec);
}

Ival log_zeta_integral_bound_kline(int k, const Ival& log_t, mpfr_prec_t prec) {
    if (k < 4) throw UsageError("log_zeta_integral_bound_kline: k >= 4 required");
    Ival lo_req = max(log(I("3e12", prec)), mul_long(Ival::log2(prec), k));
    if (!log_t.certainly_ge(lo_req)) {
        throw DomainViolation("log_zeta_integral_bound_kline: t below max(3e12, 2^k)");
    }
    Ival denom = pow_si(Ival::from_long(2, prec), k) - Ival::from_long(2, prec);
    return log_t / denom + log(log_t) + log(I("1.546", prec));
}

Ival log_zeta_integral_bound_convexity(const Ival& eta, const Ival& log_t, mpfr_prec_t prec) {
    Ival two7 = Ival::from_long(2, prec) / Ival::from_long(7, prec);
    Ival half = I("0.5", prec);
    if (mpfr_cmp(eta.lo(), two7.lo()) < 0 || mpfr_cmp(eta.hi(), half.hi()) > 0) {
        throw DomainViolation("log_zeta_integral_bound_convexity: eta outside [2/7, 1/2]");
    }
    if (!log_t.certainly_ge(log(I("3e12", prec)))) {
        throw DomainViolation("log_zeta_integral_bound_convexity: t below 3e12");
    }
    return (mul_long(eta, 8) - Ival::from_long(1, prec)) / Ival::from_long(18, prec) * log_t +
           log(log_t) + I("1.659", prec) - I("4.279", prec) * eta;
}

std::pair<Ival, Ival> convexity_constants(mpfr_prec_t prec) {
    Ival one = Ival::from_long(1, prec);
    Ival t0 = I("1e12", prec);
    Ival q = I("1.31", prec) + Ival::from_long(5, prec) / Ival::from_long(7, prec);
    Ival s = pow_si(q / t0, 2) + one;
    Ival c1 = pow(I("0.618", prec), Ival::from_long(10, prec) / Ival::from_long(3, prec)) /
              pow(I("1.546", prec), Ival::from_long(7, prec) / Ival::from_long(3, prec)) *
              pow(s, Ival::from_long(7, prec) / Ival::from_long(12, prec)) *
              (one + log(s) / mul_long(log(t0), 2));
    Ival log_c2 = log(I("1.546", prec) / I("0.618", prec)) * Ival::from_long(14, prec) /
                  Ival::from_long(3, prec);
    return {log(c1) + log_c2, log_c2};
}

namespace {

// A0(x) and its sign-driving factor A1(x) for the eta_k <-> Lambert-W bridge
Ival A0_of(const Ival& x, const Ival& alpha, mpfr_prec_t prec) {
    Ival one = Ival::from_long(1, prec);
    Ival W = lambert_w0(x);
    return alpha * Ival::log2(prec) * pow_si(log(x / alpha), 2) / pow_si(W, 2) *
           (one - mul_long(W, 2) / x);
}

Ival A1_of(const Ival& x, const Ival& alpha, mpfr_prec_t prec) {
    Ival two = Ival::from_long(2, prec);
    Ival W = lambert_w0(x);
    return (pow_si(W, 2) + mul_long(W, 2) - x) * log(x / alpha) -
           mul_long(pow_si(W, 2), 2) - (two - x) * W + x;
}

}  // namespace

Certificate main_inequality_large_t(mpfr_prec_t prec) {
    Certificate cert;
    cert.suite = "zfr-large-t";
    Ival one = Ival::from_long(1, prec);
    Ival alpha = I(kAlpha, prec);
    Ival M1 = I(kM1, prec);
    Ival lt1 = I(kLogT1, prec);
    TrigPolyData poly = default_trig_poly(prec);
    SmoothingConstants sm = smoothing_constants(poly, prec);

    // Corollary constant consistency: 1/21.233 <= M1
    cert.add(item_ge("large_t.M1_times_21233", I("21.233", prec) * M1, "1"));

    // W bridge: W0(alpha log T_k) = k log 2 for T_k = 2^{k 2^k / alpha}
    bool bridge_ok = true;
    for (int k = 4; k <= 20; ++k) {
        Ival arg = mul_long(pow_si(Ival::from_long(2, prec), k), k) * Ival::log2(prec);
        Ival w = lambert_w0(arg);
        Ival expect = mul_long(Ival::log2(prec), k);
        if (!w.contains(expect) && !expect.contains(w)) {
            // both are tight enclosures of the same value; accept overlap
            Ival diff = abs(w - expect);
            if (!diff.certainly_lt(I("1e-30", prec))) bridge_ok = false;
        }
    }
    cert.add(item_bool("large_t.lambertw_bridge", bridge_ok,
                       "W0(alpha log T_k)/log 2 = k for k = 4..20"));

    // T_5 = exp(797.1...) < t1
    Ival logT5 = mul_long(Ival::log2(prec), 5 * 32) / alpha;
    cert.add(item_lt("large_t.log_T5", logT5, kLogT1));

    // A1 bracketing of x* = 15.832... and sign on a log grid up to 1e6
    cert.add(item_gt("large_t.A1_at_15_7", A1_of(I("15.7", prec), alpha, prec), "0"));
    cert.add(item_lt("large_t.A1_at_15_9", A1_of(I("15.9", prec), alpha, prec), "0"));
    bool a1_grid = true;
    {
        Ival lo = log(I("15.9", prec));
        Ival hi = log(I("1e6", prec));
        const int pts = 160;
        for (int i = 0; i <= pts; ++i) {
            Ival x = exp(lo + mul_long(hi - lo, i) / Ival::from_long(pts, prec));
            if (!A1_of(x, alpha, prec).certainly_lt(Ival::from_long(0, prec))) {
                a1_grid = false;
                break;
            }
        }
    }
    cert.add(item_bool("large_t.A1_negative_grid", a1_grid,
                       "A1(x) < 0 on a log grid over [15.9, 1e6]"));

    // A0(x0) with x0 = alpha log t1 (x* = 15.83... lies far below it)
    Ival x0 = alpha * lt1;
    Ival A0x0 = A0_of(x0, alpha, prec);
    cert.add(item_le("large_t.A0_x0", A0x0, "0.3297"));

    Ival llt1 = log(lt1);  // loglog t1
    Ival C1 = A0x0 / llt1;
    cert.add(item_le("large_t.C1", C1, "0.047958"));

    // lambda <= eta_k/(R+1) with R = 441.729 needs C1 M1 <= 1/442.729
    cert.add(item_cmp("large_t.R_admissible", "<=", C1 * M1, one / I("442.729", prec),
                      "1/442.729"));
    Ival cR = c_of_R(I("441.729", prec), sm, prec);
    cert.add(item_le("large_t.c_R", cR, "1.02268"));

    long D = poly.D;
    Ival logD1 = log(Ival::from_long(D, prec) + exp(-lt1));  // log(D + 1/t1)
    Ival x1 = max(exp(one + alpha * Ival::e(prec)), lt1);
    Ival C2 = Ival::from_long(6, prec) / Ival::from_long(5, prec) * Ival::log2(prec) *
              (one + (logD1 - poly.log_weight_constant) / lt1) * log(x1) /
              lambert_w0(alpha * x1);
    cert.add(item_le("large_t.C2", C2, "1.58176"));

    Ival C3 = A0x0 * (one + log(one + logD1 / lt1) / llt1);
    cert.add(item_le("large_t.C3", C3, "0.32989"));

    Ival C4 = A0x0 * (log(A0x0) / llt1 + one);
    cert.add(item_le("large_t.C4", C4, "0.27649"));

    Ival half = I("0.5", prec);
    Ival C5 = (C1 * log(I("1.546", prec)) * half + C2 * half + C3 * half) * poly.b +
              C4 * half + Ival::euler_gamma(prec) * half * llt1 / lt1;
    cert.add(item_le("large_t.C5", C5, "3.59415"));

    // 0.087 pi^2 b1 <= 1.5002, then C6 with the published coefficient
    Ival q6 = I("0.087", prec) * pow_si(Ival::pi(prec), 2) * poly.b1;
    cert.add(item_le("large_t.coef_1_5002", q6, "1.5002"));
    Ival C6 = I("1.5002", prec) * pow_si(A0x0, 2) * M1 / pow_si(llt1, 2);
    cert.add(item_le("large_t.C6", C6, "0.00017"));

    // C7 = max U(x) over x >= L1(t1); U's leading coefficient dominates
    // 23.99 sqrt(A0(x0))
    cert.add(item_le("large_t.coef_13_775", I("23.99", prec) * sqrt(A0x0), "13.775"));
    Ival L1t1 = lt1 + logD1;
    RayMaxProblem U;
    U.terms.push_back({I("13.775", prec), 1, half});
    U.terms.push_back({I("-40.051", prec), 2, one});
    U.terms.push_back({I("1.2031", prec), 3, Ival::from_long(2, prec)});
    U.terms.push_back({I("-38.58", prec), 2, Ival::from_long(2, prec)});
    U.constant = Ival::from_long(0, prec);
    U.x_lo = L1t1;
    U.tail_threshold = I("1e9", prec);
    Ival C7 = max_on_ray(U, 1 << 14, 80, prec).bound;
    cert.add(item_le("large_t.C7", C7, "1.18399"));

    Ival C8 = pow_si(A0x0, 2) * pow_si(one + (logD1 / lt1) / llt1, 3) / llt1;
    cert.add(item_le("large_t.C8", C8, "0.01584"));

    Ival L2t1 = log(L1t1);
    Ival C9 = pow_si(A0x0, 2) / llt1 * (one + log(A0x0) / llt1) * (L2t1 / L1t1);
    cert.add(item_le("large_t.C9", C9, "0.0001"));

    Ival C10 = pow_si(L2t1 / L1t1, 2);
    cert.add(item_le("large_t.C10", C10, "0.00006"));

    Ival C11 = cR * M1 *
               (poly.b * (C7 + I("2.0373", prec) * C8 + I("0.5322", prec) * C9) +
                I("1.8", prec) * C10);
    cert.add(item_le("large_t.C11", C11, "0.20942"));

    Ival C12 = I("1e-100", prec) * (one + logD1 / lt1) + logD1;
    cert.add(item_le("large_t.C12", C12, "3.82865"));

    // numerator constants
    cert.add(item_ge("large_t.cos2theta", sm.cos2theta, "0.17996"));
    Ival qnum = sm.neg_gp_over_g0 * poly.b1;
    cert.add(item_le("large_t.coef_0_20523", qnum, "0.20523"));

    Ival numer = sm.cos2theta - qnum * C12 / lt1;
    Ival ratio = numer / (C5 + C6 + C11);
    cert.add(item_ge("large_t.final_ratio", ratio, "0.04709785"));
    cert.add(item_ge("large_t.final_vs_M1", ratio, kM1));
    return cert;
}

Certificate main_inequality_small_t(mpfr_prec_t prec) {
    Certificate cert;
    cert.suite = "zfr-small-t";
    Ival one = Ival::from_long(1, prec);
    Ival half = I("0.5", prec);
    Ival M1 = I(kM1, prec);
    Ival E = I(kE, prec);
    Ival lt0 = I(kLogT0, prec);
    Ival lt1 = I(kLogT1, prec);
    TrigPolyData poly = default_trig_poly(prec);
    SmoothingConstants sm = smoothing_constants(poly, prec);
    long D = poly.D;

    Ival L1t0 = L1_of(lt0, D, prec);
    Ival L2t0 = log(L1t0);
    Ival L1t1 = L1_of(lt1, D, prec);
    Ival L2t1 = log(L1t1);

    // eta(t) = (8 - E/L2)^{-1} stays inside [2/7, 1/2]; eta is decreasing in t
    Ival eta_t0 = one / (Ival::from_long(8, prec) - E / L2t0);
    Ival eta_t1 = one / (Ival::from_long(8, prec) - E / L2t1);
    cert.add(item_le("small_t.eta_at_t0", eta_t0, "0.5"));
    cert.add(item_cmp("small_t.eta_at_t1", ">=", eta_t1,
                      Ival::from_long(2, prec) / Ival::from_long(7, prec), "2/7"));

    // L2/loglog t <= 1.0044 on t >= t0
    Ival l2ratio = one + log(Ival::from_long(D, prec) + exp(-lt0)) / (lt0 * log(lt0));
    cert.add(item_le("small_t.L2_ratio", l2ratio, "1.0044"));

    // sup (8 log x - E/1.0044)/x over x >= 170.2
    RayMaxProblem u60;
    u60.terms.push_back({Ival::from_long(8, prec), 1, one});
    u60.terms.push_back({-(E / I("1.0044", prec)), 0, one});
    u60.constant = Ival::from_long(0, prec);
    u60.x_lo = lt0;
    u60.tail_threshold = I("1e9", prec);
    Ival u0603 = max_on_ray(u60, 1 << 12, 60, prec).bound;
    cert.add(item_le("small_t.inv_eta_coef", u0603, "0.06039"));

    // lambda <= eta/(R'+1) with R' = 350.588 needs 0.06039 M1 <= 1/351.588
    cert.add(item_cmp("small_t.Rp_admissible", "<=", I("0.06039", prec) * M1,
                      one / I("351.588", prec), "1/351.588"));
    Ival cRp = c_of_R(I("350.588", prec), sm, prec);
    cert.add(item_le("small_t.c_Rp", cRp, "1.0288"));

    // log zeta(1 + eta)/(2 eta) <= gamma/2 - log(eta)/(2 eta), max at eta = 2/7
    Ival eta0 = Ival::from_long(2, prec) / Ival::from_long(7, prec);
    Ival zeta_piece = Ival::euler_gamma(prec) * half - log(eta0) / mul_long(eta0, 2);
    cert.add(item_le("small_t.log_zeta_piece", zeta_piece, "2.481"));

    // main-term assembly: (b/2)(E/18) L1/L2 plus a log-power ray function
    Ival b_half = poly.b * half;
    Ival main_lead = b_half * E / Ival::from_long(18, prec);
    cert.add(item_le("small_t.main_lead", main_lead, "3.07346"));
    cert.add(item_le("small_t.coef_14_298", mul_long(b_half, 8), "14.298"));

    // honest V(x) = [c1 log^2 x + c2 log x + c3]/x with
    // c1 = 8(b/2), c2 = (b/2)(1.659*8 - 4.279 - E) + 2.481,
    // c3 = -(b/2)(1.659 + 3.377/18) E
    Ival c2v = b_half * (I("1.659", prec) * Ival::from_long(8, prec) - I("4.279", prec) - E) +
               zeta_piece;
    Ival c3v = -(b_half * (I("1.659", prec) + poly.log_weight_constant /
                                                  Ival::from_long(18, prec)) * E);
    RayMaxProblem V;
    V.terms.push_back({mul_long(b_half, 8), 2, one});
    V.terms.push_back({c2v, 1, one});
    V.terms.push_back({c3v, 0, one});
    V.constant = Ival::from_long(0, prec);
    V.x_lo = L1t0;
    V.tail_threshold = I("1e9", prec);
    Ival vmax = max_on_ray(V, 1 << 12, 60, prec).bound;
    Ival main_term = main_lead + vmax;
    cert.add(item_le("small_t.main_term", main_term, "3.59852"));

    // the published variant of the same ray maximum
    RayMaxProblem u52;
    u52.terms.push_back({I("14.298", prec), 2, one});
    u52.terms.push_back({I("-36.761", prec), 1, one});
    u52.terms.push_back({I("-102.18", prec), 0, one});
    u52.constant = Ival::from_long(0, prec);
    u52.x_lo = L1t0;
    u52.tail_threshold = I("1e9", prec);
    cert.add(item_le("small_t.u_52506", max_on_ray(u52, 1 << 12, 60, prec).bound, "0.52506"));

    // B2 = sup (34 log^2 x - 8 E log x + E^2/2)/x over x >= L1(t0)
    RayMaxProblem B2p;
    B2p.terms.push_back({Ival::from_long(34, prec), 2, one});
    B2p.terms.push_back({mul_long(E, -8), 1, one});
    B2p.terms.push_back({pow_si(E, 2) * half, 0, one});
    B2p.constant = Ival::from_long(0, prec);
    B2p.x_lo = L1t0;
    B2p.tail_threshold = I("1e9", prec);
    Ival B2 = max_on_ray(B2p, 1 << 13, 70, prec).bound;
    cert.add(item_le("small_t.B2", B2, "0.61184"));

    // guard items behind the published B3 majorant
    cert.add(item_le("small_t.coef_0_891",
                     I("0.5576", prec) + one / Ival::from_long(3, prec), "0.891"));
    cert.add(item_le("small_t.B3_const_guard",
                     (I("7.329", prec) - poly.log_weight_constant * I("0.891", prec)) * poly.b +
                         I("1.8", prec),
                     "18"));
    cert.add(item_le("small_t.B3_nu_guard",
                     I("3.898", prec) - poly.log_weight_constant * I("0.6079", prec), "2"));

    // B3(t) is decreasing in t (every piece is); its value at t0 is the bound
    Ival B3 = cRp * M1 *
              (poly.b * (I("0.891", prec) * pow_si(L2t0, 2) / L1t0 + I("0.6079", prec) * B2 +
                         I("0.7813", prec) * pow_si(L2t0, 3) / pow_si(L1t0, 2) +
                         I("0.58", prec) * B2 * L2t0 / L1t0 + mul_long(B2, 2) / L1t0) +
               Ival::from_long(18, prec) * pow_si(L2t0 / L1t0, 2));
    cert.add(item_le("small_t.B3", B3, "0.09245"));

    // first term: sup over [t0, t1] of 1.5002 M1 (loglog t/log t)(8 - E/L2)^2 (L2/L1)
    Ival q6 = I("0.087", prec) * pow_si(Ival::pi(prec), 2) * poly.b1;
    cert.add(item_le("small_t.coef_1_5002", q6, "1.5002"));
    auto first_f = [&](const Ival& x) {
        Ival L1x = L1_of(x, D, prec);
        Ival L2x = log(L1x);
        return I("1.5002", prec) * M1 * (log(x) / x) *
               pow_si(Ival::from_long(8, prec) - E / L2x, 2) * (L2x / L1x);
    };
    Ival first = max_on_segment(first_f, lt0, lt1, 256, 50);
    cert.add(item_le("small_t.first_term", first, "0.00015"));

    // final ratio with the honestly computed denominator
    Ival logD0 = log(Ival::from_long(D, prec) + exp(-lt0));
    Ival C12t0 = I("1e-100", prec) * (one + logD0 / lt0) + logD0;
    Ival qnum = sm.neg_gp_over_g0 * poly.b1;
    Ival numer = sm.cos2theta - qnum * C12t0 / lt0;
    Ival ratio = numer / (first + main_term + B3);
    cert.add(item_ge("small_t.final_ratio", ratio, "0.0475"));
    cert.add(item_ge("small_t.final_vs_M1", ratio, kM1));
    return cert;
}

const std::vector<RegionSpec>& builtin_regions() {
    static const std::vector<RegionSpec> regions = {
        {"classical", "classical", {"5.558691"}, "2"},
        {"ford", "ford", {"0.04962", "0.0196", "1.15", "0.685", "0.155", "0.618"}, "3"},
        {"vk", "vk", {"55.241"}, "3"},
        {"littlewood-new", "littlewood", {"21.233"}, "3"},
    };
    return regions;
}

std::vector<RegionSpec> load_region_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open region catalog: " + path);
    std::vector<RegionSpec> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ss(line);
        std::vector<std::string> tok;
        std::string t;
        while (ss >> t) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() < 4) {
            throw ParseError("region catalog line " + std::to_string(lineno) +
                             ": expected name formula params... valid_from");
        }
        RegionSpec r;
        r.name = tok.front();
        r.formula = tok[1];
        r.valid_from_t = tok.back();
        r.params.assign(tok.begin() + 2, tok.end() - 1);
        size_t need = (r.formula == "classical" || r.formula == "vk" ||
                       r.formula == "littlewood")
                          ? 1
                          : (r.formula == "ford" ? 6 : 0);
        if (need == 0) {
            throw ParseError("region catalog line " + std::to_string(lineno) +
                             ": unknown formula id '" + r.formula + "'");
        }
        if (r.params.size() != need) {
            throw ParseError("region catalog line " + std::to_string(lineno) + ": formula '" +
                             r.formula + "' takes " + std::to_string(need) + " parameter(s)");
        }
        out.push_back(r);
    }
    return out;
}

Ival region_width_logt(const RegionSpec& r, const Ival& log_t, mpfr_prec_t prec) {
    Ival one = Ival::from_long(1, prec);
    if (r.formula == "classical") {
        return one / (I(r.params[0], prec) * log_t);
    }
    if (r.formula == "vk") {
        return one / (I(r.params[0], prec) *
                      pow(log_t, Ival::from_long(2, prec) / Ival::from_long(3, prec)) *
                      pow(log(log_t), one / Ival::from_long(3, prec)));
    }
    if (r.formula == "littlewood") {
        return log(log_t) / (I(r.params[0], prec) * log_t);
    }
    if (r.formula == "ford") {
        Ival J = log_t / Ival::from_long(6, prec) + log(log_t) + log(I(r.params[5], prec));
        Ival num = I(r.params[0], prec) - I(r.params[1], prec) / (J + I(r.params[2], prec));
        Ival den = J + I(r.params[3], prec) + I(r.params[4], prec) * log(log_t);
        return num / den;
    }
    throw UsageError("region_width: unknown formula id '" + r.formula + "'");
}

Ival region_width(const RegionSpec& r, const Ival& t, mpfr_prec_t prec) {
    if (!t.certainly_ge(I(r.valid_from_t, prec))) {
        throw DomainViolation("region_width: t below the region's validity range");
    }
    return region_width_logt(r, log(t + Ival::from_long(0, prec)), prec);
}

std::vector<Ival> crossovers(const RegionSpec& a, const RegionSpec& b, const Ival& logt_lo,
                             const Ival& logt_hi, mpfr_prec_t prec, long grid) {
    auto diff = [&](const Ival& x) {
        return region_width_logt(a, x, prec) - region_width_logt(b, x, prec);
    };
    std::vector<Ival> found;
    Ival span = logt_hi - logt_lo;
    int prev_sign = 0;
    Ival prev_x(prec);
    for (long i = 0; i <= grid; ++i) {
        Ival x = logt_lo + mul_long(span, i) / Ival::from_long(grid, prec);
        Ival d = diff(x.midpoint());
        int s = mpfr_sgn(d.hi()) < 0 ? -1 : (mpfr_sgn(d.lo()) > 0 ? 1 : 0);
        if (s != 0 && prev_sign != 0 && s != prev_sign) {
            found.push_back(bisect_root(diff, prev_x, x.midpoint(), -40));
        }
        if (s != 0) {
            prev_sign = s;
            prev_x = x.midpoint();
        }
    }
    return found;
}

}  // namespace vdc::zfr
