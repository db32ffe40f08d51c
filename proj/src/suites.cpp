#include "vdc/suites.hpp"

#include <charconv>

#include "vdc/expsum.hpp"

namespace vdc::suites {

namespace {

Ival I(const std::string& s, mpfr_prec_t p) { return Ival::from_str(s, p); }

std::string shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

Certificate constants_suite(mpfr_prec_t prec) {
    Certificate cert = expsum::uniform_kth_constants(60, prec);
    cert.suite = "constants";

    auto sm = zfr::smoothing_constants(zfr::default_trig_poly(prec), prec);
    cert.add(item_contains("smoothing.theta", sm.theta, "1.132693699", "1e-9"));
    cert.add(item_contains("smoothing.g0", sm.g0, "5.610921922", "1e-9"));
    cert.add(item_contains("smoothing.c0", sm.c0, "14.464", "1e-3"));
    cert.add(item_contains("smoothing.c1", sm.c1, "15.541", "1e-3"));
    cert.add(item_contains("smoothing.c2", sm.c2, "7.9763", "1e-4"));
    cert.add(item_contains("smoothing.c3", sm.c3, "3.4108", "1e-4"));
    // The published floor -0.659108 truncates the true value -0.6591081...;
    // the first item records that discrepancy, the second the usable floor.
    cert.add(item_ge("smoothing.gprime0_published_floor", sm.gprime0, "-0.659108"));
    cert.add(item_ge("smoothing.gprime0_corrected_floor", sm.gprime0, "-0.659109"));
    cert.add(item_le("smoothing.c_R_441729", zfr::c_of_R(I("441.729", prec), sm, prec),
                     "1.02268"));
    cert.add(item_le("smoothing.c_R_350588", zfr::c_of_R(I("350.588", prec), sm, prec),
                     "1.0288"));
    return cert;
}

Certificate table2_suite(const std::vector<zeta::Table2Row>& rows, int uniform_kmax,
                         mpfr_prec_t prec) {
    Certificate cert;
    cert.suite = "table2";
    for (const auto& row : rows) {
        cert.extend(zeta::gamma_certificate(row, prec));
    }
    cert.extend(zeta::uniform_branch_certificate(uniform_kmax, prec));
    return cert;
}

Certificate expsum_suite(int samples, std::uint64_t seed, long n_cap, mpfr_prec_t prec) {
    Certificate cert;
    cert.suite = "expsum-check";
    if (samples == 0) {
        cert.add(item_bool("expsum.vacuous", true, "no samples requested"));
        return cert;
    }
    auto res = expsum::oracle_dominance_sweep(samples, seed, n_cap, prec);
    cert.add(item_cmp("expsum.violations", "<=",
                      Ival::from_long(res.violations, prec), Ival::from_long(0, prec), "0"));
    cert.add(item_ge("expsum.worst_margin", Ival::from_double(res.worst_margin, prec),
                     "-1e-6"));
    CertItem info = item_bool("expsum.samples", res.samples == samples,
                              std::to_string(samples) + " samples, seed " +
                                  std::to_string(seed));
    info.computed_lo = info.computed_hi = res.samples;
    cert.add(info);
    return cert;
}

Certificate zfr_suite(const std::string& branch, mpfr_prec_t prec) {
    Certificate cert;
    cert.suite = "zfr-" + branch;
    if (branch == "large-t" || branch == "all") {
        cert.extend(zfr::main_inequality_large_t(prec));
    }
    if (branch == "small-t" || branch == "all") {
        cert.extend(zfr::main_inequality_small_t(prec));
    }
    if (cert.items.empty()) throw UsageError("zfr_suite: branch must be large-t, small-t or all");
    return cert;
}

RegionsOutput regions_suite(const std::vector<zfr::RegionSpec>& catalog, double logt_min,
                            double logt_max, int points, mpfr_prec_t prec) {
    RegionsOutput out;
    out.cert.suite = "regions";

    const zfr::RegionSpec* rnew = nullptr;
    const zfr::RegionSpec* rford = nullptr;
    const zfr::RegionSpec* rvk = nullptr;
    for (const auto& r : catalog) {
        if (r.formula == "littlewood") rnew = &r;
        if (r.formula == "ford") rford = &r;
        if (r.formula == "vk") rvk = &r;
    }

    // CSV: per grid point, each region's midpoint plus explicit lo/hi, and the
    // best (largest-width) region by midpoint comparison.
    std::string csv = "log_t";
    for (const auto& r : catalog) {
        csv += "," + r.name + "_mid," + r.name + "_lo," + r.name + "_hi";
    }
    csv += ",best\n";
    for (int i = 0; i <= points; ++i) {
        double x = logt_min + (logt_max - logt_min) * i / points;
        Ival xi = Ival::from_double(x, prec);
        csv += shortest(x);
        std::string best;
        double best_mid = -1;
        for (const auto& r : catalog) {
            Ival w = zfr::region_width_logt(r, xi, prec);
            double mid = w.mid_d();
            csv += "," + shortest(mid) + "," + shortest(w.lo_d()) + "," + shortest(w.hi_d());
            if (mid > best_mid) {
                best_mid = mid;
                best = r.name;
            }
        }
        csv += "," + best + "\n";
    }
    out.csv = csv;

    if (rnew && rford) {
        auto xs = zfr::crossovers(*rnew, *rford, Ival::from_long(100, prec),
                                  Ival::from_long(300, prec), prec);
        CertItem it = item_bool("regions.crossing_new_ford", xs.size() == 1,
                                "one crossing, log t in 170.3 +- 0.5");
        if (xs.size() == 1) {
            it.computed_lo = xs[0].lo_d();
            it.computed_hi = xs[0].hi_d();
            it.pass = xs[0].certainly_ge(I("169.8", prec)) &&
                      xs[0].certainly_le(I("170.8", prec));
        }
        out.cert.add(it);
    }
    if (rnew && rvk) {
        auto xs = zfr::crossovers(*rnew, *rvk, I("1e5", prec), I("1e6", prec), prec);
        CertItem it = item_bool("regions.crossing_new_vk", xs.size() == 1,
                                "one crossing, log t in 532141 +- 2000");
        if (xs.size() == 1) {
            it.computed_lo = xs[0].lo_d();
            it.computed_hi = xs[0].hi_d();
            it.pass = xs[0].certainly_ge(I("530141", prec)) &&
                      xs[0].certainly_le(I("534141", prec));
        }
        out.cert.add(it);
    }
    if (rnew) {
        // at log t = 300 the new region is the widest
        Ival x = Ival::from_long(300, prec);
        Ival wn = zfr::region_width_logt(*rnew, x, prec);
        bool best = true;
        for (const auto& r : catalog) {
            if (&r == rnew) continue;
            if (!wn.certainly_gt(zfr::region_width_logt(r, x, prec))) best = false;
        }
        CertItem it = item_bool("regions.best_at_logt_300", best,
                                "littlewood-new widest at log t = 300");
        it.computed_lo = wn.lo_d();
        it.computed_hi = wn.hi_d();
        out.cert.add(it);
    }
    return out;
}

}  // namespace vdc::suites
