// Acceptance runner: one line per criterion, nonzero exit on any failure.
// An optional argument selects a single criterion (1..10).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "vdc/expsum.hpp"
#include "vdc/run.hpp"
#include "vdc/suites.hpp"
#include "vdc/zeta_bounds.hpp"
#include "vdc/zfr.hpp"

using namespace vdc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void require_items(Outcome& out, const Certificate& cert,
                   const std::vector<std::string>& names, const char* tag) {
    for (const auto& name : names) {
        const CertItem* it = cert.find(name);
        if (!it) {
            out.require(false, std::string(tag) + " missing item " + name);
            continue;
        }
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%s %s (computed [%.10g, %.10g] vs %s %s)", tag,
                      name.c_str(), it->computed_lo, it->computed_hi, it->relation.c_str(),
                      it->target_str.c_str());
        out.require(it->pass, buf);
    }
}

Outcome criterion1() {
    Outcome out;
    for (mpfr_prec_t prec : {256, 512}) {
        auto c = expsum::kth_derivative_constants(10, Ival::from_str("4.7399", prec),
                                                  Ival::from_long(3, prec), prec);
        out.require(c.A.certainly_le(Ival::from_str("2.744", prec)),
                    "A10 <= 2.744 at " + std::to_string(prec) + " bits");
        out.require(c.B.certainly_le(Ival::from_str("1.020", prec)),
                    "B10 <= 1.020 at " + std::to_string(prec) + " bits");
    }
    return out;
}

Outcome criterion2() {
    Outcome out;
    for (mpfr_prec_t prec : {256, 512}) {
        auto cert = expsum::uniform_kth_constants(60, prec);
        for (const auto& it : cert.items) {
            out.require(it.pass, it.name + " at " + std::to_string(prec) + " bits");
        }
    }
    return out;
}

Outcome criterion3() {
    Outcome out;
    for (mpfr_prec_t prec : {256, 512}) {
        for (const auto& row : zeta::builtin_table2()) {
            auto cert = zeta::gamma_certificate(row, prec);
            for (const auto& it : cert.items) {
                out.require(it.pass, it.name + " at " + std::to_string(prec) + " bits");
            }
        }
    }
    return out;
}

Outcome criterion4() {
    Outcome out;
    for (mpfr_prec_t prec : {256, 512}) {
        auto cert = zeta::uniform_branch_certificate(60, prec);
        std::string tag = "@" + std::to_string(prec);
        require_items(out, cert,
                      {"uniform.alpha_max", "uniform.beta_max", "uniform.combined_max",
                       "uniform.final_max"},
                      tag.c_str());
    }
    return out;
}

Outcome criterion5() {
    Outcome out;
    auto res = expsum::oracle_dominance_sweep(500, 42, 100000, 128);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%d violations over %d samples (worst margin %.6g)",
                  res.violations, res.samples, res.worst_margin);
    out.require(res.samples == 500 && res.violations == 0, buf);
    if (out.pass) out.detail = buf;
    return out;
}

Outcome criterion6() {
    Outcome out;
    mpfr_prec_t prec = 192;
    Ival sig = Ival::from_long(5, prec) / Ival::from_long(7, prec);
    Ival e = Ival::e(prec);
    for (int exp10 = 1; exp10 <= 6; ++exp10) {
        Ival t = pow_si(Ival::from_long(10, prec), exp10);
        Ival upper = zeta::zeta_abs_upper(sig, t, e, prec, 100'000'000);
        Ival target = zeta::theorem1_bound(4, t, prec);
        char buf[96];
        std::snprintf(buf, sizeof(buf), "t=1e%d: %.6g <= %.6g", exp10, upper.hi_d(),
                      target.lo_d());
        out.require(upper.certainly_le(target), buf);
    }
    return out;
}

Outcome criterion7() {
    Outcome out;
    for (mpfr_prec_t prec : {256, 512}) {
        auto s = zfr::smoothing_constants(zfr::default_trig_poly(prec), prec);
        std::string tag = "@" + std::to_string(prec) + " bits";
        out.require(item_contains("theta", s.theta, "1.132693699", "1e-9").pass,
                    "theta contains 1.132693699 " + tag);
        out.require(item_contains("g0", s.g0, "5.610921922", "1e-9").pass,
                    "g(0) contains 5.610921922 " + tag);
        out.require(item_contains("c0", s.c0, "14.464", "1e-3").pass, "c0 contains 14.464 " + tag);
        out.require(item_contains("c1", s.c1, "15.541", "1e-3").pass, "c1 contains 15.541 " + tag);
        out.require(item_contains("c2", s.c2, "7.9763", "1e-4").pass,
                    "c2 contains 7.9763 " + tag);
        out.require(item_contains("c3", s.c3, "3.4108", "1e-4").pass,
                    "c3 contains 3.4108 " + tag);
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "G'(0) >= -0.659108 %s (computed [%.12g, %.12g])", tag.c_str(),
                      s.gprime0.lo_d(), s.gprime0.hi_d());
        out.require(s.gprime0.certainly_ge(Ival::from_str("-0.659108", prec)), buf);
    }
    return out;
}

Outcome criterion8() {
    Outcome out;
    for (mpfr_prec_t prec : {256, 512}) {
        std::string tag = "@" + std::to_string(prec);
        auto lt = zfr::main_inequality_large_t(prec);
        require_items(out, lt,
                      {"large_t.A0_x0", "large_t.C1", "large_t.c_R", "large_t.C2",
                       "large_t.C3", "large_t.C4", "large_t.C5", "large_t.C6", "large_t.C7",
                       "large_t.C8", "large_t.C9", "large_t.C10", "large_t.C11",
                       "large_t.C12", "large_t.final_ratio"},
                      tag.c_str());
        auto st = zfr::main_inequality_small_t(prec);
        require_items(out, st, {"small_t.B2", "small_t.B3", "small_t.final_ratio"},
                      tag.c_str());
    }
    return out;
}

Outcome criterion9() {
    Outcome out;
    mpfr_prec_t prec = 256;
    const auto& regs = zfr::builtin_regions();
    auto nf = zfr::crossovers(regs[3], regs[1], Ival::from_long(100, prec),
                              Ival::from_long(300, prec), prec);
    out.require(nf.size() == 1 && nf[0].certainly_ge(Ival::from_str("169.8", prec)) &&
                    nf[0].certainly_le(Ival::from_str("170.8", prec)),
                "new/ford crossing inside 170.3 +- 0.5");
    auto nv = zfr::crossovers(regs[3], regs[2], Ival::from_str("1e5", prec),
                              Ival::from_str("1e6", prec), prec);
    out.require(nv.size() == 1 && nv[0].certainly_ge(Ival::from_str("530141", prec)) &&
                    nv[0].certainly_le(Ival::from_str("534141", prec)),
                "new/vk crossing inside 532141 +- 2000");
    if (out.pass && nf.size() == 1 && nv.size() == 1) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "crossings at log t = %.4f and %.1f", nf[0].mid_d(),
                      nv[0].mid_d());
        out.detail = buf;
    }
    return out;
}

std::string full_suite_json(const RunConfig& cfg) {
    Certificate all;
    all.suite = "all";
    all.extend(run_confirmed([&](mpfr_prec_t p) { return suites::constants_suite(p); }, cfg));
    all.extend(run_confirmed(
        [&](mpfr_prec_t p) { return suites::table2_suite(zeta::builtin_table2(), 60, p); },
        cfg));
    all.extend(suites::expsum_suite(40, cfg.seed, 20000, cfg.precision_bits));
    all.extend(run_confirmed([&](mpfr_prec_t p) { return suites::zfr_suite("all", p); }, cfg));
    auto regions = suites::regions_suite(zfr::builtin_regions(), 10, 1000, 64,
                                         cfg.precision_bits);
    all.extend(regions.cert);
    return report_to_json("all", cfg, all.items) + regions.csv;
}

Outcome criterion10() {
    Outcome out;
    RunConfig cfg;
    std::string a = full_suite_json(cfg);
    std::string b = full_suite_json(cfg);
    out.require(a == b, "reports differ between identical runs");
    if (out.pass) {
        out.detail = "byte-identical reports (" + std::to_string(a.size()) + " bytes)";
    }
    return out;
}

struct CriterionSpec {
    int id;
    const char* name;
    double budget_s;
    Outcome (*run)();
};

const CriterionSpec kCriteria[] = {
    {1, "constant recursion A10/B10", 1.0, criterion1},
    {2, "uniform constants k = 10..60 and fixed point", 1.0, criterion2},
    {3, "gamma-certificate rows k = 4..9", 10.0, criterion3},
    {4, "k >= 10 branch: alpha/beta/combined/final", 5.0, criterion4},
    {5, "oracle dominance, 500 seeded instances", 120.0, criterion5},
    {6, "line-bound spot checks k = 4, t = 10..1e6", 120.0, criterion6},
    {7, "smoothing constants", 1.0, criterion7},
    {8, "zero-free-region chains", 30.0, criterion8},
    {9, "region crossovers", 10.0, criterion9},
    {10, "deterministic reports", 0.0, criterion10},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    int failures = 0;
    for (const auto& spec : kCriteria) {
        if (only != 0 && spec.id != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = spec.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        double dt = seconds_since(t0);
        if (spec.budget_s > 0 && dt >= spec.budget_s) {
            out.pass = false;
            out.require(false, "runtime budget exceeded");
        }
        std::printf("criterion %2d: %s  (%5.1fs)  %s%s%s\n", spec.id,
                    out.pass ? "PASS" : "FAIL", dt, spec.name,
                    out.detail.empty() ? "" : " -- ", out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    return failures;
}
