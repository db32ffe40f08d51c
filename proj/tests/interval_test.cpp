#include <random>

#include "doctest.h"
#include "vdc/expr.hpp"
#include "vdc/interval.hpp"
#include "vdc/solvers.hpp"

using vdc::Ival;

TEST_CASE("outward rounding and containment basics") {
    Ival a = Ival::from_str("0.1", 64);
    CHECK(!a.is_point());  // 0.1 is not binary-representable
    CHECK(a.contains_value("0.1"));

    Ival exact = Ival::from_str("2.5", 64);
    CHECK(exact.is_point());

    Ival x = Ival::from_long(1, 128);
    Ival z = x - x;
    CHECK(z.is_point());
    CHECK(z.contains_zero());
}

TEST_CASE("interval_eval examples") {
    vdc::Env env;
    Ival v = vdc::interval_eval("4/sqrt(pi)", env, 256);
    CHECK(v.contains_value("2.2567583341910251477923178"));
    CHECK(v.width().hi_d() < 1e-70);

    env["x"] = Ival::from_long(1, 256);
    Ival z = vdc::interval_eval("x - x", env, 256);
    CHECK(z.is_point());
    CHECK(z.contains_zero());

    // A2 constant of the two-term second-derivative test
    Ival a2 = vdc::interval_eval("(2 + sqrt(4 + pi))/sqrt(pi)", env, 256);
    CHECK(a2.contains_value("2.6361057818155561"));
}

TEST_CASE("interval_eval domain errors name the subexpression") {
    vdc::Env env;
    env["x"] = Ival::from_long(-1, 128);
    CHECK_THROWS_AS(vdc::interval_eval("log(x)", env, 128), vdc::DomainViolation);
    CHECK_THROWS_AS(vdc::interval_eval("1/(x + 1)", env, 128), vdc::DomainViolation);
    try {
        vdc::interval_eval("sqrt(x - 2)", env, 128);
        CHECK(false);
    } catch (const vdc::DomainViolation& e) {
        CHECK(std::string(e.what()).find("sqrt") != std::string::npos);
    }
}

TEST_CASE("containment: midpoint at 4x precision lies in the 1x enclosure") {
    // randomized expression/env pairs built from the supported operator set
    std::mt19937_64 rng(20240317);
    auto uniform = [&]() { return double(rng() >> 11) * 0x1.0p-53; };
    const char* fns[] = {"log", "exp", "sqrt", "sin", "cos", "cosh", "atan"};

    int done = 0;
    while (done < 10000) {
        // small random tree as a string
        std::string x = std::to_string(0.5 + 3 * uniform());
        std::string y = std::to_string(0.5 + 3 * uniform());
        std::string fa = fns[rng() % 7];
        std::string fb = fns[rng() % 7];
        const char* ops = "+-*/";
        char op = ops[rng() % 4];
        std::string src = fa + "(x) " + op + " " + fb + "(y + " + std::to_string(uniform()) + ")";
        vdc::Env env;
        env["x"] = Ival::from_str(x, 64);
        env["y"] = Ival::from_str(y, 64);
        try {
            Ival coarse = vdc::interval_eval(src, env, 64);
            Ival fine = vdc::interval_eval(src, env, 256);
            CHECK(coarse.contains(fine));
            // monotone refinement: width never grows with precision
            CHECK(fine.width().hi_d() <= coarse.width().hi_d());
            ++done;
        } catch (const vdc::DomainViolation&) {
            // expression landed outside a domain; draw another
        }
    }
}

TEST_CASE("lambert w basics and round trip") {
    mpfr_prec_t p = 256;
    Ival zero = Ival::from_long(0, p);
    CHECK(vdc::lambert_w0(zero).is_point());
    CHECK(vdc::lambert_w0(zero).contains_zero());

    Ival e = Ival::e(p);
    Ival w = vdc::lambert_w0(e);
    CHECK(w.contains_value("1"));

    // x = 5 * 2^5 * log 2 has W = 5 log 2
    Ival x = vdc::mul_long(Ival::log2(p), 160);
    Ival w2 = vdc::lambert_w0(x);
    Ival expect = vdc::mul_long(Ival::log2(p), 5);
    CHECK(w2.contains(expect));

    // round trip over a log-spaced grid
    for (int i = -6; i <= 9; ++i) {
        Ival xi = vdc::pow_si(Ival::from_long(10, p), i);
        Ival wi = vdc::lambert_w0(xi);
        Ival back = wi * vdc::exp(wi);
        CHECK(back.contains(xi));
        double rel = back.width().hi_d() / xi.hi_d();
        CHECK(rel < 1e-60);  // far below the 4-ulp contract at 256 bits
    }
}

TEST_CASE("bisect_root examples") {
    mpfr_prec_t p = 256;
    auto f1 = [&](const Ival& x) { return x - Ival::from_long(1, p); };
    Ival r = vdc::bisect_root(f1, Ival::from_long(0, p), Ival::from_long(2, p));
    CHECK(r.contains_value("1"));
    CHECK(r.width().hi_d() < 1e-25);

    auto f2 = [&](const Ival& x) { return x * x - Ival::from_long(2, p); };
    Ival r2 = vdc::bisect_root(f2, Ival::from_long(1, p), Ival::from_long(2, p));
    Ival sq = r2 * r2;
    CHECK(sq.contains_value("2"));

    // theta equation: sin^2(t) = (b1/b0)(1 - t cot t) on (0, pi/2)
    Ival b1 = Ival::from_str("1.74708744081848", p);
    auto f3 = [&](const Ival& x) {
        return vdc::pow_si(vdc::sin(x), 2) -
               b1 * (Ival::from_long(1, p) - x * vdc::cot(x));
    };
    Ival lo = Ival::from_str("0.5", p);
    Ival hi = Ival::from_str("1.5", p);
    Ival theta = vdc::bisect_root(f3, lo, hi);
    CHECK(theta.contains_value("1.132693699"));

    auto fbad = [&](const Ival& x) { return x * x + Ival::from_long(1, p); };
    CHECK_THROWS_AS(vdc::bisect_root(fbad, Ival::from_long(0, p), Ival::from_long(1, p)),
                    vdc::BracketError);
}

TEST_CASE("max_on_ray: decreasing function takes its sup at the left endpoint") {
    mpfr_prec_t p = 128;
    vdc::RayMaxProblem prob;
    // f(x) = -x on x >= 3: term -1 * log^0(x) x^{-(-1)}
    prob.terms.push_back({Ival::from_long(-1, p), 0, Ival::from_long(-1, p)});
    prob.constant = Ival::from_long(0, p);
    prob.x_lo = Ival::from_long(3, p);
    prob.tail_threshold = Ival::from_long(64, p);
    auto res = vdc::max_on_ray(prob, 1 << 8, 40, p);
    CHECK(res.bound.hi_d() <= -3.0 + 1e-8);
    CHECK(res.bound.lo_d() >= -3.0 - 1e-8);
}

TEST_CASE("max_on_ray soundness against sampling") {
    mpfr_prec_t p = 128;
    // 13.775 log x / sqrt(x) - 40.051 log^2 x / x, a shape like the proofs use
    vdc::RayMaxProblem prob;
    prob.terms.push_back({Ival::from_str("13.775", p), 1, Ival::from_str("0.5", p)});
    prob.terms.push_back({Ival::from_str("-40.051", p), 2, Ival::from_long(1, p)});
    prob.constant = Ival::from_long(0, p);
    prob.x_lo = Ival::from_long(900, p);
    prob.tail_threshold = Ival::from_long(100000000, p);
    auto res = vdc::max_on_ray(prob, 1 << 10, 50, p);

    std::mt19937_64 rng(7);
    auto uniform = [&]() { return double(rng() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < 100000; ++i) {
        double x = std::exp(std::log(900.0) + uniform() * std::log(1e8 / 900.0));
        double v = 13.775 * std::log(x) / std::sqrt(x) - 40.051 * std::pow(std::log(x), 2) / x;
        CHECK(v <= res.bound.hi_d() + 1e-12);
    }
}
