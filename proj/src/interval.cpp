#include "vdc/interval.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <vector>

namespace vdc {

namespace {

void check_order(mpfr_srcptr lo, mpfr_srcptr hi, const char* op) {
    if (mpfr_nan_p(lo) || mpfr_nan_p(hi) || mpfr_cmp(lo, hi) > 0) {
        throw DomainViolation(std::string("interval invariant violated in ") + op);
    }
}

}  // namespace

Ival::Ival(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Ival::Ival(const Ival& o) : prec_(o.prec_) {
    mpfr_init2(lo_, o.prec_);
    mpfr_init2(hi_, o.prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Ival::Ival(Ival&& o) noexcept : prec_(o.prec_) {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    // neutralize o so its destructor is a no-op on our limbs
    mpfr_init2(o.lo_, MPFR_PREC_MIN);
    mpfr_init2(o.hi_, MPFR_PREC_MIN);
}

Ival& Ival::operator=(const Ival& o) {
    if (this != &o) {
        set_prec(o.prec_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Ival& Ival::operator=(Ival&& o) noexcept {
    if (this != &o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}

Ival::~Ival() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void Ival::set_prec(mpfr_prec_t prec) {
    if (prec_ != prec) {
        mpfr_set_prec(lo_, prec);
        mpfr_set_prec(hi_, prec);
        prec_ = prec;
    }
}

Ival Ival::from_str(const std::string& s, mpfr_prec_t prec) {
    Ival r(prec);
    if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 && mpfr_nan_p(r.lo_)) {
        throw ParseError("bad numeric literal: " + s);
    }
    mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
    check_order(r.lo_, r.hi_, "from_str");
    return r;
}

Ival Ival::from_long(long v, mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Ival Ival::from_double(double v, mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_set_d(r.lo_, v, MPFR_RNDD);
    mpfr_set_d(r.hi_, v, MPFR_RNDU);
    return r;
}

Ival Ival::hull(const Ival& a, const Ival& b) {
    Ival r(std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Ival Ival::point_from(mpfr_srcptr v, mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_set(r.lo_, v, MPFR_RNDD);
    mpfr_set(r.hi_, v, MPFR_RNDU);
    return r;
}

Ival Ival::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_set(r.lo_, lo, MPFR_RNDD);
    mpfr_set(r.hi_, hi, MPFR_RNDU);
    check_order(r.lo_, r.hi_, "from_endpoints");
    return r;
}

Ival Ival::midpoint() const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    Ival r = point_from(m, prec_);
    mpfr_clear(m);
    return r;
}

std::pair<Ival, Ival> Ival::split() const {
    Ival m = midpoint();
    return {from_endpoints(lo_, m.hi_, prec_), from_endpoints(m.lo_, hi_, prec_)};
}

Ival Ival::pi(mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Ival Ival::e(mpfr_prec_t prec) {
    Ival one = from_long(1, prec);
    return vdc::exp(one);
}

Ival Ival::euler_gamma(mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_const_euler(r.lo_, MPFR_RNDD);
    mpfr_const_euler(r.hi_, MPFR_RNDU);
    return r;
}

Ival Ival::log2(mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_const_log2(r.lo_, MPFR_RNDD);
    mpfr_const_log2(r.hi_, MPFR_RNDU);
    return r;
}

double Ival::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Ival::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Ival::mid_d() const {
    mpfr_t m;
    mpfr_init2(m, 64);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double v = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return v;
}

bool Ival::is_point() const { return mpfr_equal_p(lo_, hi_); }

bool Ival::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Ival::contains(const Ival& o) const {
    return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(o.hi_, hi_) <= 0;
}

bool Ival::contains_value(const std::string& decimal) const {
    // Agreement with a printed reference value at its own precision: the
    // enclosure must lie within one unit in the last printed decimal place.
    Ival v = from_str(decimal, prec_ + 64);
    long digits_after_point = 0;
    auto dot = decimal.find('.');
    if (dot != std::string::npos) {
        for (size_t i = dot + 1; i < decimal.size() && std::isdigit((unsigned char)decimal[i]);
             ++i) {
            ++digits_after_point;
        }
    }
    Ival ulp = pow_si(Ival::from_long(10, prec_ + 64), -digits_after_point);
    Ival window = hull(v - ulp, v + ulp);
    return window.contains(*this);
}

bool Ival::is_nonneg() const { return mpfr_sgn(lo_) >= 0; }
bool Ival::is_pos() const { return mpfr_sgn(lo_) > 0; }

Ival Ival::width() const {
    Ival r(prec_);
    mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
    mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
    return r;
}

std::string Ival::lo_str(int digits) const {
    char buf[512];
    mpfr_snprintf(buf, sizeof(buf), "%.*R*e", digits, MPFR_RNDD, lo_);
    return buf;
}

std::string Ival::hi_str(int digits) const {
    char buf[512];
    mpfr_snprintf(buf, sizeof(buf), "%.*R*e", digits, MPFR_RNDU, hi_);
    return buf;
}

std::string Ival::str(int digits) const {
    return "[" + lo_str(digits) + ", " + hi_str(digits) + "]";
}

Ival operator+(const Ival& a, const Ival& b) {
    Ival r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    check_order(r.lo_, r.hi_, "add");
    return r;
}

Ival operator-(const Ival& a, const Ival& b) {
    Ival r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    check_order(r.lo_, r.hi_, "sub");
    return r;
}

Ival operator-(const Ival& a) {
    Ival r(a.prec_);
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
}

Ival operator*(const Ival& a, const Ival& b) {
    mpfr_prec_t p = std::max(a.prec_, b.prec_);
    Ival r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    // lo: min of the four products rounded down
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // hi: max of the four products rounded up
    mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    check_order(r.lo_, r.hi_, "mul");
    return r;
}

Ival operator/(const Ival& a, const Ival& b) {
    if (b.contains_zero()) {
        throw DomainViolation("division by an enclosure containing 0");
    }
    mpfr_prec_t p = std::max(a.prec_, b.prec_);
    Ival r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    check_order(r.lo_, r.hi_, "div");
    return r;
}

Ival abs(const Ival& a) {
    Ival r(a.prec_);
    if (a.is_nonneg()) {
        return a;
    }
    if (mpfr_sgn(a.hi_) <= 0) {
        return -a;
    }
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Ival sqrt(const Ival& a) {
    if (mpfr_sgn(a.lo_) < 0) {
        throw DomainViolation("sqrt of an enclosure touching negative values");
    }
    Ival r(a.prec_);
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Ival log(const Ival& a) {
    if (mpfr_sgn(a.lo_) <= 0) {
        throw DomainViolation("log of an enclosure touching non-positive values");
    }
    Ival r(a.prec_);
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Ival exp(const Ival& a) {
    Ival r(a.prec_);
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Ival pow_si(const Ival& a, long n) {
    mpfr_prec_t p = a.prec_;
    if (n == 0) {
        return Ival::from_long(1, p);
    }
    if (n < 0) {
        return Ival::from_long(1, p) / pow_si(a, -n);
    }
    Ival r(p);
    bool even = (n % 2 == 0);
    if (a.is_nonneg() || !even) {
        mpfr_pow_si(r.lo_, a.lo_, n, MPFR_RNDD);
        mpfr_pow_si(r.hi_, a.hi_, n, MPFR_RNDU);
    } else if (mpfr_sgn(a.hi_) <= 0) {
        mpfr_pow_si(r.lo_, a.hi_, n, MPFR_RNDD);
        mpfr_pow_si(r.hi_, a.lo_, n, MPFR_RNDU);
    } else {
        // straddles zero, even power
        mpfr_set_zero(r.lo_, 1);
        mpfr_t t;
        mpfr_init2(t, p);
        mpfr_pow_si(r.hi_, a.hi_, n, MPFR_RNDU);
        mpfr_pow_si(t, a.lo_, n, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
    }
    check_order(r.lo_, r.hi_, "pow_si");
    return r;
}

Ival pow(const Ival& a, const Ival& y) {
    if (!a.is_pos()) {
        throw DomainViolation("pow with base enclosure touching non-positive values");
    }
    return exp(y * log(a));
}

void Ival::sincos_impl(const Ival& a, Ival& s, Ival& c) {
    mpfr_prec_t p = a.prec_;

    // Narrow arguments (the overwhelmingly common case in the summation
    // loops): one midpoint evaluation, widened by the interval width — both
    // sin and cos are 1-Lipschitz — plus a rounding ulp.
    {
        mpfr_t w;
        mpfr_init2(w, p);
        mpfr_sub(w, a.hi_, a.lo_, MPFR_RNDU);
        bool narrow = mpfr_zero_p(w) || mpfr_get_exp(w) < -8;
        if (narrow) {
            mpfr_t m, sm, cm, rad;
            mpfr_inits2(p, m, sm, cm, rad, (mpfr_ptr)nullptr);
            mpfr_add(m, a.lo_, a.hi_, MPFR_RNDN);
            mpfr_div_2ui(m, m, 1, MPFR_RNDN);
            mpfr_sin_cos(sm, cm, m, MPFR_RNDN);
            // radius: full width + a couple of ulps of 1
            mpfr_set_ui_2exp(rad, 4, -(long)p, MPFR_RNDU);
            mpfr_add(rad, rad, w, MPFR_RNDU);
            s = Ival(p);
            c = Ival(p);
            mpfr_sub(s.lo_, sm, rad, MPFR_RNDD);
            mpfr_add(s.hi_, sm, rad, MPFR_RNDU);
            mpfr_sub(c.lo_, cm, rad, MPFR_RNDD);
            mpfr_add(c.hi_, cm, rad, MPFR_RNDU);
            mpfr_clears(m, sm, cm, rad, (mpfr_ptr)nullptr);
            mpfr_clear(w);
            return;
        }
        mpfr_clear(w);
    }

    // General case: endpoint hulls corrected by critical points, at a modest
    // precision bump so the bracketing below stays conservative.
    Ival tau = Ival::pi(p + 32);
    mpfr_t w;
    mpfr_init2(w, p + 32);
    mpfr_sub(w, a.hi_, a.lo_, MPFR_RNDU);
    mpfr_t twopi;
    mpfr_init2(twopi, p + 32);
    mpfr_mul_2ui(twopi, tau.lo_, 1, MPFR_RNDD);
    bool full = mpfr_cmp(w, twopi) >= 0;
    mpfr_clear(twopi);
    mpfr_clear(w);

    s = Ival(p);
    c = Ival(p);
    if (full) {
        mpfr_set_si(s.lo_, -1, MPFR_RNDD);
        mpfr_set_si(s.hi_, 1, MPFR_RNDU);
        mpfr_set_si(c.lo_, -1, MPFR_RNDD);
        mpfr_set_si(c.hi_, 1, MPFR_RNDU);
        return;
    }

    // Endpoint hulls
    mpfr_t t;
    mpfr_init2(t, p);
    mpfr_sin(s.lo_, a.lo_, MPFR_RNDD);
    mpfr_sin(t, a.hi_, MPFR_RNDD);
    mpfr_min(s.lo_, s.lo_, t, MPFR_RNDD);
    mpfr_sin(s.hi_, a.lo_, MPFR_RNDU);
    mpfr_sin(t, a.hi_, MPFR_RNDU);
    mpfr_max(s.hi_, s.hi_, t, MPFR_RNDU);
    mpfr_cos(c.lo_, a.lo_, MPFR_RNDD);
    mpfr_cos(t, a.hi_, MPFR_RNDD);
    mpfr_min(c.lo_, c.lo_, t, MPFR_RNDD);
    mpfr_cos(c.hi_, a.lo_, MPFR_RNDU);
    mpfr_cos(t, a.hi_, MPFR_RNDU);
    mpfr_max(c.hi_, c.hi_, t, MPFR_RNDU);
    mpfr_clear(t);

    // Critical points: x = offset + k*2pi carries the extreme value. The test
    // set is over-approximated, never under-approximated.
    auto contains_crit = [&](int num_halfpi) {
        // offset = num_halfpi * pi/2
        mpfr_t off_lo, off_hi, u, v;
        mpfr_inits2(p + 32, off_lo, off_hi, u, v, (mpfr_ptr)nullptr);
        mpfr_mul_si(off_lo, tau.lo_, num_halfpi, num_halfpi >= 0 ? MPFR_RNDD : MPFR_RNDU);
        mpfr_div_2ui(off_lo, off_lo, 1, MPFR_RNDD);
        mpfr_mul_si(off_hi, tau.hi_, num_halfpi, num_halfpi >= 0 ? MPFR_RNDU : MPFR_RNDD);
        mpfr_div_2ui(off_hi, off_hi, 1, MPFR_RNDU);
        // k-range: [(lo - off)/2pi, (hi - off)/2pi], outward
        mpfr_sub(u, a.lo_, off_hi, MPFR_RNDD);
        mpfr_div(u, u, tau.hi_, MPFR_RNDD);
        mpfr_div_2ui(u, u, 1, MPFR_RNDD);
        mpfr_sub(v, a.hi_, off_lo, MPFR_RNDU);
        mpfr_div(v, v, tau.lo_, MPFR_RNDU);
        mpfr_div_2ui(v, v, 1, MPFR_RNDU);
        mpfr_ceil(u, u);
        mpfr_floor(v, v);
        bool has = mpfr_cmp(u, v) <= 0;
        mpfr_clears(off_lo, off_hi, u, v, (mpfr_ptr)nullptr);
        return has;
    };

    if (contains_crit(1)) mpfr_set_si(s.hi_, 1, MPFR_RNDU);    // sin max at pi/2
    if (contains_crit(-1)) mpfr_set_si(s.lo_, -1, MPFR_RNDD);  // sin min at -pi/2
    if (contains_crit(0)) mpfr_set_si(c.hi_, 1, MPFR_RNDU);    // cos max at 0
    if (contains_crit(2)) mpfr_set_si(c.lo_, -1, MPFR_RNDD);   // cos min at pi
    check_order(s.lo_, s.hi_, "sin");
    check_order(c.lo_, c.hi_, "cos");
}

Ival sin(const Ival& a) {
    Ival s, c;
    Ival::sincos_impl(a, s, c);
    return s;
}

Ival cos(const Ival& a) {
    Ival s, c;
    Ival::sincos_impl(a, s, c);
    return c;
}

Ival tan(const Ival& a) {
    Ival s, c;
    Ival::sincos_impl(a, s, c);
    return s / c;
}

Ival cot(const Ival& a) {
    Ival s, c;
    Ival::sincos_impl(a, s, c);
    return c / s;
}

Ival cosh(const Ival& a) {
    Ival r(a.prec_);
    Ival m = abs(a);
    mpfr_cosh(r.hi_, m.hi(), MPFR_RNDU);
    if (a.contains_zero()) {
        mpfr_set_si(r.lo_, 1, MPFR_RNDD);
    } else {
        mpfr_cosh(r.lo_, m.lo(), MPFR_RNDD);
    }
    return r;
}

Ival atan(const Ival& a) {
    Ival r(a.prec_);
    mpfr_atan(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_atan(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Ival min(const Ival& a, const Ival& b) {
    Ival r(std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Ival max(const Ival& a, const Ival& b) {
    Ival r(std::max(a.prec_, b.prec_));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Ival mul_long(const Ival& a, long b) {
    Ival r(a.prec_);
    if (b >= 0) {
        mpfr_mul_si(r.lo_, a.lo_, b, MPFR_RNDD);
        mpfr_mul_si(r.hi_, a.hi_, b, MPFR_RNDU);
    } else {
        mpfr_mul_si(r.lo_, a.hi_, b, MPFR_RNDD);
        mpfr_mul_si(r.hi_, a.lo_, b, MPFR_RNDU);
    }
    return r;
}

Ival add_long(const Ival& a, long b) {
    Ival r(a.prec_);
    mpfr_add_si(r.lo_, a.lo_, b, MPFR_RNDD);
    mpfr_add_si(r.hi_, a.hi_, b, MPFR_RNDU);
    return r;
}

std::pair<long, long> Ival::floor_range() const {
    mpfr_t f;
    mpfr_init2(f, prec_);
    mpfr_floor(f, lo_);
    long a = mpfr_get_si(f, MPFR_RNDD);
    mpfr_floor(f, hi_);
    long b = mpfr_get_si(f, MPFR_RNDD);
    mpfr_clear(f);
    return {a, b};
}

}  // namespace vdc
