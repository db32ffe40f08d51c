#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "vdc/errors.hpp"

namespace vdc {

// A real number carried as a rigorous enclosure [lo, hi] with explicit
// rounding direction: lo is always rounded toward -inf, hi toward +inf.
// Every operation returns an enclosure containing the exact result of the
// operation applied to any points of the inputs. Enclosures at higher
// precision are subsets of the same expression's enclosure at lower
// precision, so doubling the precision never widens a result.
class Ival {
  public:
    explicit Ival(mpfr_prec_t prec = 128);
    Ival(const Ival& o);
    Ival(Ival&& o) noexcept;
    Ival& operator=(const Ival& o);
    Ival& operator=(Ival&& o) noexcept;
    ~Ival();

    // Decimal string, rounded outward. Exactly representable values become
    // points; "2.762" becomes [2.762 - ulp, 2.762 + ulp] at worst.
    static Ival from_str(const std::string& s, mpfr_prec_t prec);
    static Ival from_long(long v, mpfr_prec_t prec);
    static Ival from_double(double v, mpfr_prec_t prec);  // exact (doubles are binary)
    static Ival hull(const Ival& a, const Ival& b);
    static Ival point_from(mpfr_srcptr v, mpfr_prec_t prec);
    static Ival from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec);

    Ival midpoint() const;                 // point interval at the center
    std::pair<Ival, Ival> split() const;   // bisect at the midpoint

    // sin and cos of the same argument in one pass
    static void sincos_pair(const Ival& a, Ival& s, Ival& c) { sincos_impl(a, s, c); }

    static Ival pi(mpfr_prec_t prec);
    static Ival e(mpfr_prec_t prec);           // exp(1)
    static Ival euler_gamma(mpfr_prec_t prec); // Euler-Mascheroni constant
    static Ival log2(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

    double lo_d() const;  // rounded down
    double hi_d() const;  // rounded up
    double mid_d() const;

    bool is_point() const;
    bool contains_zero() const;
    bool contains(const Ival& o) const;  // o subseteq this
    bool contains_value(const std::string& decimal) const;
    bool is_nonneg() const;
    bool is_pos() const;

    // Certain (set-wise) comparisons: true only if the relation holds for
    // every pair of points.
    bool certainly_lt(const Ival& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
    bool certainly_le(const Ival& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }
    bool certainly_gt(const Ival& o) const { return o.certainly_lt(*this); }
    bool certainly_ge(const Ival& o) const { return o.certainly_le(*this); }

    Ival width() const;  // upper bound on hi - lo

    std::string str(int digits = 20) const;  // "[lo, hi]" with directed printing
    std::string lo_str(int digits = 20) const;
    std::string hi_str(int digits = 20) const;

    friend Ival operator+(const Ival& a, const Ival& b);
    friend Ival operator-(const Ival& a, const Ival& b);
    friend Ival operator*(const Ival& a, const Ival& b);
    friend Ival operator/(const Ival& a, const Ival& b);
    friend Ival operator-(const Ival& a);

    friend Ival abs(const Ival& a);
    friend Ival sqrt(const Ival& a);    // requires lo >= 0
    friend Ival log(const Ival& a);     // requires lo > 0
    friend Ival exp(const Ival& a);
    friend Ival pow_si(const Ival& a, long n);
    friend Ival pow(const Ival& a, const Ival& y);  // requires a.lo > 0
    friend Ival sin(const Ival& a);
    friend Ival cos(const Ival& a);
    friend Ival tan(const Ival& a);
    friend Ival cot(const Ival& a);
    friend Ival cosh(const Ival& a);
    friend Ival atan(const Ival& a);
    friend Ival min(const Ival& a, const Ival& b);
    friend Ival max(const Ival& a, const Ival& b);

    // [lo, hi] of both endpoints of a scaled by b, where b is an exact long.
    friend Ival mul_long(const Ival& a, long b);
    friend Ival add_long(const Ival& a, long b);

    // Largest integer m with m <= x for every x in the enclosure, and the
    // smallest integer M with M >= floor(x) for some x. Equal except when the
    // enclosure straddles an integer.
    std::pair<long, long> floor_range() const;

  private:
    void set_prec(mpfr_prec_t prec);
    static void sincos_impl(const Ival& a, Ival& s, Ival& c);

    mpfr_t lo_;
    mpfr_t hi_;
    mpfr_prec_t prec_;
};

Ival operator+(const Ival& a, const Ival& b);
Ival operator-(const Ival& a, const Ival& b);
Ival operator*(const Ival& a, const Ival& b);
Ival operator/(const Ival& a, const Ival& b);
Ival operator-(const Ival& a);
Ival abs(const Ival& a);
Ival sqrt(const Ival& a);
Ival log(const Ival& a);
Ival exp(const Ival& a);
Ival pow_si(const Ival& a, long n);
Ival pow(const Ival& a, const Ival& y);
Ival sin(const Ival& a);
Ival cos(const Ival& a);
Ival tan(const Ival& a);
Ival cot(const Ival& a);
Ival cosh(const Ival& a);
Ival atan(const Ival& a);
Ival min(const Ival& a, const Ival& b);
Ival max(const Ival& a, const Ival& b);
Ival mul_long(const Ival& a, long b);
Ival add_long(const Ival& a, long b);

}  // namespace vdc
