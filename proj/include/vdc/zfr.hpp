#pragma once

#include <string>
#include <vector>

#include "vdc/interval.hpp"
#include "vdc/report.hpp"

namespace vdc::zfr {

// Data of the degree-46 non-negative trigonometric polynomial. Only b0, b1
// and the coefficient sum are published; the 3.377 log-weight constant
// depends on the unpublished b_2..b_46 and is a trusted input.
struct TrigPolyData {
    long D = 46;
    Ival b0;
    Ival b1;
    Ival b;
    Ival log_weight_constant;  // 3.377
};
TrigPolyData default_trig_poly(mpfr_prec_t prec);

struct SmoothingConstants {
    Ival theta;      // root of sin^2 t = (b1/b0)(1 - t cot t) in (0, pi/2)
    Ival g0;         // sec^2 t (t tan t + 3 t cot t - 3)
    Ival gprime0;    // transform derivative at 0 (negative)
    Ival c0, c1, c2, c3;
    Ival cos2theta;        // cos^2 theta, the 0.17996 numerator constant
    Ival neg_gp_over_g0;   // -G'(0)/g(0), the 0.11747 chain constant
};
SmoothingConstants smoothing_constants(const TrigPolyData& poly, mpfr_prec_t prec);

Ival H_of_R(const Ival& R, const SmoothingConstants& s, mpfr_prec_t prec);
// c(R) = H(R)(R+1)^2/(R^3 g(0)) + 1 + 1/R, requires R > tan(theta)
Ival c_of_R(const Ival& R, const SmoothingConstants& s, mpfr_prec_t prec);

// N(t, eta) <= 5.9975 eta^{3/2} log t + 6.12 + ((2/3) loglog t - log eta)/1.879
Ival zero_count_bound(const Ival& log_t, const Ival& eta, mpfr_prec_t prec);

// Zero-sum bounds as coefficient triples: A log t + B loglog t + C, with the
// -N(t, eta)/eta^2 term left to the caller.
struct ZeroSumCoeffs {
    Ival log_c;
    Ival loglog_c;
    Ival const_c;
};
ZeroSumCoeffs zero_sum_bound_small_eta(const Ival& eta, mpfr_prec_t prec);   // 0 < eta <= 2/7
ZeroSumCoeffs zero_sum_bound_large_eta(const Ival& eta, mpfr_prec_t prec);   // 2/7 <= eta <= 1/2
// Re-assemblies from the proofs' parameters (delta = 0.90114 resp. 1.2185,
// eta0 = 2/7, t0 = 3e12), for checking the displayed coefficients.
ZeroSumCoeffs zero_sum_small_eta_derived(const Ival& eta, mpfr_prec_t prec);
ZeroSumCoeffs zero_sum_large_eta_derived(const Ival& eta, mpfr_prec_t prec);

// cosh^2-weighted log-zeta integral bounds
Ival log_zeta_integral_bound_kline(int k, const Ival& log_t, mpfr_prec_t prec);
Ival log_zeta_integral_bound_convexity(const Ival& eta, const Ival& log_t, mpfr_prec_t prec);
// (log C1 + log C2, log C2) of the convexity lemma, against (1.659, 4.279)
std::pair<Ival, Ival> convexity_constants(mpfr_prec_t prec);

// The full constant chains behind the zero-free region, large-t and small-t
// branches. Every named constant is an item with its published ceiling.
Certificate main_inequality_large_t(mpfr_prec_t prec);
Certificate main_inequality_small_t(mpfr_prec_t prec);

// Published zero-free region widths 1 - sigma >= w(t).
struct RegionSpec {
    std::string name;
    std::string formula;  // classical | ford | vk | littlewood
    std::vector<std::string> params;
    std::string valid_from_t;
};
const std::vector<RegionSpec>& builtin_regions();
std::vector<RegionSpec> load_region_catalog(const std::string& path);

Ival region_width_logt(const RegionSpec& r, const Ival& log_t, mpfr_prec_t prec);
Ival region_width(const RegionSpec& r, const Ival& t, mpfr_prec_t prec);

// Certified sign-change enclosures of width_a - width_b over [logt_lo, logt_hi]
std::vector<Ival> crossovers(const RegionSpec& a, const RegionSpec& b, const Ival& logt_lo,
                             const Ival& logt_hi, mpfr_prec_t prec, long grid = 512);

}  // namespace vdc::zfr
