#pragma once

#include <cstdint>
#include <vector>

#include "vdc/interval.hpp"
#include "vdc/report.hpp"

namespace vdc::expsum {

// Phase function for S_f(a, N) = |sum_{a < n <= a+N} e(f(n))|. The zeta-log
// phase is f(x) = -(t/2pi) log x; polynomial phases carry double coefficients
// of x^0..x^d.
struct PhaseFunction {
    enum class Kind { ZetaLog, Polynomial };
    Kind kind = Kind::ZetaLog;
    double t = 0;
    std::vector<double> coeffs;

    static PhaseFunction zeta_log(double t) { return {Kind::ZetaLog, t, {}}; }
    static PhaseFunction polynomial(std::vector<double> c) {
        return {Kind::Polynomial, 0, std::move(c)};
    }

    // enclosure of f^{(order)}(x); order 0 is f itself
    Ival deriv(int order, const Ival& x, mpfr_prec_t prec) const;
};

// |sum e(f(n))| over a < n <= a+N with compensated double-double summation:
// phases reduced mod 1 in ~106-bit arithmetic, chunked accumulation in fixed
// index order. Absolute error <= 1e-9 for N <= 1e7.
double brute_force_expsum(const PhaseFunction& f, long a, long N, long cap = 10'000'000);

// Slow reference at explicit precision, for cross-checking the fast path.
double brute_force_expsum_ref(const PhaseFunction& f, long a, long N, mpfr_prec_t prec);

// Kuzmin-Landau: ||f'|| >= lambda1 on the range gives S_f <= 2/(pi lambda1).
Ival kuzmin_landau(const Ival& lambda1, mpfr_prec_t prec);
// generalized form: l + lambda1 <= f' <= l + 1 - mu1 gives (1/lambda1 + 1/mu1)/pi
Ival kuzmin_landau_general(const Ival& lambda1, const Ival& mu1, mpfr_prec_t prec);

// Second-derivative test, three-term form:
// (4/sqrt(pi)) N h sqrt(lambda2) + N h lambda2 + (4/sqrt(pi))/sqrt(lambda2).
Ival second_derivative_bound(long N, const Ival& h, const Ival& lambda2, mpfr_prec_t prec);
Ival second_deriv_delta0(const Ival& lambda2, mpfr_prec_t prec);  // internal split sqrt(lambda2/pi)

// two-term form A2 N h sqrt(lambda2) + B2/sqrt(lambda2)
Ival second_deriv_A2(mpfr_prec_t prec);  // (2 + sqrt(4 + pi))/sqrt(pi)
Ival second_deriv_B2(mpfr_prec_t prec);  // 4/sqrt(pi)
Ival second_deriv_lambda0(mpfr_prec_t prec);  // 1 + 4(2 - sqrt(4 + pi))/pi = 0.1439...
Ival second_derivative_AB(long N, const Ival& h, const Ival& lambda2, mpfr_prec_t prec);

// (A_k, B_k) data for the k-th derivative test, with all recursion
// intermediates retained.
struct DerivTestConstants {
    int k = 0;
    Ival eta3;
    Ival h;
    Ival A;
    Ival B;
    std::vector<Ival> delta_j;  // delta_j for j = 3 .. k-1 (recursion levels)
    std::vector<Ival> alpha_j;  // 4(J-1)^2/((2J-1)(4J-3)), same indexing
    std::vector<Ival> beta_j;   // 4(J-1)^2/((2J-3)(4J-5))
    Ival lambda0;               // third-derivative-test internals
    Ival delta3;
    Ival kappa;
};

DerivTestConstants third_derivative_constants(const Ival& eta3, const Ival& h, mpfr_prec_t prec);
DerivTestConstants kth_derivative_constants(int k, const Ival& eta3, const Ival& h,
                                            mpfr_prec_t prec);

// Uniform-constants certificate: A_k <= 2.762 and B_k <= 1.02 for
// 10 <= k <= k_max at eta3 = 4.7399, h = 3, plus the fixed-point argument
// and the 2^{1/12} coefficient bound.
Certificate uniform_kth_constants(int k_max, mpfr_prec_t prec);

struct DerivTestParams {
    int k = 0;
    long a = 0;
    long N = 0;
    Ival h;
    Ival lambda_k;
};

// A_k h^{2/K} N lambda^{1/(2K-2)} + B_k N^{1-2/K} lambda^{-1/(2K-2)}, K = 2^{k-1}
Ival kth_derivative_bound(const DerivTestParams& p, const DerivTestConstants& c,
                          mpfr_prec_t prec);

// Weyl differencing check: (S_f(a,N))^2 <= (N-1+q)(N/q + (2/q) sum ...),
// both sides by brute force. Always true; returns the verdict.
bool a_process_check(const PhaseFunction& f, long a, long N, long q, long cap = 10'000'000);

// sum_{r=1}^{q} (1 - r/q) r^s <= q^{1+s}/((1+s)(2+s)) for -1 < s <= 1
Ival weighted_power_sum_bound(long q, const Ival& s, mpfr_prec_t prec);
Ival weighted_power_sum_exact(long q, const Ival& s, mpfr_prec_t prec);  // the literal sum

// Derivative envelope of the zeta-log phase on (a, a+N]: lambda_k and the
// ratio h with lambda_k <= |f^(k)| <= h lambda_k (monotone in x).
struct DerivEnvelope {
    Ival lambda_k;
    Ival h;
};
DerivEnvelope zeta_log_envelope(double t, int k, long a, long N, mpfr_prec_t prec);

// Seeded random admissible instances for the oracle-dominance sweep:
// k in [3,8], t in [1e3,1e9], lambda_k inside [N^{-2+2/K}, N^{-1+1/K}], h <= 3.
struct ExpsumInstance {
    int k;
    double t;
    long a;
    long N;
};
std::vector<ExpsumInstance> sample_instances(int count, std::uint64_t seed, long n_cap);

struct SweepResult {
    int samples = 0;
    int violations = 0;
    double worst_margin = 0;  // min over samples of bound - |S|
    std::vector<ExpsumInstance> violating;
};
SweepResult oracle_dominance_sweep(int count, std::uint64_t seed, long n_cap, mpfr_prec_t prec);

}  // namespace vdc::expsum
