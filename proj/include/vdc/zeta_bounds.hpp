#pragma once

#include <optional>
#include <vector>

#include "vdc/interval.hpp"
#include "vdc/report.hpp"

namespace vdc::zeta {

// The sigma_k = 1 - k/(2^k - 2) line data, k >= 4.
struct SigmaLine {
    int k = 0;
    Ival sigma;     // 1 - k/(2^k - 2)
    Ival eta;       // k/(2^k - 2)
    Ival exponent;  // 1/(2^k - 2), the t-power in the line bound
    Ival log_Tk;    // log of the small-t/large-t split height
};
SigmaLine sigma_line(int k, mpfr_prec_t prec);

Ival theta_r(int r, mpfr_prec_t prec);   // R/(rR - 2R + 2), R = 2^{r-1}
Ival log_Tk(int k, mpfr_prec_t prec);    // (2.6134(2^{k-1}-1) + 2.8876k)/(k-3)

// Euler-Maclaurin tail: (1/(h t0)^sigma)(h + 1/2 + 3 sqrt(1 + t0^-2)(1 - cot(1/2h)/(2h)))
Ival em_tail_bound(const Ival& h, const Ival& sigma, const Ival& t0, mpfr_prec_t prec);
// same with log t0 supplied (t0 itself may be astronomically large)
Ival em_tail_bound_logt(const Ival& h, const Ival& sigma, const Ival& log_t0, mpfr_prec_t prec);

// Partial-summation constants pushing the r-th derivative test through
// blocks (a, b] with b <= ha.
struct CdPair {
    Ival C;
    Ival D;
};
CdPair cd_constants(int r, const Ival& eta3, const Ival& h, mpfr_prec_t prec);

// alpha_k(h0, h1, eta3, phi, t): majorant coefficient for the initial segment
// [1, X1]. Supplied as log t to keep heights like T_60 representable.
Ival alpha_k(int k, const Ival& h0, const Ival& h1, const Ival& eta3, const Ival& phi,
             const Ival& log_t, mpfr_prec_t prec);

// beta_k(h0, h2, h3, eta3, t): sum over r = 2..k-1 of the block majorants
// F_k(r, t) for (X1, X2].
Ival beta_k(int k, const Ival& h0, const Ival& h2, const Ival& h3, const Ival& eta3,
            const Ival& log_t, mpfr_prec_t prec);
Ival beta_k_term(int k, int r, const Ival& h0, const Ival& h2, const Ival& h3, const Ival& eta3,
                 const Ival& log_t, mpfr_prec_t prec);

// One row of gamma-certificate parameters. alpha/beta targets optional (the
// gamma inequality alone is checked when absent).
struct Table2Row {
    int k;
    std::string eta3, h0, h1, h2, h3;
    std::string alpha_target;  // may be empty
    std::string beta_target;   // may be empty
    std::string gamma;
};
const std::vector<Table2Row>& builtin_table2();
std::vector<Table2Row> load_table2(const std::string& path);

// Certificate that gamma majorizes alpha + beta + G-term at t0 = T_k for one
// row (phi = 1/k by default, overridable).
Certificate gamma_certificate(const Table2Row& row, mpfr_prec_t prec,
                              const std::optional<std::string>& phi_override = {});

// The k >= 10 uniform branch: alpha(T_k) <= 0.252, beta_10(T_10) <= 0.6064,
// tail <= 0.6171, beta <= 1.2235, combined <= 1.476, final < 1.546, checked
// for 10 <= k <= k_max.
Certificate uniform_branch_certificate(int k_max, mpfr_prec_t prec);

// Phragmen-Lindelof small-t factor A(t0) and the reach t1(k) it certifies.
Ival plp_A_factor(const Ival& t0, mpfr_prec_t prec);
Ival plp_A_factor_logt(const Ival& log_t0, mpfr_prec_t prec);
Ival log_t1_of_k(int k, const Ival& A, mpfr_prec_t prec);

// Two-stage small-t chain (t0 = 3 then t0 = exp(8.7)) for k = 4..k_max, plus
// an iterated-stage diagnostic that retries the chain with honestly computed
// A factors when a stage falls short.
Certificate small_t_certificate(int k_max, mpfr_prec_t prec);

// Rigorous |zeta(sigma + it)| upper bound: interval partial sum over
// n <= floor(h t) plus the Euler-Maclaurin tail. h t must stay under cap.
Ival zeta_abs_upper(const Ival& sigma, const Ival& t, const Ival& h, mpfr_prec_t prec,
                    long cap = 100'000'000);

// 1.546 t^{1/(2^k - 2)} log t
Ival theorem1_bound(int k, const Ival& t, mpfr_prec_t prec);

// Numeric premise checks on |t| <= 3: |(s-1) zeta(s)| against the stated
// majorants on the sigma = 1/2, 5/7 and 1 lines (our construction; the
// segment is subdivided and each cell is checked with a midpoint value and a
// derivative-based Lipschitz radius).
Certificate plp_premise_certificate(mpfr_prec_t prec, int cells = 480);

}  // namespace vdc::zeta
