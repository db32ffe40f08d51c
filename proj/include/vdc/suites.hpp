#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vdc/report.hpp"
#include "vdc/zeta_bounds.hpp"
#include "vdc/zfr.hpp"

namespace vdc::suites {

// A_k/B_k table, uniform-constant verdicts, smoothing constants, c(R) values.
Certificate constants_suite(mpfr_prec_t prec);

// Table rows k = 4..9 plus the k >= 10 uniform branch.
Certificate table2_suite(const std::vector<zeta::Table2Row>& rows, int uniform_kmax,
                         mpfr_prec_t prec);

// Seeded oracle-dominance sweep.
Certificate expsum_suite(int samples, std::uint64_t seed, long n_cap, mpfr_prec_t prec);

// branch: "large-t", "small-t" or "all"
Certificate zfr_suite(const std::string& branch, mpfr_prec_t prec);

struct RegionsOutput {
    Certificate cert;
    std::string csv;
};
RegionsOutput regions_suite(const std::vector<zfr::RegionSpec>& catalog, double logt_min,
                            double logt_max, int points, mpfr_prec_t prec);

}  // namespace vdc::suites
