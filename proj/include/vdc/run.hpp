#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "vdc/report.hpp"

namespace vdc {

struct RunConfig {
    long precision_bits = 256;
    long confirm_bits = 512;
    long oracle_cap = 10'000'000;
    std::uint64_t seed = 42;
    std::string table2_path;
    std::string region_catalog_path;
};

// Line-oriented `key = value` file; '#' starts a comment.
RunConfig load_config(const std::string& path);

// Runs a certificate builder at the working precision and again at the
// confirmation precision; a verdict that flips between the two marks the item
// failed with an "unstable" note (guards against precision-marginal passes).
Certificate run_confirmed(const std::function<Certificate(mpfr_prec_t)>& builder,
                          const RunConfig& cfg);

// Deterministic JSON: {suite, config, items: [{name, paper_target,
// computed_lo, computed_hi, verdict}]}
std::string report_to_json(const std::string& suite, const RunConfig& cfg,
                           const std::vector<CertItem>& items);

void write_text_file(const std::string& path, const std::string& content);

// human-readable table to stdout
void print_certificate(const Certificate& cert);

}  // namespace vdc
