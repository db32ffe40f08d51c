// vdcz: certificate suites for explicit van der Corput derivative tests,
// zeta line bounds and the derived zero-free region, with brute-force
// oracle sweeps and region comparisons.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "vdc/expsum.hpp"
#include "vdc/run.hpp"
#include "vdc/suites.hpp"

namespace {

using namespace vdc;

int emit(const Certificate& cert, const RunConfig& cfg, const std::string& json_path) {
    print_certificate(cert);
    if (!json_path.empty()) {
        write_text_file(json_path, report_to_json(cert.suite, cfg, cert.items));
    }
    int fails = 0;
    for (const auto& it : cert.items)
        if (!it.pass) ++fails;
    std::printf("%s: %zu items, %d failed\n", cert.suite.c_str(), cert.items.size(), fails);
    return fails == 0 ? 0 : 1;
}

void print_ab_table(mpfr_prec_t prec) {
    std::printf("   k          A_k(4.7399, 3)          B_k(4.7399)\n");
    Ival eta3 = Ival::from_str("4.7399", prec);
    Ival h = Ival::from_long(3, prec);
    for (int k = 3; k <= 20; ++k) {
        auto c = expsum::kth_derivative_constants(k, eta3, h, prec);
        std::printf("  %2d  %.18f  %.18f\n", k, c.A.hi_d(), c.B.hi_d());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified van der Corput / zeta / zero-free-region toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path, json_path, csv_path;
    app.add_option("--config", config_path, "key = value config file");
    app.add_option("--precision", cfg.precision_bits, "working precision bits");
    app.add_option("--confirm-precision", cfg.confirm_bits,
                   "revalidation precision bits (0 disables)");
    app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
    app.add_option("--oracle-cap", cfg.oracle_cap, "brute-force summation cap");
    app.add_option("--json", json_path, "write the report as JSON");
    app.add_option("--csv", csv_path, "write the region width table as CSV");
    app.add_option("--table2", cfg.table2_path, "gamma-certificate row file");
    app.add_option("--regions", cfg.region_catalog_path, "region catalog file");

    auto* sc_constants = app.add_subcommand("constants", "A_k/B_k, smoothing, c(R)");
    auto* sc_table2 = app.add_subcommand("table2", "gamma certificates and uniform branch");
    auto* sc_expsum = app.add_subcommand("expsum-check", "oracle dominance sweep");
    int samples = 500;
    sc_expsum->add_option("--samples", samples, "number of admissible instances");
    auto* sc_zfr = app.add_subcommand("zfr", "zero-free-region constant chains");
    std::string branch = "all";
    sc_zfr->add_option("--branch", branch, "large-t | small-t | all")
        ->check(CLI::IsMember({"large-t", "small-t", "all"}));
    auto* sc_regions = app.add_subcommand("regions", "region widths, crossings, CSV");
    double logt_min = 10, logt_max = 1000;
    int points = 64;
    sc_regions->add_option("--logt-min", logt_min, "grid start (log t)");
    sc_regions->add_option("--logt-max", logt_max, "grid end (log t)");
    sc_regions->add_option("--points", points, "grid intervals");
    auto* sc_all = app.add_subcommand("all", "every suite in order");
    int all_samples = 60;
    sc_all->add_option("--samples", all_samples, "sweep size inside the combined run");

    for (auto* sc : {sc_constants, sc_table2, sc_expsum, sc_zfr, sc_regions, sc_all}) {
        sc->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : 2;
    }

    try {
        if (!config_path.empty()) {
            RunConfig file_cfg = load_config(config_path);
            // command line wins where both are given; start from the file
            file_cfg.precision_bits = cfg.precision_bits != 256 ? cfg.precision_bits
                                                                : file_cfg.precision_bits;
            file_cfg.confirm_bits =
                cfg.confirm_bits != 512 ? cfg.confirm_bits : file_cfg.confirm_bits;
            if (cfg.seed != 42) file_cfg.seed = cfg.seed;
            if (cfg.oracle_cap != 10'000'000) file_cfg.oracle_cap = cfg.oracle_cap;
            if (!cfg.table2_path.empty()) file_cfg.table2_path = cfg.table2_path;
            if (!cfg.region_catalog_path.empty()) {
                file_cfg.region_catalog_path = cfg.region_catalog_path;
            }
            cfg = file_cfg;
        }
        if (cfg.confirm_bits != 0 && cfg.confirm_bits < cfg.precision_bits) {
            std::fprintf(stderr, "confirm precision below working precision\n");
            return 2;
        }
        RunConfig confirmed = cfg;
        if (confirmed.confirm_bits == 0) confirmed.confirm_bits = confirmed.precision_bits;

        if (*sc_constants) {
            print_ab_table(cfg.precision_bits);
            Certificate cert = run_confirmed(
                [&](mpfr_prec_t p) { return suites::constants_suite(p); }, confirmed);
            return emit(cert, cfg, json_path);
        }
        if (*sc_table2) {
            auto rows = cfg.table2_path.empty() ? zeta::builtin_table2()
                                                : zeta::load_table2(cfg.table2_path);
            Certificate cert = run_confirmed(
                [&](mpfr_prec_t p) { return suites::table2_suite(rows, 60, p); }, confirmed);
            return emit(cert, cfg, json_path);
        }
        if (*sc_expsum) {
            Certificate cert = suites::expsum_suite(samples, cfg.seed, cfg.oracle_cap,
                                                    cfg.precision_bits);
            return emit(cert, cfg, json_path);
        }
        if (*sc_zfr) {
            Certificate cert = run_confirmed(
                [&](mpfr_prec_t p) { return suites::zfr_suite(branch, p); }, confirmed);
            return emit(cert, cfg, json_path);
        }
        if (*sc_regions) {
            auto catalog = cfg.region_catalog_path.empty()
                               ? zfr::builtin_regions()
                               : zfr::load_region_catalog(cfg.region_catalog_path);
            auto out = suites::regions_suite(catalog, logt_min, logt_max, points,
                                             cfg.precision_bits);
            if (!csv_path.empty()) write_text_file(csv_path, out.csv);
            return emit(out.cert, cfg, json_path);
        }
        if (*sc_all) {
            Certificate cert;
            cert.suite = "all";
            cert.extend(run_confirmed(
                [&](mpfr_prec_t p) { return suites::constants_suite(p); }, confirmed));
            auto rows = cfg.table2_path.empty() ? zeta::builtin_table2()
                                                : zeta::load_table2(cfg.table2_path);
            cert.extend(run_confirmed(
                [&](mpfr_prec_t p) { return suites::table2_suite(rows, 60, p); }, confirmed));
            cert.extend(suites::expsum_suite(all_samples, cfg.seed, cfg.oracle_cap,
                                             cfg.precision_bits));
            cert.extend(run_confirmed(
                [&](mpfr_prec_t p) { return suites::zfr_suite("all", p); }, confirmed));
            auto catalog = cfg.region_catalog_path.empty()
                               ? zfr::builtin_regions()
                               : zfr::load_region_catalog(cfg.region_catalog_path);
            auto regions = suites::regions_suite(catalog, 10, 1000, 64, cfg.precision_bits);
            cert.extend(regions.cert);
            if (!csv_path.empty()) write_text_file(csv_path, regions.csv);
            return emit(cert, cfg, json_path);
        }
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
