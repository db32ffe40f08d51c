#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "vdc/run.hpp"

namespace vdc {

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config: " + path);
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::istringstream probe(line);
            std::string any;
            if (probe >> any) {
                throw ParseError("config line " + std::to_string(lineno) +
                                 ": expected key = value");
            }
            continue;
        }
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "precision_bits") {
            cfg.precision_bits = std::stol(val);
        } else if (key == "confirm_bits") {
            cfg.confirm_bits = std::stol(val);
        } else if (key == "oracle_cap") {
            cfg.oracle_cap = std::stol(val);
        } else if (key == "seed") {
            cfg.seed = std::stoull(val);
        } else if (key == "table2_path") {
            cfg.table2_path = val;
        } else if (key == "region_catalog_path") {
            cfg.region_catalog_path = val;
        } else {
            throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" +
                             key + "'");
        }
    }
    if (cfg.confirm_bits < cfg.precision_bits) {
        throw ParseError("config: confirm_bits must be >= precision_bits");
    }
    return cfg;
}

Certificate run_confirmed(const std::function<Certificate(mpfr_prec_t)>& builder,
                          const RunConfig& cfg) {
    Certificate base = builder(cfg.precision_bits);
    if (cfg.confirm_bits > cfg.precision_bits) {
        Certificate confirm = builder(cfg.confirm_bits);
        if (confirm.items.size() != base.items.size()) {
            throw CertificateFailure("confirmation run produced a different item list");
        }
        for (size_t i = 0; i < base.items.size(); ++i) {
            if (base.items[i].pass != confirm.items[i].pass) {
                base.items[i].pass = false;
                base.items[i].note = "verdict unstable between " +
                                     std::to_string(cfg.precision_bits) + " and " +
                                     std::to_string(cfg.confirm_bits) + " bits";
            }
        }
    }
    return base;
}

std::string report_to_json(const std::string& suite, const RunConfig& cfg,
                           const std::vector<CertItem>& items) {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["config"] = {
        {"precision_bits", cfg.precision_bits},
        {"confirm_bits", cfg.confirm_bits},
        {"oracle_cap", cfg.oracle_cap},
        {"seed", cfg.seed},
    };
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& it : items) {
        nlohmann::ordered_json o;
        o["name"] = it.name;
        o["paper_target"] = it.relation + " " + it.target_str;
        o["computed_lo"] = it.computed_lo;
        o["computed_hi"] = it.computed_hi;
        o["verdict"] = it.pass ? "PASS" : "FAIL";
        if (!it.note.empty()) o["note"] = it.note;
        arr.push_back(o);
    }
    j["items"] = arr;
    return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
}

void print_certificate(const Certificate& cert) {
    std::printf("== %s ==\n", cert.suite.c_str());
    for (const auto& it : cert.items) {
        std::printf("  %-34s [%.12g, %.12g] %s %s  %s%s%s\n", it.name.c_str(), it.computed_lo,
                    it.computed_hi, it.relation.c_str(), it.target_str.c_str(),
                    it.pass ? "PASS" : "FAIL", it.note.empty() ? "" : "  # ",
                    it.note.c_str());
    }
}

}  // namespace vdc
