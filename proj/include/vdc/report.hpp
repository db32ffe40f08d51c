#pragma once

#include <string>
#include <vector>

#include "vdc/interval.hpp"

namespace vdc {

// One certified comparison: a named quantity, its enclosure, and the target
// it is held against. Comparisons are conservative: "<= target" passes only
// when computed.hi <= target rounded down, ">= target" only when
// computed.lo >= target rounded up.
struct CertItem {
    std::string name;
    std::string relation;    // "<=", ">=", "<", ">", "contains", "true"
    std::string target_str;  // decimal target as printed in the source material
    double computed_lo = 0;
    double computed_hi = 0;
    std::string computed_lo_str;
    std::string computed_hi_str;
    bool pass = false;
    std::string note;
};

struct Certificate {
    std::string suite;
    std::vector<CertItem> items;

    bool pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    void add(CertItem it) { items.push_back(std::move(it)); }
    void extend(const Certificate& o) {
        items.insert(items.end(), o.items.begin(), o.items.end());
    }
    const CertItem* find(const std::string& name) const {
        for (const auto& it : items)
            if (it.name == name) return &it;
        return nullptr;
    }
};

// comparison against an already-built target enclosure, with a free-form label
CertItem item_cmp(const std::string& name, const std::string& relation, const Ival& computed,
                  const Ival& target, const std::string& target_display);

CertItem item_le(const std::string& name, const Ival& computed, const std::string& target);
CertItem item_lt(const std::string& name, const Ival& computed, const std::string& target);
CertItem item_ge(const std::string& name, const Ival& computed, const std::string& target);
CertItem item_gt(const std::string& name, const Ival& computed, const std::string& target);
// enclosure agrees with the printed decimal to its last printed digit
CertItem item_contains(const std::string& name, const Ival& computed, const std::string& target,
                       const std::string& slack = "1e-9");
CertItem item_bool(const std::string& name, bool ok, const std::string& what);

}  // namespace vdc
