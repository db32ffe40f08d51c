#include "vdc/report.hpp"

namespace vdc {

namespace {

CertItem fill(const std::string& name, const std::string& rel, const Ival& computed,
              const std::string& target, bool pass) {
    CertItem it;
    it.name = name;
    it.relation = rel;
    it.target_str = target;
    it.computed_lo = computed.lo_d();
    it.computed_hi = computed.hi_d();
    it.computed_lo_str = computed.lo_str();
    it.computed_hi_str = computed.hi_str();
    it.pass = pass;
    return it;
}

}  // namespace

CertItem item_cmp(const std::string& name, const std::string& relation, const Ival& computed,
                  const Ival& target, const std::string& target_display) {
    bool pass = false;
    if (relation == "<=") {
        pass = mpfr_cmp(computed.hi(), target.lo()) <= 0;
    } else if (relation == "<") {
        pass = mpfr_cmp(computed.hi(), target.lo()) < 0;
    } else if (relation == ">=") {
        pass = mpfr_cmp(computed.lo(), target.hi()) >= 0;
    } else if (relation == ">") {
        pass = mpfr_cmp(computed.lo(), target.hi()) > 0;
    } else {
        throw UsageError("item_cmp: unknown relation " + relation);
    }
    return fill(name, relation, computed, target_display, pass);
}

CertItem item_le(const std::string& name, const Ival& computed, const std::string& target) {
    Ival t = Ival::from_str(target, computed.prec());
    bool pass = mpfr_cmp(computed.hi(), t.lo()) <= 0;
    return fill(name, "<=", computed, target, pass);
}

CertItem item_lt(const std::string& name, const Ival& computed, const std::string& target) {
    Ival t = Ival::from_str(target, computed.prec());
    bool pass = mpfr_cmp(computed.hi(), t.lo()) < 0;
    return fill(name, "<", computed, target, pass);
}

CertItem item_ge(const std::string& name, const Ival& computed, const std::string& target) {
    Ival t = Ival::from_str(target, computed.prec());
    bool pass = mpfr_cmp(computed.lo(), t.hi()) >= 0;
    return fill(name, ">=", computed, target, pass);
}

CertItem item_gt(const std::string& name, const Ival& computed, const std::string& target) {
    Ival t = Ival::from_str(target, computed.prec());
    bool pass = mpfr_cmp(computed.lo(), t.hi()) > 0;
    return fill(name, ">", computed, target, pass);
}

CertItem item_contains(const std::string& name, const Ival& computed, const std::string& target,
                       const std::string& slack) {
    Ival t = Ival::from_str(target, computed.prec());
    Ival s = Ival::from_str(slack, computed.prec());
    Ival window = Ival::hull(t - s, t + s);
    bool pass = window.contains(computed);
    return fill(name, "contains", computed, target, pass);
}

CertItem item_bool(const std::string& name, bool ok, const std::string& what) {
    CertItem it;
    it.name = name;
    it.relation = "true";
    it.target_str = what;
    it.pass = ok;
    return it;
}

}  // namespace vdc
