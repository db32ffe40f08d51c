#pragma once

#include <stdexcept>
#include <string>

namespace vdc {

// Error taxonomy shared by every module. All carry a human-readable message
// naming the offending quantity or subexpression.

struct DomainViolation : std::runtime_error {
    explicit DomainViolation(const std::string& what) : std::runtime_error(what) {}
};

struct BracketError : std::runtime_error {
    explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

struct TailError : std::runtime_error {
    explicit TailError(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct CertificateFailure : std::runtime_error {
    explicit CertificateFailure(const std::string& what) : std::runtime_error(what) {}
};

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vdc
