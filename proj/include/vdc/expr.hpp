#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vdc/interval.hpp"

namespace vdc {

// Small expression-tree layer so certified values can be described as text
// ("(2 + sqrt(4 + pi))/sqrt(pi)") in tests and configs. Supported functions:
// log, exp, sqrt, sin, cos, tan, cot, cosh, atan, abs, lambertw; constants
// pi, e, gamma; binary + - * / ^ and unary minus.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Num, Var, Add, Sub, Mul, Div, Pow, Neg, Call };
    Kind kind;
    std::string text;  // literal (Num), name (Var), or function name (Call)
    ExprPtr a;
    ExprPtr b;
};

ExprPtr parse_expr(const std::string& src);
std::string to_string(const ExprPtr& e);

using Env = std::map<std::string, Ival>;

// Evaluates the tree with directed rounding at the given precision. Domain
// errors (log/sqrt of a non-positive enclosure, division by an enclosure
// containing zero) are reported with the offending subexpression.
Ival interval_eval(const ExprPtr& e, const Env& env, mpfr_prec_t prec);
Ival interval_eval(const std::string& src, const Env& env, mpfr_prec_t prec);

}  // namespace vdc
