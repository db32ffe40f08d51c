#include "vdc/expr.hpp"

#include <cctype>

#include "vdc/solvers.hpp"

namespace vdc {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& src) : s(src) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    ExprPtr make(Expr::Kind k, std::string text, ExprPtr a = nullptr, ExprPtr b = nullptr) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->text = std::move(text);
        e->a = std::move(a);
        e->b = std::move(b);
        return e;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        for (;;) {
            if (eat('+')) {
                lhs = make(Expr::Kind::Add, "+", lhs, term());
            } else if (eat('-')) {
                lhs = make(Expr::Kind::Sub, "-", lhs, term());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        for (;;) {
            if (eat('*')) {
                lhs = make(Expr::Kind::Mul, "*", lhs, unary());
            } else if (eat('/')) {
                lhs = make(Expr::Kind::Div, "/", lhs, unary());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr unary() {
        if (eat('-')) return make(Expr::Kind::Neg, "-", unary());
        if (eat('+')) return unary();
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (eat('^')) {
            return make(Expr::Kind::Pow, "^", base, unary());  // right-assoc
        }
        return base;
    }

    ExprPtr primary() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            ExprPtr inner = expr();
            if (!eat(')')) throw ParseError("missing ')' in expression");
            return inner;
        }
        if (std::isdigit((unsigned char)c) || c == '.') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isdigit((unsigned char)s[pos]) || s[pos] == '.' || s[pos] == 'e' ||
                    s[pos] == 'E' ||
                    ((s[pos] == '+' || s[pos] == '-') && (s[pos - 1] == 'e' || s[pos - 1] == 'E')))) {
                ++pos;
            }
            return make(Expr::Kind::Num, s.substr(start, pos - start));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = pos;
            while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
            std::string name = s.substr(start, pos - start);
            if (eat('(')) {
                ExprPtr arg = expr();
                if (!eat(')')) throw ParseError("missing ')' after " + name + "(");
                return make(Expr::Kind::Call, name, arg);
            }
            return make(Expr::Kind::Var, name);
        }
        throw ParseError(std::string("unexpected character '") + c + "' in expression");
    }
};

}  // namespace

ExprPtr parse_expr(const std::string& src) {
    Parser p(src);
    ExprPtr e = p.expr();
    p.skip_ws();
    if (p.pos != src.size()) throw ParseError("trailing input in expression: " + src);
    return e;
}

std::string to_string(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Num:
        case Expr::Kind::Var:
            return e->text;
        case Expr::Kind::Neg:
            return "(-" + to_string(e->a) + ")";
        case Expr::Kind::Call:
            return e->text + "(" + to_string(e->a) + ")";
        default:
            return "(" + to_string(e->a) + " " + e->text + " " + to_string(e->b) + ")";
    }
}

Ival interval_eval(const ExprPtr& e, const Env& env, mpfr_prec_t prec) {
    auto fail = [&](const std::string& why) -> Ival {
        throw DomainViolation(why + " in subexpression " + to_string(e));
    };
    try {
        switch (e->kind) {
            case Expr::Kind::Num:
                return Ival::from_str(e->text, prec);
            case Expr::Kind::Var: {
                auto it = env.find(e->text);
                if (it != env.end()) return it->second + Ival::from_long(0, prec);
                if (e->text == "pi") return Ival::pi(prec);
                if (e->text == "e") return Ival::e(prec);
                if (e->text == "gamma") return Ival::euler_gamma(prec);
                throw DomainViolation("unbound name '" + e->text + "'");
            }
            case Expr::Kind::Add:
                return interval_eval(e->a, env, prec) + interval_eval(e->b, env, prec);
            case Expr::Kind::Sub:
                return interval_eval(e->a, env, prec) - interval_eval(e->b, env, prec);
            case Expr::Kind::Mul:
                return interval_eval(e->a, env, prec) * interval_eval(e->b, env, prec);
            case Expr::Kind::Div:
                return interval_eval(e->a, env, prec) / interval_eval(e->b, env, prec);
            case Expr::Kind::Neg:
                return -interval_eval(e->a, env, prec);
            case Expr::Kind::Pow: {
                Ival base = interval_eval(e->a, env, prec);
                // integer literal exponents keep their exactness (and allow
                // non-positive bases)
                if (e->b->kind == Expr::Kind::Num &&
                    e->b->text.find_first_of(".eE") == std::string::npos) {
                    return pow_si(base, std::stol(e->b->text));
                }
                return pow(base, interval_eval(e->b, env, prec));
            }
            case Expr::Kind::Call: {
                Ival a = interval_eval(e->a, env, prec);
                const std::string& f = e->text;
                if (f == "log") return log(a);
                if (f == "exp") return exp(a);
                if (f == "sqrt") return sqrt(a);
                if (f == "sin") return sin(a);
                if (f == "cos") return cos(a);
                if (f == "tan") return tan(a);
                if (f == "cot") return cot(a);
                if (f == "cosh") return cosh(a);
                if (f == "atan") return atan(a);
                if (f == "abs") return abs(a);
                if (f == "lambertw") return lambert_w0(a);
                throw DomainViolation("unknown function '" + f + "'");
            }
        }
    } catch (const DomainViolation& dv) {
        std::string msg = dv.what();
        if (msg.find("in subexpression") != std::string::npos) throw;
        return fail(msg);
    }
    throw DomainViolation("unreachable expression kind");
}

Ival interval_eval(const std::string& src, const Env& env, mpfr_prec_t prec) {
    return interval_eval(parse_expr(src), env, prec);
}

}  // namespace vdc
