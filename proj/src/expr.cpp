#include "mink/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <utility>

namespace mink {

using Op = ExprAst::Op;

ExprPtr make_constant(double v) {
    auto n = std::make_shared<ExprAst>();
    n->op = Op::Constant;
    n->value = v;
    return n;
}

ExprPtr make_variable() {
    auto n = std::make_shared<ExprAst>();
    n->op = Op::Variable;
    return n;
}

ExprPtr make_unary(Op op, ExprPtr a) {
    auto n = std::make_shared<ExprAst>();
    n->op = op;
    n->a = std::move(a);
    return n;
}

ExprPtr make_binary(Op op, ExprPtr a, ExprPtr b) {
    auto n = std::make_shared<ExprAst>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

bool depends_on_variable(const ExprAst& ast) {
    switch (ast.op) {
        case Op::Variable: return true;
        case Op::Constant: return false;
        default:
            return (ast.a && depends_on_variable(*ast.a)) ||
                   (ast.b && depends_on_variable(*ast.b));
    }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr run() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError(pos_, "empty expression");
        ExprPtr e = expr();
        skip_ws();
        if (pos_ < src_.size()) throw ParseError(pos_, "trailing input after expression");
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(pos_, std::string("expected ") + what);
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (accept('+'))
                e = make_binary(Op::Add, e, term());
            else if (accept('-'))
                e = make_binary(Op::Sub, e, term());
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = unary();
        for (;;) {
            if (accept('*'))
                e = make_binary(Op::Mul, e, unary());
            else if (accept('/'))
                e = make_binary(Op::Div, e, unary());
            else
                return e;
        }
    }

    ExprPtr unary() {
        if (accept('-')) return make_unary(Op::Neg, unary());
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (accept('^')) {
            skip_ws();
            const std::size_t exp_pos = pos_;
            ExprPtr exponent = unary();  // right-associative
            if (depends_on_variable(*exponent))
                throw ParseError(exp_pos, "exponent must be constant");
            return make_binary(Op::Pow, base, exponent);
        }
        return base;
    }

    ExprPtr atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError(pos_, "expected expression");
        const char c = src_[pos_];

        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();

        if (std::isalpha(static_cast<unsigned char>(c))) return name();

        if (accept('(')) {
            ExprPtr e = expr();
            expect(')', "')'");
            return e;
        }
        throw ParseError(pos_, "unexpected character");
    }

    ExprPtr number() {
        char* end = nullptr;
        // strtod needs NUL-terminated input; string_view callers may pass
        // substrings, so copy the candidate token region first.
        std::string buf(src_.substr(pos_, std::min<std::size_t>(64, src_.size() - pos_)));
        const double v = std::strtod(buf.c_str(), &end);
        if (end == buf.c_str()) throw ParseError(pos_, "malformed number");
        pos_ += static_cast<std::size_t>(end - buf.c_str());
        return make_constant(v);
    }

    ExprPtr name() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               std::isalnum(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        const std::string_view word = src_.substr(start, pos_ - start);

        if (word == "t") return make_variable();
        if (word == "pi") return make_constant(M_PI);
        if (word == "e") return make_constant(M_E);

        static const std::map<std::string_view, Op> functions = {
            {"sin", Op::Sin},   {"cos", Op::Cos},  {"sinh", Op::Sinh},
            {"cosh", Op::Cosh}, {"exp", Op::Exp},  {"log", Op::Log},
            {"sqrt", Op::Sqrt},
        };
        const auto it = functions.find(word);
        if (it == functions.end()) throw ParseError(start, "unknown identifier");

        skip_ws();
        if (!accept('(')) throw ParseError(pos_, "expected '(' after function name");
        ExprPtr arg = expr();
        expect(')', "')'");
        return make_unary(it->second, arg);
    }
};

}  // namespace

ExprPtr parse_expression(std::string_view src) { return Parser(src).run(); }

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

double eval(const ExprAst& ast, double t) {
    switch (ast.op) {
        case Op::Constant: return ast.value;
        case Op::Variable: return t;
        case Op::Neg: return -eval(*ast.a, t);
        case Op::Sin: return std::sin(eval(*ast.a, t));
        case Op::Cos: return std::cos(eval(*ast.a, t));
        case Op::Sinh: return std::sinh(eval(*ast.a, t));
        case Op::Cosh: return std::cosh(eval(*ast.a, t));
        case Op::Exp: return std::exp(eval(*ast.a, t));
        case Op::Log: {
            const double v = eval(*ast.a, t);
            if (v <= 0.0) throw DomainError("log of non-positive value");
            return std::log(v);
        }
        case Op::Sqrt: {
            const double v = eval(*ast.a, t);
            if (v < 0.0) throw DomainError("sqrt of negative value");
            return std::sqrt(v);
        }
        case Op::Add: return eval(*ast.a, t) + eval(*ast.b, t);
        case Op::Sub: return eval(*ast.a, t) - eval(*ast.b, t);
        case Op::Mul: return eval(*ast.a, t) * eval(*ast.b, t);
        case Op::Div: {
            const double d = eval(*ast.b, t);
            if (d == 0.0) throw DomainError("division by zero");
            return eval(*ast.a, t) / d;
        }
        case Op::Pow: {
            const double base = eval(*ast.a, t);
            const double exponent = eval(*ast.b, t);
            if (base == 0.0 && exponent < 0.0)
                throw DomainError("zero base with negative exponent");
            const double r = std::pow(base, exponent);
            if (!std::isfinite(r))
                throw DomainError("power with invalid base/exponent combination");
            return r;
        }
    }
    throw DomainError("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Differentiation
// ---------------------------------------------------------------------------

ExprPtr differentiate(const ExprPtr& ast) {
    const ExprAst& n = *ast;
    switch (n.op) {
        case Op::Constant: return make_constant(0.0);
        case Op::Variable: return make_constant(1.0);
        case Op::Neg: return make_unary(Op::Neg, differentiate(n.a));
        case Op::Sin:
            return make_binary(Op::Mul, make_unary(Op::Cos, n.a), differentiate(n.a));
        case Op::Cos:
            return make_binary(Op::Mul,
                               make_unary(Op::Neg, make_unary(Op::Sin, n.a)),
                               differentiate(n.a));
        case Op::Sinh:
            return make_binary(Op::Mul, make_unary(Op::Cosh, n.a), differentiate(n.a));
        case Op::Cosh:
            return make_binary(Op::Mul, make_unary(Op::Sinh, n.a), differentiate(n.a));
        case Op::Exp:
            return make_binary(Op::Mul, make_unary(Op::Exp, n.a), differentiate(n.a));
        case Op::Log: return make_binary(Op::Div, differentiate(n.a), n.a);
        case Op::Sqrt:
            return make_binary(
                Op::Div, differentiate(n.a),
                make_binary(Op::Mul, make_constant(2.0), make_unary(Op::Sqrt, n.a)));
        case Op::Add: return make_binary(Op::Add, differentiate(n.a), differentiate(n.b));
        case Op::Sub: return make_binary(Op::Sub, differentiate(n.a), differentiate(n.b));
        case Op::Mul:
            return make_binary(Op::Add,
                               make_binary(Op::Mul, differentiate(n.a), n.b),
                               make_binary(Op::Mul, n.a, differentiate(n.b)));
        case Op::Div:
            // (a'b - ab') / b^2
            return make_binary(
                Op::Div,
                make_binary(Op::Sub, make_binary(Op::Mul, differentiate(n.a), n.b),
                            make_binary(Op::Mul, n.a, differentiate(n.b))),
                make_binary(Op::Mul, n.b, n.b));
        case Op::Pow: {
            // exponent is constant by the grammar: d(a^c) = c * a^(c-1) * a'
            const double c = eval(*n.b, 0.0);
            if (c == 0.0) return make_constant(0.0);
            if (c == 1.0) return differentiate(n.a);
            ExprPtr reduced =
                (c == 2.0) ? n.a
                           : make_binary(Op::Pow, n.a, make_constant(c - 1.0));
            return make_binary(Op::Mul, make_constant(c),
                               make_binary(Op::Mul, reduced, differentiate(n.a)));
        }
    }
    throw DomainError("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Simplification
// ---------------------------------------------------------------------------

namespace {

bool is_const(const ExprPtr& e, double v) {
    return e->op == Op::Constant && e->value == v;
}

}  // namespace

ExprPtr simplify(const ExprPtr& ast) {
    const ExprAst& n = *ast;
    if (n.op == Op::Constant || n.op == Op::Variable) return ast;

    ExprPtr a = n.a ? simplify(n.a) : nullptr;
    ExprPtr b = n.b ? simplify(n.b) : nullptr;

    ExprPtr out = b ? make_binary(n.op, a, b)
                    : make_unary(n.op, a);

    // constant folding; keep the node if evaluation fails or overflows
    const bool foldable = !(a && depends_on_variable(*a)) &&
                          !(b && depends_on_variable(*b));
    if (foldable) {
        try {
            const double v = eval(*out, 0.0);
            if (std::isfinite(v)) return make_constant(v);
        } catch (const DomainError&) {
        }
    }

    switch (n.op) {
        case Op::Neg:
            if (a->op == Op::Neg) return a->a;
            break;
        case Op::Add:
            if (is_const(a, 0.0)) return b;
            if (is_const(b, 0.0)) return a;
            break;
        case Op::Sub:
            if (is_const(b, 0.0)) return a;
            if (is_const(a, 0.0)) return make_unary(Op::Neg, b);
            break;
        case Op::Mul:
            if (is_const(a, 0.0) || is_const(b, 0.0)) return make_constant(0.0);
            if (is_const(a, 1.0)) return b;
            if (is_const(b, 1.0)) return a;
            break;
        case Op::Div:
            if (is_const(b, 1.0)) return a;
            break;
        case Op::Pow:
            if (is_const(b, 1.0)) return a;
            if (is_const(b, 0.0)) return make_constant(1.0);
            break;
        default:
            break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

std::string print_const(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string to_string(const ExprAst& n) {
    switch (n.op) {
        case Op::Constant:
            return n.value < 0.0 ? "(" + print_const(n.value) + ")" : print_const(n.value);
        case Op::Variable: return "t";
        case Op::Neg: return "(-" + to_string(*n.a) + ")";
        case Op::Sin: return "sin(" + to_string(*n.a) + ")";
        case Op::Cos: return "cos(" + to_string(*n.a) + ")";
        case Op::Sinh: return "sinh(" + to_string(*n.a) + ")";
        case Op::Cosh: return "cosh(" + to_string(*n.a) + ")";
        case Op::Exp: return "exp(" + to_string(*n.a) + ")";
        case Op::Log: return "log(" + to_string(*n.a) + ")";
        case Op::Sqrt: return "sqrt(" + to_string(*n.a) + ")";
        case Op::Add: return "(" + to_string(*n.a) + " + " + to_string(*n.b) + ")";
        case Op::Sub: return "(" + to_string(*n.a) + " - " + to_string(*n.b) + ")";
        case Op::Mul: return "(" + to_string(*n.a) + " * " + to_string(*n.b) + ")";
        case Op::Div: return "(" + to_string(*n.a) + " / " + to_string(*n.b) + ")";
        case Op::Pow: return "(" + to_string(*n.a) + " ^ " + to_string(*n.b) + ")";
    }
    return "?";
}

}  // namespace mink
