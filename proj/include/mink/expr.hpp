#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "mink/errors.hpp"

namespace mink {

/// Immutable expression tree over one variable `t`.
///
/// Grammar accepted by parse_expression:
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' unary)?          right-associative
///   atom   := number | 'pi' | 'e' | 't' | name '(' expr ')' | '(' expr ')'
///   name   := sin cos sinh cosh exp log sqrt
/// Numbers are decimal or scientific literals. `^` requires a constant
/// exponent (no `t` inside), which keeps differentiation total.
struct ExprAst;
using ExprPtr = std::shared_ptr<const ExprAst>;

struct ExprAst {
    enum class Op {
        Constant, Variable,
        Neg, Sin, Cos, Sinh, Cosh, Exp, Log, Sqrt,
        Add, Sub, Mul, Div, Pow,
    };

    Op op;
    double value = 0.0;  // Constant only
    ExprPtr a;           // unary operand / left operand
    ExprPtr b;           // right operand
};

ExprPtr make_constant(double v);
ExprPtr make_variable();
ExprPtr make_unary(ExprAst::Op op, ExprPtr a);
ExprPtr make_binary(ExprAst::Op op, ExprPtr a, ExprPtr b);

/// Parse source text into an AST. Throws ParseError carrying the byte
/// offset of the offending token.
ExprPtr parse_expression(std::string_view src);

/// Evaluate at t. Throws DomainError on log of a non-positive value,
/// sqrt of a negative value, division by zero, or an invalid power base.
double eval(const ExprAst& ast, double t);
inline double eval(const ExprPtr& ast, double t) { return eval(*ast, t); }

/// Exact derivative with respect to t. Total on the accepted grammar.
ExprPtr differentiate(const ExprPtr& ast);

/// Constant folding and identity elimination. Best effort; preserves
/// evaluation semantics (folds a constant subtree only when it evaluates
/// to a finite value).
ExprPtr simplify(const ExprPtr& ast);

/// Render with explicit parentheses; parse(to_string(x)) evaluates like x.
std::string to_string(const ExprAst& ast);
inline std::string to_string(const ExprPtr& ast) { return to_string(*ast); }

/// True if the tree references the variable.
bool depends_on_variable(const ExprAst& ast);

}  // namespace mink
