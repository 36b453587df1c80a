#ifndef QMECH_EXPR_HPP
#define QMECH_EXPR_HPP

// Expression grammar for quantum-plane polynomials:
//
//   expr     := term (('+' | '-') term)*
//   term     := factor (('*' | '/') factor)*
//   factor   := '-' factor | power
//   power    := atom ('^' exponent)?
//   exponent := INT | '(' ['-'] INT ['/' INT] ')'
//   atom     := INT | IDENT | '(' expr ')'
//
// Reserved identifiers: x, p (generators), q (deformation), i (imaginary
// unit).  Every other identifier is a commuting parameter and must appear in
// the declared set unless auto-declaration is on.  Half-integer exponents
// (denominator 2) are only meaningful on q; division and negative powers
// need a scalar (generator-free, nonzero) operand.

#include <memory>
#include <set>
#include <string>

#include "qmech/qpoly.hpp"

namespace qmech {

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct ExprNode {
    enum class Kind {
        Integer,
        SymbolQ,
        SymbolI,
        GenX,
        GenP,
        Param,
        Add,
        Sub,
        Mul,
        Div,
        Neg,
        Pow,
    };

    Kind kind;
    int line = 1;
    int col = 1;

    BigInt value;      // Integer
    std::string name;  // Param

    ExprPtr lhs;  // binary left / Neg and Pow operand
    ExprPtr rhs;  // binary right

    long exp_num = 0;  // Pow exponent numerator
    long exp_den = 1;  // Pow exponent denominator (1 or 2)
};

struct ParseOptions {
    std::set<std::string> parameters;
    // When set, unknown identifiers become parameters instead of errors.
    bool auto_declare_parameters = false;
};

// Throws ParseError with 1-based line/column on any lexical or syntax fault,
// including undeclared identifiers.
ExprPtr parse_expression(const std::string& text, const ParseOptions& options);

// Structural equality, ignoring source positions.
bool ast_equal(const ExprNode& a, const ExprNode& b);

// Fully parenthesized rendering; parse_expression(ast_to_text(e)) recovers a
// structurally equal tree.
std::string ast_to_text(const ExprNode& node);

// Evaluates the tree in the quantum-plane algebra.  Throws ParseError (with
// the offending node's position) when division or a negative/half-integer
// power is applied to something that is not an invertible scalar.
QPoly lower_to_qpoly(const ExprNode& node);

// parse + lower in one step.
QPoly parse_qpoly(const std::string& text, const ParseOptions& options);

// Like parse_qpoly but requires a generator-free result.
ScalarExpr parse_scalar(const std::string& text, const ParseOptions& options);

}  // namespace qmech

#endif
