#pragma once

#include <memory>
#include <string>

#include "ecfield/function_field.hpp"

namespace ecf {

enum class ExprMode { Affine, Homogeneous };

/// Expression tree for the CLI grammar: integer literals, variables
/// (x, y affine; X, Y, Z homogeneous), + - * /, unary minus, and ^ with a
/// nonnegative integer exponent.
struct ExprAst {
    enum class Kind { Literal, Var, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind;
    Integer literal{0};
    char var = 0;
    long exponent = 0;
    std::shared_ptr<const ExprAst> lhs, rhs;
};
using ExprPtr = std::shared_ptr<const ExprAst>;

/// Recursive-descent parse with precedence ^ > unary - > * / > + -, left
/// associative, whitespace insensitive. Syntax errors carry the offending
/// position; variables outside the mode's set are rejected.
ExprPtr parse_expr(const std::string& text, ExprMode mode);

/// Homogeneous iff any of X, Y, Z occurs; mixing the two variable sets is
/// an error. Plain constants are affine.
ExprMode detect_mode(const std::string& text);

CurveFunction eval_affine(const ExprPtr& ast, const WeierstrassCurve& curve);

HomogeneousFraction eval_homogeneous(const ExprPtr& ast, const FieldSpec& spec);

/// Detect mode, parse and evaluate; homogeneous input lands in K(C)
/// through from_homogeneous.
CurveFunction parse_function(const WeierstrassCurve& curve, const std::string& text);

}  // namespace ecf
