#include "doctest.h"
#include "ecfield/expr.hpp"
#include "ecfield/io.hpp"
#include "helpers.hpp"

using namespace ecft;

TEST_CASE("literal parsing") {
    CHECK(parse_field_spec("Fp:5") == fp(5));
    CHECK(parse_field_spec(" Q ") == rat());
    CHECK_THROWS_AS(parse_field_spec("Zp:5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field_spec("Fp:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field_spec("Fp:6"), std::domain_error);

    FieldSpec q = rat(), k = fp(5);
    CHECK(parse_field_element(q, "-3/7") == FieldElement(q, Rational(-3, 7)));
    CHECK(parse_field_element(k, "-3") == FieldElement(k, 2));
    CHECK_THROWS_AS(parse_field_element(k, "1/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field_element(q, "1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field_element(q, "2x"), std::invalid_argument);

    CHECK(parse_point(k, "O") == ProjectivePoint::infinity(k));
    CHECK(parse_point(k, "(0:1:0)") == ProjectivePoint::infinity(k));
    CHECK(parse_point(k, "(2,1)") == pt(e5(), 2, 1));
    CHECK(parse_point(k, "(4:2:2)") == pt(e5(), 2, 1));
    CHECK(parse_point(q, "(1/2,-3/4)").affine_y() == FieldElement(q, Rational(-3, 4)));
    CHECK_THROWS_AS(parse_point(k, "(1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_point(k, "(1,2,3)"), std::invalid_argument);

    WeierstrassCurve c = parse_curve(q, "0,0,0,-1/2,3");
    CHECK(c.a4() == FieldElement(q, Rational(-1, 2)));
    CHECK_THROWS_AS(parse_curve(q, "1,2,3"), std::invalid_argument);
    // Printed points re-parse equal, including fractions.
    ProjectivePoint qp = parse_point(q, "(1/2,-3/4)");
    CHECK(parse_point(q, qp.to_string()) == qp);
}

TEST_CASE("mode detection") {
    CHECK(detect_mode("Z/X") == ExprMode::Homogeneous);
    CHECK(detect_mode("(3*x^2 + 1)/(2*y)") == ExprMode::Affine);
    CHECK(detect_mode("17") == ExprMode::Affine);
    CHECK_THROWS_AS(detect_mode("X/x"), std::invalid_argument);
}

TEST_CASE("homogeneous parsing") {
    FieldSpec k = fp(5);
    ExprPtr ast = parse_expr("Z/X", ExprMode::Homogeneous);
    HomogeneousFraction f = eval_homogeneous(ast, k);
    CHECK(f.num() == TriPoly::variable(k, 2));
    CHECK(f.den() == TriPoly::variable(k, 0));
    // Inhomogeneous combinations are rejected.
    CHECK_THROWS_AS(eval_homogeneous(parse_expr("X + X*Y", ExprMode::Homogeneous), k),
                    std::invalid_argument);
    CHECK_THROWS_AS(eval_homogeneous(parse_expr("X^2/Z", ExprMode::Homogeneous), k),
                    std::invalid_argument);
    CHECK_NOTHROW(eval_homogeneous(parse_expr("(X + 2*Z)/Y", ExprMode::Homogeneous), k));
    // Affine variables are rejected in homogeneous mode and vice versa.
    CHECK_THROWS_AS(parse_expr("x", ExprMode::Homogeneous), std::invalid_argument);
    CHECK_THROWS_AS(parse_expr("X", ExprMode::Affine), std::invalid_argument);
}

TEST_CASE("affine evaluation") {
    WeierstrassCurve c = e5();
    FieldSpec k = fp(5);
    CurveFunction x = CurveFunction::coordinate_x(c), y = CurveFunction::coordinate_y(c);
    CHECK(parse_function(c, "x") == x);
    CHECK(parse_function(c, "y^2") == x * x * x + x + CurveFunction::one(c));
    CHECK(parse_function(c, "(3*x^2 + 1)/(2*y)") ==
          (x * x * FieldElement(k, 3) + CurveFunction::one(c)) / (y * FieldElement(k, 2)));
    CHECK(parse_function(c, "1/x") == x.inv());
    // Homogeneous input converts through the curve.
    CHECK(parse_function(c, "X/Y") == x / y);
    CHECK(parse_function(c, "Z/X") == x.inv());
}

TEST_CASE("precedence and associativity") {
    WeierstrassCurve c = e5();
    FieldSpec k = fp(5);
    // ^ binds tighter than unary minus: -x^2 = -(x^2).
    CurveFunction x = CurveFunction::coordinate_x(c);
    CHECK(parse_function(c, "-x^2") == -(x * x));
    // Left associativity: 2^3^2 = (2^3)^2 = 64.
    CHECK(parse_function(c, "2^3^2") == CurveFunction::constant(c, FieldElement(k, 64)));
    CHECK(parse_function(c, "1 - 2 - 3") == CurveFunction::constant(c, FieldElement(k, -4)));
    CHECK(parse_function(c, "12/2/3") == CurveFunction::constant(c, FieldElement(k, 2)));
    CHECK(parse_function(c, " x + 2 * y ") ==
          x + CurveFunction::coordinate_y(c) * FieldElement(k, 2));
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_WITH_AS(parse_expr("x +", ExprMode::Affine),
                         doctest::Contains("position 3"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_expr("(x", ExprMode::Affine), doctest::Contains("')'"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_expr("x^-2", ExprMode::Affine), std::invalid_argument);
    CHECK_THROWS_AS(parse_expr("x^y", ExprMode::Affine), std::invalid_argument);
    CHECK_THROWS_AS(parse_expr("x $ y", ExprMode::Affine), std::invalid_argument);
    CHECK_THROWS_AS(parse_expr("", ExprMode::Affine), std::invalid_argument);
}

TEST_CASE("division by zero in expressions") {
    WeierstrassCurve c = e5();
    CHECK_THROWS_AS(parse_function(c, "1/0"), std::domain_error);
    CHECK_THROWS_AS(parse_function(c, "x/(y - y)"), std::domain_error);
}

TEST_CASE("printed functions re-parse to equal values") {
    Rng rng(3030);
    for (const WeierstrassCurve& c : {e5(), e11(), eq()}) {
        for (int round = 0; round < 10; ++round) {
            CurveFunction f = rng.function(c, 2);
            CHECK(parse_function(c, f.to_string()) == f);
        }
    }
    // Homogeneous fraction printing re-parses too.
    WeierstrassCurve c = e5();
    HomogeneousFraction u(TriPoly::variable(fp(5), 0), TriPoly::variable(fp(5), 1));
    CHECK(parse_function(c, u.to_string()) ==
          CurveFunction::coordinate_x(c) / CurveFunction::coordinate_y(c));
}
