#include "doctest.h"
#include "helpers.hpp"

using namespace ecft;

namespace {

TriPoly random_homogeneous(Rng& rng, const FieldSpec& k, int deg) {
    TriPoly out(k);
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j)
            out = out + TriPoly::monomial(k, rng.element(k), i, j, deg - i - j);
    return out;
}

TriPoly weier(const WeierstrassCurve& c) {
    return TriPoly::weierstrass(c.field(), c.a1(), c.a2(), c.a3(), c.a4(), c.a6());
}

}  // namespace

TEST_CASE("tripoly basics") {
    FieldSpec k = fp(5);
    TriPoly w = weier(e5());
    CHECK(w.is_homogeneous());
    CHECK(w.total_degree() == 3);
    CHECK(w.eval({FieldElement(k, 0), FieldElement(k, 1), FieldElement(k, 0)}).is_zero());
    TriPoly mixed = TriPoly::variable(k, 0) + w;
    CHECK_FALSE(mixed.is_homogeneous());
    CHECK(TriPoly(k).is_zero());
    CHECK(TriPoly(k).total_degree() == -1);
    // d/dY (Y^2 Z) = 2 Y Z.
    TriPoly y2z = TriPoly::monomial(k, FieldElement::one(k), 0, 2, 1);
    CHECK(y2z.derivative(1) == TriPoly::monomial(k, FieldElement(k, 2), 0, 1, 1));
}

TEST_CASE("homogeneous fraction validation") {
    FieldSpec k = fp(5);
    TriPoly x = TriPoly::variable(k, 0), z = TriPoly::variable(k, 2);
    CHECK_NOTHROW(HomogeneousFraction(z, x));
    CHECK_THROWS_AS(HomogeneousFraction(x + x * x, z * z), std::invalid_argument);
    CHECK_THROWS_AS(HomogeneousFraction(x * x, z), std::invalid_argument);  // degrees differ
    CHECK_THROWS_AS(HomogeneousFraction(x, TriPoly(k)), std::domain_error);
    HomogeneousFraction zx(z, x);
    CHECK_THROWS_AS(zx.eval(ProjectivePoint::infinity(k)), std::domain_error);
}

TEST_CASE("curve relation reduction") {
    WeierstrassCurve c = e5();
    FieldSpec k = fp(5);
    Poly x = Poly::x(k), one = Poly::constant(k, 1), zero(k);
    Poly s = x * x * x + x + one;  // x^3 + x + 1
    // y^2 -> s
    CurveFunction y2 = CurveFunction::from_xy_polynomial(c, {zero, zero, one});
    CHECK(y2 == CurveFunction(c, s, zero, one));
    // y^3 -> s y
    CurveFunction y3 = CurveFunction::from_xy_polynomial(c, {zero, zero, zero, one});
    CHECK(y3 == CurveFunction(c, zero, s, one));
    // x y + 3 is already canonical
    CurveFunction f = CurveFunction::from_xy_polynomial(c, {Poly::constant(k, 3), x});
    CHECK(f == CurveFunction(c, Poly::constant(k, 3), x, one));
    // Same reductions through arithmetic.
    CurveFunction y = CurveFunction::coordinate_y(c);
    CHECK(y * y == y2);
    CHECK(y * y * y == y3);
}

TEST_CASE("canonical form invariants") {
    WeierstrassCurve c = e5();
    FieldSpec k = fp(5);
    Poly x = Poly::x(k);
    // Common factors cancel and the denominator becomes monic.
    CurveFunction f(c, x * x * Poly::constant(k, 2), Poly(k), x * Poly::constant(k, 2));
    CHECK(f == CurveFunction::coordinate_x(c));
    CHECK(f.d().leading().is_one());
    CHECK(CurveFunction::zero(c).d() == Poly::constant(k, 1));
    CHECK_THROWS_AS(CurveFunction(c, x, x, Poly(k)), std::domain_error);
}

TEST_CASE("inverse by the conjugate trick") {
    WeierstrassCurve c = e5();
    FieldSpec k = fp(5);
    Poly x = Poly::x(k), one = Poly::constant(k, 1), zero(k);
    Poly s = x * x * x + x + one;
    CurveFunction y = CurveFunction::coordinate_y(c);
    CurveFunction xf = CurveFunction::coordinate_x(c);
    // 1/y = y/s since a1 = a3 = 0 here.
    CHECK(y.inv() == CurveFunction(c, zero, one, s));
    CHECK(y * y.inv() == CurveFunction::one(c));
    CHECK(xf.inv() * xf == CurveFunction::one(c));
    CHECK_THROWS_AS(CurveFunction::zero(c).inv(), std::domain_error);
    // On a curve with a1, a3 nonzero the norm route still inverts exactly.
    WeierstrassCurve c11 = e11();
    CurveFunction g = CurveFunction::coordinate_y(c11) + CurveFunction::coordinate_x(c11);
    CHECK(g * g.inv() == CurveFunction::one(c11));
}

TEST_CASE("ff_eq") {
    WeierstrassCurve c = e5();
    CurveFunction y = CurveFunction::coordinate_y(c), x = CurveFunction::coordinate_x(c);
    CurveFunction s = x * x * x + x + CurveFunction::one(c);
    CHECK(y * y == s);
    CHECK(x != y);
    CHECK(x == x);
}

TEST_CASE("from_homogeneous") {
    WeierstrassCurve c = e5();
    FieldSpec k = fp(5);
    TriPoly X = TriPoly::variable(k, 0), Y = TriPoly::variable(k, 1), Z = TriPoly::variable(k, 2);
    Poly xp = Poly::x(k), one = Poly::constant(k, 1), zero(k);
    Poly s = xp * xp * xp + xp + one;
    // Z/X = 1/x.
    CHECK(from_homogeneous(c, HomogeneousFraction(Z, X)) == CurveFunction(c, one, zero, xp));
    // X/Y = x y / s.
    CHECK(from_homogeneous(c, HomogeneousFraction(X, Y)) == CurveFunction(c, zero, xp, s));
    // (X/Y)(Y/X) = 1.
    CHECK(from_homogeneous(c, HomogeneousFraction(X, Y)) *
              from_homogeneous(c, HomogeneousFraction(Y, X)) ==
          CurveFunction::one(c));
    // W/Z^3 is the zero function; W in a denominator is rejected.
    TriPoly w = weier(c);
    CHECK(from_homogeneous(c, HomogeneousFraction(w, Z * Z * Z)).is_zero());
    CHECK_THROWS_AS(from_homogeneous(c, HomogeneousFraction(Z * Z * Z, w)), std::domain_error);
}

TEST_CASE("nonvanishing representative of Z/X at the origin") {
    // Z(Y^2 + a3 YZ - a6 Z^2) = X(-a1 YZ + X^2 + a2 XZ + a4 Z^2) on the
    // curve, so Z/X has a representative whose denominator is 1 at the
    // origin; it evaluates to 0 there.
    for (const WeierstrassCurve& c : {e5(), e11()}) {
        const FieldSpec& k = c.field();
        TriPoly X = TriPoly::variable(k, 0), Y = TriPoly::variable(k, 1),
                Z = TriPoly::variable(k, 2);
        TriPoly num = Y * Z * (-c.a1()) + X * X + X * Z * c.a2() + Z * Z * c.a4();
        TriPoly den = Y * Y + Y * Z * c.a3() + Z * Z * (-c.a6());
        HomogeneousFraction rep(num, den);
        CHECK(from_homogeneous(c, rep) == from_homogeneous(c, HomogeneousFraction(Z, X)));
        CHECK(rep.eval(c.origin()).is_zero());
        CHECK(den.eval(c.origin().coords()).is_one());
    }
}

TEST_CASE("ff_eq matches the divisibility criterion") {
    WeierstrassCurve c = e101();
    const FieldSpec& k = c.field();
    TriPoly w = weier(c);
    Rng rng(606);
    int equivalent_seen = 0;
    for (int round = 0; round < 25; ++round) {
        int dp = static_cast<int>(rng.integer(1, 2));
        TriPoly p = random_homogeneous(rng, k, dp);
        TriPoly q = random_homogeneous(rng, k, dp);
        if (p.is_zero() || q.is_zero()) continue;
        // Equivalent pair p' = p h + W m, q' = q h.
        int dh = static_cast<int>(rng.integer(3, 4));
        TriPoly h = random_homogeneous(rng, k, dh);
        TriPoly m = random_homogeneous(rng, k, dp + dh - 3);
        if (h.is_zero()) continue;
        TriPoly p2 = p * h + w * m, q2 = q * h;
        CurveFunction qf = CurveFunction::from_xy_polynomial(c, q.dehomogenize_xy());
        CurveFunction q2f = CurveFunction::from_xy_polynomial(c, q2.dehomogenize_xy());
        if (qf.is_zero() || q2f.is_zero()) continue;
        ++equivalent_seen;
        CurveFunction f1 = from_homogeneous(c, HomogeneousFraction(p, q));
        CurveFunction f2 = from_homogeneous(c, HomogeneousFraction(p2, q2));
        CHECK(f1 == f2);
        // p q' - q p' dehomogenizes to the zero element of K(C).
        TriPoly crossdiff = p * q2 - q * p2;
        CHECK(CurveFunction::from_xy_polynomial(c, crossdiff.dehomogenize_xy()).is_zero());
    }
    CHECK(equivalent_seen > 10);
    // A non-equivalent pair fails both sides.
    TriPoly X = TriPoly::variable(k, 0), Y = TriPoly::variable(k, 1), Z = TriPoly::variable(k, 2);
    CurveFunction fx = from_homogeneous(c, HomogeneousFraction(X, Z));
    CurveFunction fy = from_homogeneous(c, HomogeneousFraction(Y, Z));
    CHECK(fx != fy);
    TriPoly crossdiff = X * Z - Z * Y;
    CHECK_FALSE(CurveFunction::from_xy_polynomial(c, crossdiff.dehomogenize_xy()).is_zero());
}

TEST_CASE("from_homogeneous respects multiplication") {
    WeierstrassCurve c = e101();
    const FieldSpec& k = c.field();
    Rng rng(707);
    for (int round = 0; round < 20; ++round) {
        int d1 = static_cast<int>(rng.integer(1, 2)), d2 = static_cast<int>(rng.integer(1, 2));
        TriPoly f1 = random_homogeneous(rng, k, d1), g1 = random_homogeneous(rng, k, d1);
        TriPoly f2 = random_homogeneous(rng, k, d2), g2 = random_homogeneous(rng, k, d2);
        if (f1.is_zero() || g1.is_zero() || f2.is_zero() || g2.is_zero()) continue;
        CurveFunction den1 = CurveFunction::from_xy_polynomial(c, g1.dehomogenize_xy());
        CurveFunction den2 = CurveFunction::from_xy_polynomial(c, g2.dehomogenize_xy());
        if (den1.is_zero() || den2.is_zero()) continue;
        CHECK(from_homogeneous(c, HomogeneousFraction(f1, g1)) *
                  from_homogeneous(c, HomogeneousFraction(f2, g2)) ==
              from_homogeneous(c, HomogeneousFraction(f1 * f2, g1 * g2)));
    }
}

TEST_CASE("K(C) field axioms on random functions") {
    Rng rng(808);
    for (const WeierstrassCurve& c : {e101(), eq()}) {
        for (int round = 0; round < 15; ++round) {
            CurveFunction f = rng.function(c, 2);
            CurveFunction g = rng.function(c, 2);
            CurveFunction h = rng.function(c, 2);
            CHECK((f + g) + h == f + (g + h));
            CHECK((f * g) * h == f * (g * h));
            CHECK(f * (g + h) == f * g + f * h);
            CHECK(f + g == g + f);
            CHECK(f * g == g * f);
            if (!f.is_zero()) CHECK(f / f == CurveFunction::one(c));
        }
    }
}

TEST_CASE("value_at on regular points") {
    WeierstrassCurve c = e5();
    CurveFunction x = CurveFunction::coordinate_x(c);
    CHECK(value_at(x, pt(c, 2, 1)) == FieldElement(fp(5), 2));
    CurveFunction y = CurveFunction::coordinate_y(c);
    CHECK(value_at(y, pt(c, 3, 4)) == FieldElement(fp(5), 4));
    CHECK(is_defined_at(x, pt(c, 0, 1)));
}

TEST_CASE("evaluation is a ring homomorphism where defined") {
    WeierstrassCurve c = e101();
    std::vector<ProjectivePoint> pts = enumerate_points(c);
    Rng rng(909);
    for (int round = 0; round < 25; ++round) {
        CurveFunction f = rng.function(c, 2);
        CurveFunction g = rng.function(c, 2);
        ProjectivePoint p = rng.point_of(pts);
        if (!is_defined_at(f, p) || !is_defined_at(g, p)) continue;
        CHECK(value_at(f * g, p) == value_at(f, p) * value_at(g, p));
        CHECK(value_at(f + g, p) == value_at(f, p) + value_at(g, p));
    }
}

TEST_CASE("weighted degrees") {
    WeierstrassCurve c = e5();
    CurveFunction x = CurveFunction::coordinate_x(c), y = CurveFunction::coordinate_y(c);
    CHECK(x.num_weighted_degree() == 2);
    CHECK(y.num_weighted_degree() == 3);
    CHECK((x * x * y).num_weighted_degree() == 7);
    CHECK(x.den_weighted_degree() == 0);
    CHECK(x.inv().den_weighted_degree() == 2);
    CHECK(CurveFunction::zero(c).num_weighted_degree() == 0);
}

TEST_CASE("homogenize round-trips") {
    Rng rng(1010);
    for (const WeierstrassCurve& c : {e5(), e11()}) {
        for (int round = 0; round < 10; ++round) {
            CurveFunction f = rng.function(c, 2);
            if (f.is_zero()) continue;
            HomogeneousFraction hf = f.homogenize();
            CHECK(hf.num().is_homogeneous());
            CHECK(hf.den().is_homogeneous());
            CHECK(from_homogeneous(c, hf) == f);
        }
    }
}
