#include "ecfield/group.hpp"

#include <stdexcept>

namespace ecf {

namespace {

void require_on_curve(const WeierstrassCurve& curve, const ProjectivePoint& p) {
    if (!contains(curve, p))
        throw std::domain_error("point " + p.to_string() + " is not on the curve");
}

// y-coordinate of -(x,y): -(y + a1 x + a3).
FieldElement negated_y(const WeierstrassCurve& c, const FieldElement& x, const FieldElement& y) {
    return -(y + c.a1() * x + c.a3());
}

// Slope of the tangent at a non-two-torsion affine point.
FieldElement tangent_slope(const WeierstrassCurve& c, const FieldElement& x,
                           const FieldElement& y) {
    FieldElement two(c.field(), 2), three(c.field(), 3);
    FieldElement num = three * x * x + two * c.a2() * x + c.a4() - c.a1() * y;
    FieldElement den = c.a1() * x + two * y + c.a3();
    return num / den;
}

}  // namespace

ProjectivePoint negate(const WeierstrassCurve& curve, const ProjectivePoint& p) {
    require_on_curve(curve, p);
    if (p.is_infinity()) return p;
    return ProjectivePoint::affine(p.affine_x(), negated_y(curve, p.affine_x(), p.affine_y()));
}

bool is_two_torsion(const WeierstrassCurve& curve, const ProjectivePoint& p) {
    require_on_curve(curve, p);
    if (p.is_infinity()) return true;
    FieldElement two(curve.field(), 2);
    return (two * p.affine_y() + curve.a1() * p.affine_x() + curve.a3()).is_zero();
}

ProjectivePoint double_point(const WeierstrassCurve& curve, const ProjectivePoint& p) {
    require_on_curve(curve, p);
    if (p.is_infinity()) return p;
    if (is_two_torsion(curve, p)) return curve.origin();
    const FieldElement &x1 = p.affine_x(), &y1 = p.affine_y();
    FieldElement m = tangent_slope(curve, x1, y1);
    FieldElement two(curve.field(), 2);
    FieldElement x2 = -(two * x1) - curve.a2() + m * m + curve.a1() * m;
    FieldElement y2 = m * (x2 - x1) + y1;
    return ProjectivePoint::affine(x2, negated_y(curve, x2, y2));
}

ProjectivePoint add(const WeierstrassCurve& curve, const ProjectivePoint& p,
                    const ProjectivePoint& q) {
    require_on_curve(curve, p);
    require_on_curve(curve, q);
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const FieldElement &x1 = p.affine_x(), &y1 = p.affine_y();
    const FieldElement &x2 = q.affine_x(), &y2 = q.affine_y();
    if (x1 == x2 && y2 == negated_y(curve, x1, y1)) return curve.origin();
    if (p == q) return double_point(curve, p);
    // Distinct x once identity, inverse-pair and duplication are excluded.
    FieldElement m = (y1 - y2) / (x1 - x2);
    FieldElement x3 = -x1 - x2 + m * m + curve.a1() * m - curve.a2();
    FieldElement y3 = m * x3 + y1 - m * x1;
    return ProjectivePoint::affine(x3, negated_y(curve, x3, y3));
}

ProjectivePoint scalar_mul(const WeierstrassCurve& curve, const Integer& n,
                           const ProjectivePoint& p) {
    require_on_curve(curve, p);
    if (n < 0) return negate(curve, scalar_mul(curve, Integer(-n), p));
    ProjectivePoint acc = curve.origin();
    for (long i = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        acc = double_point(curve, acc);
        if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) acc = add(curve, acc, p);
    }
    return acc;
}

ProjectivePoint chord_third_point(const WeierstrassCurve& curve, const ProjectivePoint& p,
                                  const ProjectivePoint& q) {
    require_on_curve(curve, p);
    require_on_curve(curve, q);
    // Lines through the origin: the third point of {O, (c,y1)} is the
    // conjugate (c,y2) with y1 + y2 = -(a1 c + a3); the tangent at O meets
    // with multiplicity three.
    if (p.is_infinity() && q.is_infinity()) return curve.origin();
    if (p.is_infinity())
        return ProjectivePoint::affine(q.affine_x(),
                                       negated_y(curve, q.affine_x(), q.affine_y()));
    if (q.is_infinity())
        return ProjectivePoint::affine(p.affine_x(),
                                       negated_y(curve, p.affine_x(), p.affine_y()));
    const FieldElement &x1 = p.affine_x(), &y1 = p.affine_y();
    const FieldElement &x2 = q.affine_x(), &y2 = q.affine_y();
    if (p == q) {
        // Tangent case; vertical at a two-torsion point, so the third
        // intersection is at infinity.
        if (is_two_torsion(curve, p)) return curve.origin();
        FieldElement m = tangent_slope(curve, x1, y1);
        FieldElement two(curve.field(), 2);
        FieldElement x3 = -(two * x1) - curve.a2() + m * m + curve.a1() * m;
        FieldElement y3 = m * (x3 - x1) + y1;
        return ProjectivePoint::affine(x3, y3);
    }
    if (x1 == x2) return curve.origin();  // vertical chord
    // x^3 + Bx^2 + ... = (x - x1)(x - x2)(x - x3) with B = a2 - m^2 - a1 m.
    FieldElement m = (y1 - y2) / (x1 - x2);
    FieldElement x3 = -x1 - x2 + m * m + curve.a1() * m - curve.a2();
    FieldElement y3 = m * x3 + y1 - m * x1;
    return ProjectivePoint::affine(x3, y3);
}

}  // namespace ecf
