#include "ecfield/curve.hpp"

#include <ostream>
#include <stdexcept>

namespace ecf {

FieldElement dot(const Coord3& a, const Coord3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Coord3 cross(const Coord3& a, const Coord3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

ProjectivePoint::ProjectivePoint(const FieldElement& x, const FieldElement& y,
                                 const FieldElement& z)
    : x_(x), y_(y), z_(z) {
    if (x_.field() != y_.field() || y_.field() != z_.field())
        throw std::invalid_argument("point coordinate field mismatch");
    if (x_.is_zero() && y_.is_zero() && z_.is_zero())
        throw std::invalid_argument("(0,0,0) is not a projective point");
    // Scale to the unique representative per class.
    FieldElement s = !z_.is_zero() ? z_.inv() : (!y_.is_zero() ? y_.inv() : x_.inv());
    x_ *= s;
    y_ *= s;
    z_ *= s;
}

ProjectivePoint ProjectivePoint::infinity(const FieldSpec& spec) {
    return ProjectivePoint(FieldElement::zero(spec), FieldElement::one(spec),
                           FieldElement::zero(spec));
}

ProjectivePoint ProjectivePoint::affine(const FieldElement& x, const FieldElement& y) {
    return ProjectivePoint(x, y, FieldElement::one(x.field()));
}

bool ProjectivePoint::is_infinity() const {
    return z_.is_zero() && x_.is_zero();
}

const FieldElement& ProjectivePoint::affine_x() const {
    if (z_.is_zero()) throw std::domain_error("no affine coordinates on the line Z = 0");
    return x_;
}

const FieldElement& ProjectivePoint::affine_y() const {
    if (z_.is_zero()) throw std::domain_error("no affine coordinates on the line Z = 0");
    return y_;
}

bool ProjectivePoint::operator==(const ProjectivePoint& o) const {
    return x_ == o.x_ && y_ == o.y_ && z_ == o.z_;
}

std::string ProjectivePoint::to_string() const {
    if (!z_.is_zero()) return "(" + x_.to_string() + "," + y_.to_string() + ")";
    if (is_infinity()) return "O";
    return "(" + x_.to_string() + ":" + y_.to_string() + ":" + z_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p) {
    return os << p.to_string();
}

ProjectiveLine::ProjectiveLine(const FieldElement& lam, const FieldElement& mu,
                               const FieldElement& nu)
    : lam_(lam), mu_(mu), nu_(nu) {
    if (lam_.is_zero() && mu_.is_zero() && nu_.is_zero())
        throw std::invalid_argument("(0,0,0) is not a line");
}

bool ProjectiveLine::contains(const ProjectivePoint& p) const {
    return dot(coords(), p.coords()).is_zero();
}

FieldElement ProjectiveLine::slope() const {
    if (mu_.is_zero()) throw std::domain_error("vertical line has no slope");
    return -(lam_ / mu_);
}

FieldElement ProjectiveLine::intercept() const {
    if (mu_.is_zero()) throw std::domain_error("vertical line has no intercept");
    return -(nu_ / mu_);
}

bool ProjectiveLine::operator==(const ProjectiveLine& o) const {
    // Proportionality: all 2x2 minors vanish.
    return (lam_ * o.mu_ - mu_ * o.lam_).is_zero() && (lam_ * o.nu_ - nu_ * o.lam_).is_zero() &&
           (mu_ * o.nu_ - nu_ * o.mu_).is_zero();
}

std::string ProjectiveLine::to_string() const {
    return "[" + lam_.to_string() + ":" + mu_.to_string() + ":" + nu_.to_string() + "]";
}

FieldElement weierstrass_discriminant(const FieldSpec& spec, const FieldElement& a1,
                                      const FieldElement& a2, const FieldElement& a3,
                                      const FieldElement& a4, const FieldElement& a6) {
    auto k = [&spec](long v) { return FieldElement(spec, v); };
    FieldElement b2 = a1 * a1 + k(4) * a2;
    FieldElement b4 = k(2) * a4 + a1 * a3;
    FieldElement b6 = a3 * a3 + k(4) * a6;
    FieldElement b8 = a1 * a1 * a6 + k(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return -(b2 * b2 * b8) - k(8) * b4 * b4 * b4 - k(27) * b6 * b6 + k(9) * b2 * b4 * b6;
}

WeierstrassCurve::WeierstrassCurve(const FieldSpec& spec, const FieldElement& a1,
                                   const FieldElement& a2, const FieldElement& a3,
                                   const FieldElement& a4, const FieldElement& a6)
    : spec_(spec),
      a1_(a1),
      a2_(a2),
      a3_(a3),
      a4_(a4),
      a6_(a6),
      delta_(weierstrass_discriminant(spec, a1, a2, a3, a4, a6)) {
    if (delta_.is_zero())
        throw std::domain_error("singular Weierstrass equation: discriminant is zero");
}

WeierstrassCurve::WeierstrassCurve(const FieldSpec& spec, long a1, long a2, long a3, long a4,
                                   long a6)
    : WeierstrassCurve(spec, FieldElement(spec, a1), FieldElement(spec, a2),
                       FieldElement(spec, a3), FieldElement(spec, a4), FieldElement(spec, a6)) {}

bool WeierstrassCurve::operator==(const WeierstrassCurve& o) const {
    return spec_ == o.spec_ && a1_ == o.a1_ && a2_ == o.a2_ && a3_ == o.a3_ && a4_ == o.a4_ &&
           a6_ == o.a6_;
}

std::string WeierstrassCurve::to_string() const {
    return a1_.to_string() + "," + a2_.to_string() + "," + a3_.to_string() + "," +
           a4_.to_string() + "," + a6_.to_string();
}

FieldElement weierstrass_eval(const WeierstrassCurve& c, const ProjectivePoint& p) {
    const FieldElement &X = p.X(), &Y = p.Y(), &Z = p.Z();
    return Y * Y * Z + c.a1() * X * Y * Z + c.a3() * Y * Z * Z -
           (X * X * X + c.a2() * X * X * Z + c.a4() * X * Z * Z + c.a6() * Z * Z * Z);
}

bool contains(const WeierstrassCurve& curve, const ProjectivePoint& p) {
    return weierstrass_eval(curve, p).is_zero();
}

Coord3 gradient_at(const WeierstrassCurve& c, const ProjectivePoint& p) {
    const FieldElement &X = p.X(), &Y = p.Y(), &Z = p.Z();
    const FieldSpec& k = c.field();
    FieldElement two(k, 2), three(k, 3);
    FieldElement dX = c.a1() * Y * Z - three * X * X - two * c.a2() * X * Z - c.a4() * Z * Z;
    FieldElement dY = two * Y * Z + c.a1() * X * Z + c.a3() * Z * Z;
    FieldElement dZ = Y * Y + c.a1() * X * Y + two * c.a3() * Y * Z - c.a2() * X * X -
                      two * c.a4() * X * Z - three * c.a6() * Z * Z;
    return {dX, dY, dZ};
}

bool is_colinear(const ProjectivePoint& p1, const ProjectivePoint& p2,
                 const ProjectivePoint& p3) {
    Coord3 a = p1.coords(), b = p2.coords(), c = p3.coords();
    FieldElement det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                       a[2] * (b[0] * c[1] - b[1] * c[0]);
    return det.is_zero();
}

ProjectiveLine line_through(const ProjectivePoint& p1, const ProjectivePoint& p2) {
    if (p1 == p2)
        throw std::domain_error("line through equal points is ambiguous; use tangent_line");
    Coord3 l = cross(p1.coords(), p2.coords());
    return ProjectiveLine(l[0], l[1], l[2]);
}

ProjectiveLine tangent_line(const WeierstrassCurve& curve, const ProjectivePoint& p) {
    if (!contains(curve, p)) throw std::domain_error("tangent requested at an off-curve point");
    Coord3 g = gradient_at(curve, p);
    return ProjectiveLine(g[0], g[1], g[2]);
}

std::vector<ProjectivePoint> enumerate_points(const WeierstrassCurve& curve) {
    const FieldSpec& k = curve.field();
    if (!k.is_prime_field()) throw std::domain_error("point enumeration needs a finite field");
    std::vector<ProjectivePoint> out;
    out.push_back(ProjectivePoint::infinity(k));
    std::vector<FieldElement> elems = enumerate_field(k);
    for (const FieldElement& x : elems) {
        for (const FieldElement& y : elems) {
            ProjectivePoint p = ProjectivePoint::affine(x, y);
            if (contains(curve, p)) out.push_back(p);
        }
    }
    return out;
}

}  // namespace ecf
