#pragma once

#include <array>
#include <string>
#include <vector>

#include "ecfield/field.hpp"

namespace ecf {

using Coord3 = std::array<FieldElement, 3>;

FieldElement dot(const Coord3& a, const Coord3& b);
Coord3 cross(const Coord3& a, const Coord3& b);

/// Point of P^2(K), held in normalized coordinates so equality is
/// structural: Z = 1 when Z != 0, else Y = 1 when Y != 0, else X = 1.
class ProjectivePoint {
public:
    ProjectivePoint(const FieldElement& x, const FieldElement& y, const FieldElement& z);

    static ProjectivePoint infinity(const FieldSpec& spec);
    static ProjectivePoint affine(const FieldElement& x, const FieldElement& y);

    const FieldSpec& field() const { return x_.field(); }
    const FieldElement& X() const { return x_; }
    const FieldElement& Y() const { return y_; }
    const FieldElement& Z() const { return z_; }
    Coord3 coords() const { return {x_, y_, z_}; }

    bool is_infinity() const;
    /// Affine coordinates; the point must have Z != 0.
    const FieldElement& affine_x() const;
    const FieldElement& affine_y() const;

    bool operator==(const ProjectivePoint& o) const;
    bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }

    /// "(x,y)" for Z != 0, "O" for (0,1,0), "(X:Y:Z)" otherwise.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p);

private:
    FieldElement x_, y_, z_;
};

/// Line lam*X + mu*Y + nu*Z = 0. Coefficients are stored as given;
/// equality is projective (proportionality).
class ProjectiveLine {
public:
    ProjectiveLine(const FieldElement& lam, const FieldElement& mu, const FieldElement& nu);

    const FieldElement& lam() const { return lam_; }
    const FieldElement& mu() const { return mu_; }
    const FieldElement& nu() const { return nu_; }
    Coord3 coords() const { return {lam_, mu_, nu_}; }

    bool contains(const ProjectivePoint& p) const;

    /// Affine slope m = -lam/mu and intercept b = -nu/mu; mu must be nonzero.
    FieldElement slope() const;
    FieldElement intercept() const;

    bool operator==(const ProjectiveLine& o) const;
    bool operator!=(const ProjectiveLine& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldElement lam_, mu_, nu_;
};

/*
   Y^2 Z + a1 XYZ + a3 YZ^2 = X^3 + a2 X^2 Z + a4 XZ^2 + a6 Z^3

   b2 = a1^2 + 4 a2
   b4 = 2 a4 + a1 a3
   b6 = a3^2 + 4 a6
   b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
   delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
*/
FieldElement weierstrass_discriminant(const FieldSpec& spec, const FieldElement& a1,
                                      const FieldElement& a2, const FieldElement& a3,
                                      const FieldElement& a4, const FieldElement& a6);

/// Nonsingular Weierstrass cubic; construction rejects delta = 0.
class WeierstrassCurve {
public:
    WeierstrassCurve(const FieldSpec& spec, const FieldElement& a1, const FieldElement& a2,
                     const FieldElement& a3, const FieldElement& a4, const FieldElement& a6);
    /// Coefficients as small integers, embedded in the field.
    WeierstrassCurve(const FieldSpec& spec, long a1, long a2, long a3, long a4, long a6);

    const FieldSpec& field() const { return spec_; }
    const FieldElement& a1() const { return a1_; }
    const FieldElement& a2() const { return a2_; }
    const FieldElement& a3() const { return a3_; }
    const FieldElement& a4() const { return a4_; }
    const FieldElement& a6() const { return a6_; }
    const FieldElement& delta() const { return delta_; }

    ProjectivePoint origin() const { return ProjectivePoint::infinity(spec_); }

    bool operator==(const WeierstrassCurve& o) const;
    bool operator!=(const WeierstrassCurve& o) const { return !(*this == o); }

    /// "a1,a2,a3,a4,a6"
    std::string to_string() const;

private:
    FieldSpec spec_;
    FieldElement a1_, a2_, a3_, a4_, a6_;
    FieldElement delta_;
};

/// W(X,Y,Z) at the normalized representative of P.
FieldElement weierstrass_eval(const WeierstrassCurve& curve, const ProjectivePoint& p);

bool contains(const WeierstrassCurve& curve, const ProjectivePoint& p);

/// (dW/dX, dW/dY, dW/dZ) at the normalized representative of P.
Coord3 gradient_at(const WeierstrassCurve& curve, const ProjectivePoint& p);

/// Vanishing of the 3x3 coordinate determinant.
bool is_colinear(const ProjectivePoint& p1, const ProjectivePoint& p2, const ProjectivePoint& p3);

/// Line through two distinct points (cross product of coordinates).
ProjectiveLine line_through(const ProjectivePoint& p1, const ProjectivePoint& p2);

/// Tangent at an on-curve point; coefficients are the gradient, and the
/// line contains P by Euler's identity.
ProjectiveLine tangent_line(const WeierstrassCurve& curve, const ProjectivePoint& p);

/// All of E(F_p): infinity first, then affine points in lexicographic
/// (x, y) residue order. Prime fields only.
std::vector<ProjectivePoint> enumerate_points(const WeierstrassCurve& curve);

}  // namespace ecf
