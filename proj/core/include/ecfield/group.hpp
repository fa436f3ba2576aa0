#pragma once

#include "ecfield/curve.hpp"

namespace ecf {

/// -(x,y,1) = (x, -(y + a1 x + a3), 1); the identity is self-inverse.
ProjectivePoint negate(const WeierstrassCurve& curve, const ProjectivePoint& p);

/// Group sum by chord-and-tangent. Dispatch: identity operands, inverse
/// pairs, duplication, then the chord formula.
ProjectivePoint add(const WeierstrassCurve& curve, const ProjectivePoint& p,
                    const ProjectivePoint& q);

/// 2P; a two-torsion point doubles to the identity.
ProjectivePoint double_point(const WeierstrassCurve& curve, const ProjectivePoint& p);

/// n*P by double-and-add, any integer n.
ProjectivePoint scalar_mul(const WeierstrassCurve& curve, const Integer& n,
                           const ProjectivePoint& p);

/// 2P = O; affinely 2y = -(a1 x + a3), and the identity counts.
bool is_two_torsion(const WeierstrassCurve& curve, const ProjectivePoint& p);

/// Third intersection R of the line through P and Q (tangent when P = Q),
/// so that P + Q + R = O.
ProjectivePoint chord_third_point(const WeierstrassCurve& curve, const ProjectivePoint& p,
                                  const ProjectivePoint& q);

}  // namespace ecf
