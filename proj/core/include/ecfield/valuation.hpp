#pragma once

#include "ecfield/curve.hpp"
#include "ecfield/function_field.hpp"
#include "ecfield/series.hpp"

namespace ecf {

/// Auxiliary frame at a nonsingular point P:
///   R with R.P != 0, grad = gradient of W at P,
///   T spanning the directions orthogonal to both (the tangent direction),
///   S with S.P = 0 and S.T != 0.
/// Then S.(X,Y,Z) / R.(X,Y,Z) is a uniformizer at P.
struct TangentFrame {
    ProjectivePoint p;
    Coord3 r;
    Coord3 grad;
    Coord3 t;
    Coord3 s;
};

/// Deterministic frame: R and S are the first standard basis vectors that
/// qualify, T = cross(R, grad).
TangentFrame tangent_frame(const WeierstrassCurve& curve, const ProjectivePoint& p);

/// The functional theta(f) = T . grad_P(F/G) by the quotient rule; the
/// denominator must not vanish at P. Kills constants and M_P^2; nonzero
/// exactly on M_P - M_P^2.
FieldElement theta(const WeierstrassCurve& curve, const ProjectivePoint& p,
                   const HomogeneousFraction& hf);

/// S.(X,Y,Z) / R.(X,Y,Z) from the deterministic frame, as an element of
/// K(C). At the origin this is X/Y.
CurveFunction canonical_uniformizer(const WeierstrassCurve& curve, const ProjectivePoint& p);

/// The same uniformizer as a homogeneous fraction (good denominator at P:
/// it evaluates to R.P != 0).
HomogeneousFraction canonical_uniformizer_fraction(const WeierstrassCurve& curve,
                                                   const ProjectivePoint& p);

/// u in M_P - M_P^2. Requires u in M_P (defined and vanishing at P);
/// anything else is an error. Uses the theta test when the canonical
/// denominator gives a usable presentation at P, else the equivalent
/// valuation(u) == 1 criterion.
bool is_uniformizer(const WeierstrassCurve& curve, const ProjectivePoint& p,
                    const CurveFunction& u);

/// v_P(f): order of the zero (positive) or pole (negative) of f at P;
/// +infinity for the zero function. Computed as the degree of the local
/// expansion, with precision doubled from 8 up to the hard cap
/// 2*(wdeg num + wdeg den) + 4.
Valuation valuation(const WeierstrassCurve& curve, const ProjectivePoint& p,
                    const CurveFunction& f);

/// Expansion of the unit g = u^{-v(f)} f to N terms; its constant term
/// g(P) is nonzero. f must be nonzero and u a uniformizer at P.
LaurentSeries unit_part(const WeierstrassCurve& curve, const ProjectivePoint& p,
                        const CurveFunction& f, const CurveFunction& u, long n);

}  // namespace ecf
