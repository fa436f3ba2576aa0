#include "ecfield/valuation.hpp"

#include <stdexcept>

namespace ecf {

TangentFrame tangent_frame(const WeierstrassCurve& curve, const ProjectivePoint& p) {
    if (!contains(curve, p))
        throw std::domain_error("point " + p.to_string() + " is not on the curve");
    const FieldSpec& k = curve.field();
    FieldElement zero = FieldElement::zero(k);
    FieldElement one = FieldElement::one(k);
    Coord3 pc = p.coords();

    auto basis = [&](int i) {
        Coord3 e{zero, zero, zero};
        e[static_cast<size_t>(i)] = one;
        return e;
    };

    Coord3 r = basis(0);
    for (int i = 0; i < 3; ++i) {
        if (!pc[static_cast<size_t>(i)].is_zero()) {
            r = basis(i);
            break;
        }
    }

    Coord3 grad = gradient_at(curve, p);
    Coord3 t = cross(r, grad);  // orthogonal to both; nonzero since grad and R are independent

    // First standard basis vector with S.P = 0 and S.T != 0. When every
    // coordinate of P is nonzero no basis vector is orthogonal to P, so
    // fall back to the deterministic differences pc[j] e_i - pc[i] e_j.
    std::vector<Coord3> candidates;
    for (int i = 0; i < 3; ++i) candidates.push_back(basis(i));
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            Coord3 v{zero, zero, zero};
            v[static_cast<size_t>(i)] = pc[static_cast<size_t>(j)];
            v[static_cast<size_t>(j)] = -pc[static_cast<size_t>(i)];
            candidates.push_back(v);
        }
    }
    for (const Coord3& s : candidates) {
        if (s[0].is_zero() && s[1].is_zero() && s[2].is_zero()) continue;
        if (dot(s, pc).is_zero() && !dot(s, t).is_zero())
            return TangentFrame{p, r, grad, t, s};
    }
    throw std::logic_error("no tangent-frame vector S found");  // unreachable for valid curves
}

FieldElement theta(const WeierstrassCurve& curve, const ProjectivePoint& p,
                   const HomogeneousFraction& hf) {
    TangentFrame frame = tangent_frame(curve, p);
    FieldElement gp = hf.den().eval(p.coords());
    if (gp.is_zero())
        throw std::domain_error("theta needs a representative whose denominator is nonzero at " +
                                p.to_string());
    FieldElement fp = hf.num().eval(p.coords());
    Coord3 grad_f = hf.num().gradient(p);
    Coord3 grad_g = hf.den().gradient(p);
    // Quotient rule: (G(P) grad F - F(P) grad G) . T / G(P)^2.
    return (gp * dot(frame.t, grad_f) - fp * dot(frame.t, grad_g)) / (gp * gp);
}

HomogeneousFraction canonical_uniformizer_fraction(const WeierstrassCurve& curve,
                                                   const ProjectivePoint& p) {
    TangentFrame frame = tangent_frame(curve, p);
    return HomogeneousFraction(TriPoly::linear_form(frame.s), TriPoly::linear_form(frame.r));
}

CurveFunction canonical_uniformizer(const WeierstrassCurve& curve, const ProjectivePoint& p) {
    return from_homogeneous(curve, canonical_uniformizer_fraction(curve, p));
}

bool is_uniformizer(const WeierstrassCurve& curve, const ProjectivePoint& p,
                    const CurveFunction& u) {
    if (u.curve() != curve) throw std::invalid_argument("function lives on a different curve");
    if (u.is_zero()) return false;  // in M_P but in every M_P^n

    if (!p.is_infinity() && !u.d().eval(p.affine_x()).is_zero()) {
        FieldElement v =
            (u.a().eval(p.affine_x()) + u.b().eval(p.affine_x()) * p.affine_y()) /
            u.d().eval(p.affine_x());
        if (!v.is_zero())
            throw std::domain_error("not in M_P: function value " + v.to_string() + " at " +
                                    p.to_string());
        return !theta(curve, p, u.homogenize()).is_zero();
    }

    // No usable presentation for theta; valuation(u) == 1 is equivalent.
    Valuation v = valuation(curve, p, u);
    if (v.value() < 0)
        throw std::domain_error("not in M_P: pole at " + p.to_string());
    if (v.value() == 0)
        throw std::domain_error("not in M_P: nonzero value at " + p.to_string());
    return v.value() == 1;
}

Valuation valuation(const WeierstrassCurve& curve, const ProjectivePoint& p,
                    const CurveFunction& f) {
    LocalExpander ex(curve, p);
    return ex.valuation(f);
}

LaurentSeries unit_part(const WeierstrassCurve& curve, const ProjectivePoint& p,
                        const CurveFunction& f, const CurveFunction& u, long n) {
    if (f.is_zero()) throw std::domain_error("unit part of the zero function");
    Valuation v = valuation(curve, p, f);
    CurveFunction g = f * u.pow(-v.value());
    return psi_expand(curve, p, u, g, n);
}

bool is_defined_at(const CurveFunction& f, const ProjectivePoint& p) {
    LocalExpander ex(f.curve(), p);
    return ex.defined(f);
}

FieldElement value_at(const CurveFunction& f, const ProjectivePoint& p) {
    LocalExpander ex(f.curve(), p);
    return ex.value(f);
}

}  // namespace ecf
