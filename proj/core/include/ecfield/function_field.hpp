#pragma once

#include <map>
#include <string>
#include <vector>

#include "ecfield/curve.hpp"
#include "ecfield/poly.hpp"

namespace ecf {

/// Sparse polynomial in X, Y, Z over a field. Used for homogeneous data:
/// gradients, incidence with the curve, and the fractions of K(C).
class TriPoly {
public:
    explicit TriPoly(const FieldSpec& spec) : spec_(spec) {}

    static TriPoly monomial(const FieldSpec& spec, const FieldElement& c, int i, int j, int k);
    static TriPoly constant(const FieldSpec& spec, const FieldElement& c);
    /// axis 0 = X, 1 = Y, 2 = Z.
    static TriPoly variable(const FieldSpec& spec, int axis);
    /// r0*X + r1*Y + r2*Z.
    static TriPoly linear_form(const Coord3& r);
    /// The Weierstrass polynomial W(X,Y,Z) of a coefficient tuple.
    static TriPoly weierstrass(const FieldSpec& spec, const FieldElement& a1,
                               const FieldElement& a2, const FieldElement& a3,
                               const FieldElement& a4, const FieldElement& a6);

    const FieldSpec& field() const { return spec_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;

    friend TriPoly operator+(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator-(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
    TriPoly operator-() const;
    TriPoly operator*(const FieldElement& c) const;
    TriPoly pow(int n) const;

    TriPoly derivative(int axis) const;
    FieldElement eval(const Coord3& p) const;
    Coord3 gradient(const ProjectivePoint& p) const;

    /// Coefficients of y^j after substituting Z = 1, as polynomials in x.
    std::vector<Poly> dehomogenize_xy() const;

    bool operator==(const TriPoly& o) const { return spec_ == o.spec_ && terms_ == o.terms_; }
    bool operator!=(const TriPoly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void add_term(const std::array<int, 3>& e, const FieldElement& c);
    FieldSpec spec_;
    std::map<std::array<int, 3>, FieldElement> terms_;  // exponents -> nonzero coefficient
};

/// Quotient F/G of homogeneous polynomials of equal degree; the raw
/// presentation of an element of K(C), scaling-invariant by homogeneity.
class HomogeneousFraction {
public:
    HomogeneousFraction(TriPoly num, TriPoly den);

    const TriPoly& num() const { return num_; }
    const TriPoly& den() const { return den_; }
    int degree() const { return num_.is_zero() ? den_.total_degree() : num_.total_degree(); }

    /// num(P)/den(P); den must not vanish at P.
    FieldElement eval(const ProjectivePoint& p) const;

    std::string to_string() const;

private:
    TriPoly num_, den_;
};

/// Element of the function field K(C) in canonical form
///
///     (a(x) + b(x)*y) / d(x)
///
/// with d monic and gcd(a, b, d) = 1; powers of y are eliminated through
/// the curve relation y^2 = s(x) - (a1 x + a3) y. Equality is structural.
class CurveFunction {
public:
    CurveFunction(const WeierstrassCurve& curve, Poly a, Poly b, Poly d);

    static CurveFunction zero(const WeierstrassCurve& curve);
    static CurveFunction one(const WeierstrassCurve& curve);
    static CurveFunction constant(const WeierstrassCurve& curve, const FieldElement& c);
    static CurveFunction coordinate_x(const WeierstrassCurve& curve);
    static CurveFunction coordinate_y(const WeierstrassCurve& curve);
    /// Canonical form of sum coeffs[j](x) * y^j, reduced by the curve
    /// relation.
    static CurveFunction from_xy_polynomial(const WeierstrassCurve& curve,
                                            const std::vector<Poly>& coeffs_by_y_power);

    const WeierstrassCurve& curve() const { return curve_; }
    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }
    const Poly& d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_constant() const;
    /// Value of a constant function.
    FieldElement constant_value() const;

    friend CurveFunction operator+(const CurveFunction& f, const CurveFunction& g);
    friend CurveFunction operator-(const CurveFunction& f, const CurveFunction& g);
    friend CurveFunction operator*(const CurveFunction& f, const CurveFunction& g);
    friend CurveFunction operator/(const CurveFunction& f, const CurveFunction& g);
    CurveFunction operator-() const;
    CurveFunction operator*(const FieldElement& c) const;

    /// Conjugate-norm inverse; the zero function has none.
    CurveFunction inv() const;
    CurveFunction pow(long n) const;

    bool operator==(const CurveFunction& o) const;
    bool operator!=(const CurveFunction& o) const { return !(*this == o); }

    /// Pole order at the point at infinity of the numerator a + b*y
    /// (weights: x -> 2, y -> 3). Zero function: 0.
    long num_weighted_degree() const;
    long den_weighted_degree() const { return 2 * std::max(d_.degree(), 0); }

    /// Clear denominators of x = X/Z, y = Y/Z: an equal-degree homogeneous
    /// presentation of this function.
    HomogeneousFraction homogenize() const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const CurveFunction& f);

private:
    void canonicalize();
    WeierstrassCurve curve_;
    Poly a_, b_, d_;
};

/// F(x,y,1)/G(x,y,1) as an element of K(C). The denominator must not be
/// divisible by the curve (it would vanish identically).
CurveFunction from_homogeneous(const WeierstrassCurve& curve, const HomogeneousFraction& hf);

/// Defined at P iff v_P(f) >= 0 (these agree with the representative-based
/// definition at nonsingular points).
bool is_defined_at(const CurveFunction& f, const ProjectivePoint& p);

/// Value at P of a function defined there; a pole is an error.
FieldElement value_at(const CurveFunction& f, const ProjectivePoint& p);

}  // namespace ecf
