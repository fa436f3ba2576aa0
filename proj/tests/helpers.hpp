#pragma once

#include <random>
#include <vector>

#include "ecfield/curve.hpp"
#include "ecfield/function_field.hpp"
#include "ecfield/group.hpp"
#include "ecfield/series.hpp"

namespace ecft {

using namespace ecf;

inline FieldSpec fp(long p) { return FieldSpec::prime_field(Integer(p)); }
inline FieldSpec rat() { return FieldSpec::rationals(); }

// Shared test curves. e3/e7/e11 have a1 or a3 nonzero on purpose.
inline WeierstrassCurve e5() { return WeierstrassCurve(fp(5), 0, 0, 0, 1, 1); }
inline WeierstrassCurve e2() { return WeierstrassCurve(fp(2), 0, 0, 1, 0, 0); }
inline WeierstrassCurve e3() { return WeierstrassCurve(fp(3), 1, 0, 0, 1, 1); }
inline WeierstrassCurve e7() { return WeierstrassCurve(fp(7), 0, 0, 1, 0, 0); }
inline WeierstrassCurve e11() { return WeierstrassCurve(fp(11), 1, 1, 1, 1, 1); }
inline WeierstrassCurve e5b() { return WeierstrassCurve(fp(5), 0, 0, 0, -1, 0); }
inline WeierstrassCurve e101() { return WeierstrassCurve(fp(101), 0, 0, 0, 1, 1); }
inline WeierstrassCurve eq() { return WeierstrassCurve(rat(), 0, 0, 0, 1, 1); }

inline ProjectivePoint pt(const WeierstrassCurve& c, long x, long y) {
    return ProjectivePoint::affine(FieldElement(c.field(), x), FieldElement(c.field(), y));
}

// Deterministic generators for the property tests.
class Rng {
public:
    explicit Rng(unsigned long seed) : g_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(g_);
    }

    FieldElement element(const FieldSpec& k) {
        if (k.is_prime_field()) {
            long p = k.modulus().get_si();
            return FieldElement(k, integer(0, p - 1));
        }
        long num = integer(-9, 9);
        long den = integer(1, 9);
        return FieldElement(k, Rational(num, den));
    }

    FieldElement nonzero_element(const FieldSpec& k) {
        for (;;) {
            FieldElement e = element(k);
            if (!e.is_zero()) return e;
        }
    }

    Poly poly(const FieldSpec& k, int max_deg) {
        int d = static_cast<int>(integer(0, max_deg));
        std::vector<FieldElement> c;
        for (int i = 0; i <= d; ++i) c.push_back(element(k));
        return Poly(k, c);
    }

    Poly nonzero_poly(const FieldSpec& k, int max_deg) {
        for (;;) {
            Poly p = poly(k, max_deg);
            if (!p.is_zero()) return p;
        }
    }

    CurveFunction function(const WeierstrassCurve& c, int max_deg) {
        const FieldSpec& k = c.field();
        return CurveFunction(c, poly(k, max_deg), poly(k, max_deg), nonzero_poly(k, max_deg));
    }

    CurveFunction nonzero_function(const WeierstrassCurve& c, int max_deg) {
        for (;;) {
            CurveFunction f = function(c, max_deg);
            if (!f.is_zero()) return f;
        }
    }

    ProjectivePoint point_of(const std::vector<ProjectivePoint>& pts) {
        return pts[static_cast<size_t>(integer(0, static_cast<long>(pts.size()) - 1))];
    }

private:
    std::mt19937_64 g_;
};

// Symbolic-differentiation oracle for the gradient, independent of the
// hand-coded partials in the library.
inline Coord3 symbolic_gradient(const WeierstrassCurve& c, const ProjectivePoint& p) {
    TriPoly w = TriPoly::weierstrass(c.field(), c.a1(), c.a2(), c.a3(), c.a4(), c.a6());
    return w.gradient(p);
}

// Scan all of P^2(F_p) for a point where W and all three partials vanish.
inline bool has_rational_singular_point(const FieldSpec& k, const FieldElement& a1,
                                        const FieldElement& a2, const FieldElement& a3,
                                        const FieldElement& a4, const FieldElement& a6) {
    TriPoly w = TriPoly::weierstrass(k, a1, a2, a3, a4, a6);
    TriPoly wx = w.derivative(0), wy = w.derivative(1), wz = w.derivative(2);
    auto singular_at = [&](const ProjectivePoint& p) {
        Coord3 c = p.coords();
        return w.eval(c).is_zero() && wx.eval(c).is_zero() && wy.eval(c).is_zero() &&
               wz.eval(c).is_zero();
    };
    std::vector<FieldElement> elems = enumerate_field(k);
    FieldElement one = FieldElement::one(k), zero = FieldElement::zero(k);
    for (const FieldElement& x : elems)
        for (const FieldElement& y : elems)
            if (singular_at(ProjectivePoint(x, y, one))) return true;
    for (const FieldElement& x : elems)
        if (singular_at(ProjectivePoint(x, one, zero))) return true;
    return singular_at(ProjectivePoint(one, zero, zero));
}

// Independent closed form for the valuation at the origin: the numerator
// a + b*y has pole order max(2 deg a, 2 deg b + 3) there (the parities
// differ, so no cancellation), the denominator 2 deg d.
inline long origin_valuation_oracle(const CurveFunction& f) {
    long num = 0;
    if (!f.a().is_zero()) num = std::max(num, 2L * f.a().degree());
    if (!f.b().is_zero()) num = std::max(num, 2L * f.b().degree() + 3);
    return 2L * f.d().degree() - num;
}

// Coefficientwise equality below tau^n; both series must carry at least
// that much precision.
inline bool series_agree_mod(const LaurentSeries& a, const LaurentSeries& b, long n) {
    if (a.prec() < n || b.prec() < n) throw std::logic_error("test compared beyond precision");
    long lo = n;
    if (!a.is_structural_zero() && a.has_leading_term()) lo = std::min(lo, a.lead());
    if (!b.is_structural_zero() && b.has_leading_term()) lo = std::min(lo, b.lead());
    for (long j = lo; j < n; ++j)
        if (a.coeff(j) != b.coeff(j)) return false;
    return true;
}

}  // namespace ecft
