#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecfield/function_field.hpp"

namespace ecf {

/// Order of vanishing: an integer, or +infinity for the zero function /
/// zero series.
class Valuation {
public:
    Valuation(long v) : v_(v) {}
    static Valuation infinity() {
        Valuation v(0);
        v.inf_ = true;
        return v;
    }

    bool is_infinity() const { return inf_; }
    bool is_finite() const { return !inf_; }
    long value() const;

    friend Valuation operator+(const Valuation& a, const Valuation& b);
    Valuation operator-() const;

    bool operator==(const Valuation& o) const {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }
    bool operator!=(const Valuation& o) const { return !(*this == o); }
    bool operator<(const Valuation& o) const;
    bool operator<=(const Valuation& o) const { return *this < o || *this == o; }
    bool operator>(const Valuation& o) const { return o < *this; }
    bool operator>=(const Valuation& o) const { return o <= *this; }

    std::string to_string() const;  // "+inf" or the integer

private:
    bool inf_ = false;
    long v_;
};

/// Truncated Laurent series sum_{j >= lead} c_j tau^j. Coefficients with
/// exponent >= prec() are unknown; operations never fabricate precision.
///
/// Three states are distinguished:
///  - structurally zero (the exact zero series, every coefficient known);
///  - a visible leading term: the coefficient at lead() is nonzero;
///  - zero to known precision: every known coefficient vanishes but the
///    tail is unknown (insufficient precision for a degree).
class LaurentSeries {
public:
    /// Truncation order used for exactly-known series (constants,
    /// monomials, polynomial values): effectively unbounded.
    static constexpr long kExactPrec = 1L << 60;

    LaurentSeries(const FieldSpec& spec, long lead, std::vector<FieldElement> coeffs, long prec);

    static LaurentSeries zero(const FieldSpec& spec);
    static LaurentSeries constant(const FieldSpec& spec, const FieldElement& c,
                                  long prec = kExactPrec);
    static LaurentSeries monomial(const FieldSpec& spec, const FieldElement& c, long exp,
                                  long prec = kExactPrec);

    const FieldSpec& field() const { return spec_; }
    bool is_structural_zero() const { return zero_; }
    /// A nonzero coefficient is visible.
    bool has_leading_term() const { return !zero_ && !c_.empty(); }
    /// Exponent of the first known nonzero coefficient.
    long lead() const;
    long prec() const { return zero_ ? kExactPrec : prec_; }
    /// Known coefficient of tau^j; j must be below prec().
    FieldElement coeff(long j) const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries operator-() const;
    /// Exact scalar multiple.
    LaurentSeries operator*(const FieldElement& c) const;

    /// Forget coefficients at exponents >= new_prec.
    LaurentSeries truncate(long new_prec) const;
    /// Multiply by tau^k.
    LaurentSeries shift(long k) const;

    /// True iff every coefficient below n is known to vanish. Requires
    /// prec() >= n unless structurally zero.
    bool is_zero_mod(long n) const;

    /// Structural equality (same knowledge, coefficient for coefficient).
    bool operator==(const LaurentSeries& o) const;
    bool operator!=(const LaurentSeries& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "t") const;
    friend std::ostream& operator<<(std::ostream& os, const LaurentSeries& s);

private:
    void normalize();
    FieldSpec spec_;
    bool zero_ = false;   // structurally zero
    long lead_ = 0;       // first stored exponent; == prec_ when nothing is known nonzero
    long prec_ = 1;
    std::vector<FieldElement> c_;  // exponents lead_ .. lead_ + size - 1, trailing zeros trimmed
};

/// Multiplicative inverse. The leading coefficient must be visible.
/// max_prec bounds the result's truncation order; it is required when the
/// input is exactly known (the inverse usually is not).
LaurentSeries ls_inv(const LaurentSeries& a, long max_prec = -1);

/// Degree per the series metric: index of the first nonzero coefficient,
/// +infinity for the zero series. All-known-coefficients-zero with finite
/// precision is an insufficient-precision error: re-expand deeper.
Valuation ls_degree(const LaurentSeries& s);

/// p(xs) with exact constant lifting.
LaurentSeries eval_poly(const Poly& p, const LaurentSeries& xs);

/// Metric parameter: |f| = c^v with 0 < c < 1.
struct MetricConfig {
    explicit MetricConfig(const Rational& c_);
    Rational c;
};

/// c^v as an exact rational; 0 for v = +infinity.
Rational metric_abs(const Valuation& v, const MetricConfig& cfg);
Rational metric_abs(const LaurentSeries& s, const MetricConfig& cfg);
Rational metric_abs(const WeierstrassCurve& curve, const ProjectivePoint& p,
                    const CurveFunction& f, const MetricConfig& cfg);

/// Laurent expansions of the coordinate functions x and y at P in the
/// parameter `uniformizer`, correct mod tau^N. At the origin the parameter
/// is x/y (the canonical frame uniformizer); at a finite point it is
/// x - x0 when dW/dy(P) != 0, else y - y0.
struct LocalParameterization {
    LaurentSeries x_series;
    LaurentSeries y_series;
    CurveFunction uniformizer;
};

LocalParameterization local_parameterization(const WeierstrassCurve& curve,
                                             const ProjectivePoint& p, long n);

/// Expansion engine at a fixed point: substitutes the local
/// parameterization into canonical forms, growing the cached
/// parameterization on demand. State is local to the object; the library
/// keeps no global caches.
class LocalExpander {
public:
    LocalExpander(const WeierstrassCurve& curve, const ProjectivePoint& p);

    const WeierstrassCurve& curve() const { return curve_; }
    const ProjectivePoint& point() const { return p_; }
    const CurveFunction& parameter() const { return par_->uniformizer; }

    /// Series of f with truncation order >= min_prec.
    LaurentSeries series(const CurveFunction& f, long min_prec);
    /// Series of a nonzero f grown until its leading coefficient is
    /// visible: precision starts at max(8, hint) and doubles up to the
    /// valuation cap. The lead gives v_P(f).
    LaurentSeries lead_series(const CurveFunction& f, long hint = 0);
    /// v_P(f) by expansion; +infinity for the zero function.
    Valuation valuation(const CurveFunction& f);
    /// Value at P; requires v_P(f) >= 0.
    FieldElement value(const CurveFunction& f);
    bool defined(const CurveFunction& f);

private:
    void grow(long m);
    WeierstrassCurve curve_;
    ProjectivePoint p_;
    long m_;
    std::optional<LocalParameterization> par_;
};

/// Series of f at P by substitution of the local parameterization into the
/// canonical form, truncation order N + 1. Independent of psi_expand's
/// coefficient induction; the two are cross-checked in the tests.
LaurentSeries expand_by_substitution(const WeierstrassCurve& curve, const ProjectivePoint& p,
                                     const CurveFunction& f, long n);

/// Expansion homomorphism Psi_u: the unique coefficients f_j with
/// f - sum_{j<=N} f_j u^j vanishing to order N+1, computed by induction:
/// a = v(f), f_a = (u^-a f)(P), recurse on f - f_a u^a. u must be a
/// uniformizer at P.
LaurentSeries psi_expand(const WeierstrassCurve& curve, const ProjectivePoint& p,
                         const CurveFunction& u, const CurveFunction& f, long n);

}  // namespace ecf
