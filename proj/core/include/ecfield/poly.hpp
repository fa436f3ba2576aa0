#pragma once

#include <string>
#include <vector>

#include "ecfield/field.hpp"

namespace ecf {

/// Dense univariate polynomial over a field, trailing zeros trimmed.
/// degree() of the zero polynomial is the -1 sentinel; use is_zero() for
/// the structural test.
class Poly {
public:
    explicit Poly(const FieldSpec& spec) : spec_(spec) {}
    Poly(const FieldSpec& spec, std::vector<FieldElement> coeffs);

    static Poly constant(const FieldSpec& spec, const FieldElement& c);
    static Poly constant(const FieldSpec& spec, long c);
    static Poly x(const FieldSpec& spec);
    /// c * x^deg
    static Poly monomial(const FieldSpec& spec, const FieldElement& c, int deg);

    const FieldSpec& field() const { return spec_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of x^i (zero beyond the stored range).
    FieldElement coeff(int i) const;
    const FieldElement& leading() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly operator*(const FieldElement& c) const;

    FieldElement eval(const FieldElement& x) const;
    Poly derivative() const;
    Poly monic() const;

    /// Euclidean division: returns (quotient, remainder), b != 0.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    friend Poly gcd(const Poly& a, const Poly& b);  // monic, gcd(0,0) = 0

    bool operator==(const Poly& o) const { return spec_ == o.spec_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    FieldSpec spec_;
    std::vector<FieldElement> c_;  // c_[i] is the coefficient of x^i
};

}  // namespace ecf
