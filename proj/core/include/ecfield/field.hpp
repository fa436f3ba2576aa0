#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace ecf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient field: F_p for a prime p, or the rationals Q.
///
/// Immutable and cheap to copy (shared representation). Two specs compare
/// equal iff they denote the same field.
class FieldSpec {
public:
    static FieldSpec prime_field(const Integer& p);
    static FieldSpec rationals();

    bool is_prime_field() const { return rep_->prime; }
    bool is_rationals() const { return !rep_->prime; }

    /// Modulus p of a prime field. Must not be called on Q.
    const Integer& modulus() const;

    /// Prime field whose modulus fits a machine word (fast residue path).
    bool has_small_modulus() const { return rep_->prime && rep_->small_p != 0; }
    long small_modulus() const { return rep_->small_p; }

    /// p for F_p, 0 for Q.
    Integer characteristic() const;

    bool operator==(const FieldSpec& o) const;
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string to_string() const;  // "Fp:5" or "Q"

private:
    struct Rep {
        bool prime;
        Integer p;     // meaningful only when prime
        long small_p;  // p when it fits 31 bits, else 0
    };
    explicit FieldSpec(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;
};

/// Exact element of F_p or Q, always kept in canonical form: residue in
/// [0, p) for F_p, gcd-reduced fraction with positive denominator for Q.
/// Equality is structural.
class FieldElement {
public:
    FieldElement(const FieldSpec& spec, long v);
    FieldElement(const FieldSpec& spec, const Integer& v);
    /// Q only; a fraction literal has no canonical meaning in F_p here.
    FieldElement(const FieldSpec& spec, const Rational& v);

    static FieldElement zero(const FieldSpec& spec) { return FieldElement(spec, 0); }
    static FieldElement one(const FieldSpec& spec) { return FieldElement(spec, 1); }

    const FieldSpec& field() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    /// Multiplicative inverse; division by zero for the zero element.
    FieldElement inv() const;
    /// a^n for any integer n; n < 0 requires a != 0.
    FieldElement pow(long n) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Canonical residue in [0, p); prime fields only.
    Integer residue() const;
    /// Reduced fraction; rationals only.
    const Rational& rational() const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const FieldElement& e);

private:
    struct canonical_tag {};
    // Residues of fields with a word-sized modulus live in a plain long;
    // large prime fields use Integer, Q uses Rational.
    FieldElement(const FieldSpec& spec, long v, canonical_tag) : spec_(spec), v_(v) {}
    FieldElement(const FieldSpec& spec, Integer v, canonical_tag)
        : spec_(spec), v_(std::move(v)) {}
    FieldElement(const FieldSpec& spec, Rational v, canonical_tag)
        : spec_(spec), v_(std::move(v)) {}
    void require_same_field(const FieldElement& o) const;

    FieldSpec spec_;
    std::variant<long, Integer, Rational> v_;
};

/// All elements 0, 1, ..., p-1 of a prime field, in order.
/// The rationals are not enumerable; that is an error.
std::vector<FieldElement> enumerate_field(const FieldSpec& spec);

}  // namespace ecf
