#include "ecfield/field.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace ecf {

namespace {

// Desk-scale trial division; every downstream inverse depends on p prime.
bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (Integer d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Integer reduce_mod(const Integer& v, const Integer& p) {
    Integer r = v % p;
    if (r < 0) r += p;
    return r;
}

long reduce_mod_small(long v, long p) {
    long r = v % p;
    if (r < 0) r += p;
    return r;
}

// Extended Euclid; a in (0, p).
long inv_mod_small(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        long q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    return t < 0 ? t + p : t;
}

constexpr long kSmallModulusMax = (1L << 31) - 1;  // products fit in a long

}  // namespace

FieldSpec FieldSpec::prime_field(const Integer& p) {
    if (!is_prime(p))
        throw std::domain_error("field modulus " + p.get_str() + " is not prime");
    long small = p <= kSmallModulusMax ? p.get_si() : 0;
    return FieldSpec(std::make_shared<const Rep>(Rep{true, p, small}));
}

FieldSpec FieldSpec::rationals() {
    static const std::shared_ptr<const Rep> q =
        std::make_shared<const Rep>(Rep{false, Integer(0), 0});
    return FieldSpec(q);
}

const Integer& FieldSpec::modulus() const {
    if (!rep_->prime) throw std::logic_error("Q has no modulus");
    return rep_->p;
}

Integer FieldSpec::characteristic() const {
    return rep_->prime ? rep_->p : Integer(0);
}

bool FieldSpec::operator==(const FieldSpec& o) const {
    if (rep_ == o.rep_) return true;
    if (rep_->prime != o.rep_->prime) return false;
    return !rep_->prime || rep_->p == o.rep_->p;
}

std::string FieldSpec::to_string() const {
    return rep_->prime ? "Fp:" + rep_->p.get_str() : "Q";
}

FieldElement::FieldElement(const FieldSpec& spec, long v) : spec_(spec), v_(0L) {
    if (spec.has_small_modulus())
        v_ = reduce_mod_small(v, spec.small_modulus());
    else if (spec.is_prime_field())
        v_ = reduce_mod(Integer(v), spec.modulus());
    else
        v_ = Rational(v);
}

FieldElement::FieldElement(const FieldSpec& spec, const Integer& v) : spec_(spec), v_(0L) {
    if (spec.has_small_modulus())
        v_ = reduce_mod(v, spec.modulus()).get_si();
    else if (spec.is_prime_field())
        v_ = reduce_mod(v, spec.modulus());
    else
        v_ = Rational(v);
}

FieldElement::FieldElement(const FieldSpec& spec, const Rational& v) : spec_(spec), v_(0L) {
    if (spec.is_prime_field())
        throw std::invalid_argument("fraction literal in prime field " + spec.to_string());
    Rational r = v;
    r.canonicalize();
    v_ = std::move(r);
}

bool FieldElement::is_zero() const {
    if (std::holds_alternative<long>(v_)) return std::get<long>(v_) == 0;
    if (std::holds_alternative<Integer>(v_)) return std::get<Integer>(v_) == 0;
    return std::get<Rational>(v_) == 0;
}

bool FieldElement::is_one() const {
    if (std::holds_alternative<long>(v_)) return std::get<long>(v_) == 1;
    if (std::holds_alternative<Integer>(v_)) return std::get<Integer>(v_) == 1;
    return std::get<Rational>(v_) == 1;
}

void FieldElement::require_same_field(const FieldElement& o) const {
    if (spec_ != o.spec_)
        throw std::invalid_argument("mismatched fields: " + spec_.to_string() + " vs " +
                                    o.spec_.to_string());
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.require_same_field(b);
    if (std::holds_alternative<long>(a.v_)) {
        long p = a.spec_.small_modulus();
        long r = std::get<long>(a.v_) + std::get<long>(b.v_);
        if (r >= p) r -= p;
        return FieldElement(a.spec_, r, FieldElement::canonical_tag{});
    }
    if (std::holds_alternative<Integer>(a.v_)) {
        Integer r = std::get<Integer>(a.v_) + std::get<Integer>(b.v_);
        if (r >= a.spec_.modulus()) r -= a.spec_.modulus();
        return FieldElement(a.spec_, std::move(r), FieldElement::canonical_tag{});
    }
    return FieldElement(a.spec_, Rational(std::get<Rational>(a.v_) + std::get<Rational>(b.v_)),
                        FieldElement::canonical_tag{});
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.require_same_field(b);
    if (std::holds_alternative<long>(a.v_)) {
        long p = a.spec_.small_modulus();
        long r = std::get<long>(a.v_) - std::get<long>(b.v_);
        if (r < 0) r += p;
        return FieldElement(a.spec_, r, FieldElement::canonical_tag{});
    }
    if (std::holds_alternative<Integer>(a.v_)) {
        Integer r = std::get<Integer>(a.v_) - std::get<Integer>(b.v_);
        if (r < 0) r += a.spec_.modulus();
        return FieldElement(a.spec_, std::move(r), FieldElement::canonical_tag{});
    }
    return FieldElement(a.spec_, Rational(std::get<Rational>(a.v_) - std::get<Rational>(b.v_)),
                        FieldElement::canonical_tag{});
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.require_same_field(b);
    if (std::holds_alternative<long>(a.v_)) {
        long r = (std::get<long>(a.v_) * std::get<long>(b.v_)) % a.spec_.small_modulus();
        return FieldElement(a.spec_, r, FieldElement::canonical_tag{});
    }
    if (std::holds_alternative<Integer>(a.v_)) {
        Integer r = std::get<Integer>(a.v_) * std::get<Integer>(b.v_);
        r %= a.spec_.modulus();
        return FieldElement(a.spec_, std::move(r), FieldElement::canonical_tag{});
    }
    return FieldElement(a.spec_, Rational(std::get<Rational>(a.v_) * std::get<Rational>(b.v_)),
                        FieldElement::canonical_tag{});
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inv();
}

FieldElement FieldElement::operator-() const {
    return FieldElement::zero(spec_) - *this;
}

FieldElement FieldElement::inv() const {
    if (is_zero())
        throw std::domain_error("division by zero in " + spec_.to_string());
    if (std::holds_alternative<long>(v_))
        return FieldElement(spec_, inv_mod_small(std::get<long>(v_), spec_.small_modulus()),
                            canonical_tag{});
    if (std::holds_alternative<Integer>(v_)) {
        Integer r;
        mpz_invert(r.get_mpz_t(), std::get<Integer>(v_).get_mpz_t(), spec_.modulus().get_mpz_t());
        return FieldElement(spec_, std::move(r), canonical_tag{});
    }
    return FieldElement(spec_, Rational(1 / std::get<Rational>(v_)), canonical_tag{});
}

FieldElement FieldElement::pow(long n) const {
    if (n < 0) return inv().pow(-n);
    if (std::holds_alternative<long>(v_)) {
        long p = spec_.small_modulus();
        long base = std::get<long>(v_), r = 1 % p;
        unsigned long e = static_cast<unsigned long>(n);
        while (e > 0) {
            if (e & 1) r = (r * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        return FieldElement(spec_, r, canonical_tag{});
    }
    if (std::holds_alternative<Integer>(v_)) {
        Integer r, e(n);
        mpz_powm(r.get_mpz_t(), std::get<Integer>(v_).get_mpz_t(), e.get_mpz_t(),
                 spec_.modulus().get_mpz_t());
        return FieldElement(spec_, std::move(r), canonical_tag{});
    }
    const Rational& q = std::get<Rational>(v_);
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), q.get_num().get_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(r.get_den().get_mpz_t(), q.get_den().get_mpz_t(), static_cast<unsigned long>(n));
    return FieldElement(spec_, std::move(r), canonical_tag{});
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (spec_ != o.spec_) return false;
    return v_ == o.v_;
}

Integer FieldElement::residue() const {
    if (!spec_.is_prime_field()) throw std::logic_error("residue() on a rational element");
    if (std::holds_alternative<long>(v_)) return Integer(std::get<long>(v_));
    return std::get<Integer>(v_);
}

const Rational& FieldElement::rational() const {
    if (spec_.is_prime_field()) throw std::logic_error("rational() on a prime-field element");
    return std::get<Rational>(v_);
}

std::string FieldElement::to_string() const {
    if (std::holds_alternative<long>(v_)) return std::to_string(std::get<long>(v_));
    if (std::holds_alternative<Integer>(v_)) return std::get<Integer>(v_).get_str();
    const Rational& q = std::get<Rational>(v_);
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
    return os << e.to_string();
}

std::vector<FieldElement> enumerate_field(const FieldSpec& spec) {
    if (!spec.is_prime_field())
        throw std::domain_error("Q is not enumerable");
    std::vector<FieldElement> out;
    for (Integer i = 0; i < spec.modulus(); ++i) out.emplace_back(spec, i);
    return out;
}

}  // namespace ecf
