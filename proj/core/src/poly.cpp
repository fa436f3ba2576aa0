#include "ecfield/poly.hpp"

#include <stdexcept>
#include <utility>

namespace ecf {

Poly::Poly(const FieldSpec& spec, std::vector<FieldElement> coeffs)
    : spec_(spec), c_(std::move(coeffs)) {
    for (const FieldElement& c : c_) {
        if (c.field() != spec_) throw std::invalid_argument("polynomial coefficient field mismatch");
    }
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldSpec& spec, const FieldElement& c) {
    return Poly(spec, {c});
}

Poly Poly::constant(const FieldSpec& spec, long c) {
    return Poly(spec, {FieldElement(spec, c)});
}

Poly Poly::x(const FieldSpec& spec) {
    return Poly(spec, {FieldElement::zero(spec), FieldElement::one(spec)});
}

Poly Poly::monomial(const FieldSpec& spec, const FieldElement& c, int deg) {
    if (deg < 0) throw std::invalid_argument("negative monomial degree");
    std::vector<FieldElement> v(static_cast<size_t>(deg) + 1, FieldElement::zero(spec));
    v.back() = c;
    return Poly(spec, std::move(v));
}

FieldElement Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElement::zero(spec_);
    return c_[static_cast<size_t>(i)];
}

const FieldElement& Poly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.spec_ != b.spec_) throw std::invalid_argument("polynomial field mismatch");
    std::vector<FieldElement> out;
    size_t n = std::max(a.c_.size(), b.c_.size());
    out.reserve(n);
    for (size_t i = 0; i < n; ++i)
        out.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
    return Poly(a.spec_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    return a + (-b);
}

Poly Poly::operator-() const {
    std::vector<FieldElement> out;
    out.reserve(c_.size());
    for (const FieldElement& c : c_) out.push_back(-c);
    return Poly(spec_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.spec_ != b.spec_) throw std::invalid_argument("polynomial field mismatch");
    if (a.is_zero() || b.is_zero()) return Poly(a.spec_);
    std::vector<FieldElement> out(a.c_.size() + b.c_.size() - 1, FieldElement::zero(a.spec_));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.spec_, std::move(out));
}

Poly Poly::operator*(const FieldElement& c) const {
    if (c.is_zero()) return Poly(spec_);
    std::vector<FieldElement> out;
    out.reserve(c_.size());
    for (const FieldElement& a : c_) out.push_back(a * c);
    return Poly(spec_, std::move(out));
}

FieldElement Poly::eval(const FieldElement& x) const {
    FieldElement r = FieldElement::zero(spec_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(spec_);
    std::vector<FieldElement> out;
    out.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        out.push_back(c_[i] * FieldElement(spec_, static_cast<long>(i)));
    return Poly(spec_, std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inv();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (a.spec_ != b.spec_) throw std::invalid_argument("polynomial field mismatch");
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = a;
    Poly quot(a.spec_);
    FieldElement lead_inv = b.leading().inv();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        FieldElement c = rem.leading() * lead_inv;
        Poly term = Poly::monomial(a.spec_, c, shift);
        quot = quot + term;
        rem = rem - term * b;
    }
    return {quot, rem};
}

namespace {

long mod_reduce(const Integer& v, long q) {
    long r = static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(q)));
    return r;
}

long mod_inv(long a, long q) {
    long t = 0, nt = 1, r = q, nr = a;
    while (nr != 0) {
        long s = r / nr;
        t = std::exchange(nt, t - s * nt);
        r = std::exchange(nr, r - s * nr);
    }
    return t < 0 ? t + q : t;
}

// Image of a rational-coefficient polynomial mod q; fails when a
// denominator or the leading numerator vanishes mod q.
bool map_mod(const Poly& p, long q, std::vector<long>& out) {
    out.assign(static_cast<size_t>(p.degree()) + 1, 0);
    for (int i = 0; i <= p.degree(); ++i) {
        Rational c = p.coeff(i).rational();
        long den = mod_reduce(c.get_den(), q);
        if (den == 0) return false;
        long num = mod_reduce(c.get_num(), q);
        out[static_cast<size_t>(i)] = num * mod_inv(den, q) % q;
    }
    return out.back() != 0;
}

// Rational-coefficient Euclid explodes; a coprime image mod q certifies
// gcd = 1 over Q (the true gcd divides the image's gcd once degrees are
// preserved), which is the overwhelmingly common case in canonical forms.
bool certainly_coprime(const Poly& a, const Poly& b) {
    static const long primes[] = {1000003, 999983, 1000033, 1000037};
    for (long q : primes) {
        std::vector<long> u, v;
        if (!map_mod(a, q, u) || !map_mod(b, q, v)) continue;
        while (!v.empty()) {
            long lead_inv = mod_inv(v.back(), q);
            while (u.size() >= v.size()) {
                long c = u.back() * lead_inv % q;
                size_t off = u.size() - v.size();
                for (size_t i = 0; i < v.size(); ++i)
                    u[off + i] = ((u[off + i] - c * v[i]) % q + q) % q;
                while (!u.empty() && u.back() == 0) u.pop_back();
                if (u.empty()) break;
            }
            std::swap(u, v);
        }
        return u.size() == 1;  // constant gcd mod q
    }
    return false;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.field().is_rationals() && a.degree() > 0 && b.degree() > 0 &&
        certainly_coprime(a, b))
        return Poly::constant(a.field(), 1);
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = divmod(u, v).second;
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        FieldElement c = coeff(i);
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (neg) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace ecf
