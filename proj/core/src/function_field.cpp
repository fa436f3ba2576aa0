#include "ecfield/function_field.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace ecf {

namespace {

// Affine curve relation y^2 + h(x) y = s(x).
Poly curve_h(const WeierstrassCurve& c) {
    return Poly(c.field(), {c.a3(), c.a1()});
}

Poly curve_s(const WeierstrassCurve& c) {
    return Poly(c.field(), {c.a6(), c.a4(), c.a2(), FieldElement::one(c.field())});
}

}  // namespace

void TriPoly::add_term(const std::array<int, 3>& e, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TriPoly TriPoly::monomial(const FieldSpec& spec, const FieldElement& c, int i, int j, int k) {
    if (i < 0 || j < 0 || k < 0) throw std::invalid_argument("negative exponent");
    TriPoly p(spec);
    p.add_term({i, j, k}, c);
    return p;
}

TriPoly TriPoly::constant(const FieldSpec& spec, const FieldElement& c) {
    return monomial(spec, c, 0, 0, 0);
}

TriPoly TriPoly::variable(const FieldSpec& spec, int axis) {
    std::array<int, 3> e{0, 0, 0};
    e.at(static_cast<size_t>(axis)) = 1;
    TriPoly p(spec);
    p.add_term(e, FieldElement::one(spec));
    return p;
}

TriPoly TriPoly::linear_form(const Coord3& r) {
    const FieldSpec& spec = r[0].field();
    TriPoly p(spec);
    p.add_term({1, 0, 0}, r[0]);
    p.add_term({0, 1, 0}, r[1]);
    p.add_term({0, 0, 1}, r[2]);
    return p;
}

TriPoly TriPoly::weierstrass(const FieldSpec& spec, const FieldElement& a1, const FieldElement& a2,
                             const FieldElement& a3, const FieldElement& a4,
                             const FieldElement& a6) {
    TriPoly w(spec);
    FieldElement one = FieldElement::one(spec);
    w.add_term({0, 2, 1}, one);
    w.add_term({1, 1, 1}, a1);
    w.add_term({0, 1, 2}, a3);
    w.add_term({3, 0, 0}, -one);
    w.add_term({2, 0, 1}, -a2);
    w.add_term({1, 0, 2}, -a4);
    w.add_term({0, 0, 3}, -a6);
    return w;
}

int TriPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

bool TriPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = e[0] + e[1] + e[2];
        if (d == -1) d = t;
        if (t != d) return false;
    }
    return true;
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
    if (a.spec_ != b.spec_) throw std::invalid_argument("polynomial field mismatch");
    TriPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

TriPoly operator-(const TriPoly& a, const TriPoly& b) {
    return a + (-b);
}

TriPoly TriPoly::operator-() const {
    TriPoly out(spec_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    if (a.spec_ != b.spec_) throw std::invalid_argument("polynomial field mismatch");
    TriPoly out(a.spec_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

TriPoly TriPoly::operator*(const FieldElement& c) const {
    TriPoly out(spec_);
    if (c.is_zero()) return out;
    for (const auto& [e, t] : terms_) out.terms_.emplace(e, t * c);
    return out;
}

TriPoly TriPoly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power of a polynomial");
    TriPoly out = TriPoly::constant(spec_, FieldElement::one(spec_));
    for (int i = 0; i < n; ++i) out = out * *this;
    return out;
}

TriPoly TriPoly::derivative(int axis) const {
    TriPoly out(spec_);
    for (const auto& [e, c] : terms_) {
        int k = e.at(static_cast<size_t>(axis));
        if (k == 0) continue;
        std::array<int, 3> f = e;
        f[static_cast<size_t>(axis)] = k - 1;
        out.add_term(f, c * FieldElement(spec_, k));
    }
    return out;
}

FieldElement TriPoly::eval(const Coord3& p) const {
    FieldElement r = FieldElement::zero(spec_);
    for (const auto& [e, c] : terms_)
        r += c * p[0].pow(e[0]) * p[1].pow(e[1]) * p[2].pow(e[2]);
    return r;
}

Coord3 TriPoly::gradient(const ProjectivePoint& p) const {
    Coord3 coords = p.coords();
    return {derivative(0).eval(coords), derivative(1).eval(coords), derivative(2).eval(coords)};
}

std::vector<Poly> TriPoly::dehomogenize_xy() const {
    int maxy = 0;
    for (const auto& [e, c] : terms_) maxy = std::max(maxy, e[1]);
    std::vector<Poly> out(static_cast<size_t>(maxy) + 1, Poly(spec_));
    for (const auto& [e, c] : terms_)
        out[static_cast<size_t>(e[1])] =
            out[static_cast<size_t>(e[1])] + Poly::monomial(spec_, c, e[0]);
    return out;
}

std::string TriPoly::to_string() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"X", "Y", "Z"};
    std::string out;
    // Highest-degree first reads naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
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
        std::string vars;
        for (int axis = 0; axis < 3; ++axis) {
            int k = e[static_cast<size_t>(axis)];
            if (k == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[axis];
            if (k > 1) vars += "^" + std::to_string(k);
        }
        if (vars.empty()) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += vars;
        }
    }
    return out;
}

HomogeneousFraction::HomogeneousFraction(TriPoly num, TriPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.field() != den_.field()) throw std::invalid_argument("fraction field mismatch");
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (!num_.is_homogeneous() || !den_.is_homogeneous())
        throw std::invalid_argument("inhomogeneous projective expression");
    if (!num_.is_zero() && num_.total_degree() != den_.total_degree())
        throw std::invalid_argument("numerator and denominator degrees differ");
}

FieldElement HomogeneousFraction::eval(const ProjectivePoint& p) const {
    FieldElement dv = den_.eval(p.coords());
    if (dv.is_zero())
        throw std::domain_error("denominator vanishes at " + p.to_string());
    return num_.eval(p.coords()) / dv;
}

std::string HomogeneousFraction::to_string() const {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

CurveFunction::CurveFunction(const WeierstrassCurve& curve, Poly a, Poly b, Poly d)
    : curve_(curve), a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (a_.field() != curve.field() || b_.field() != curve.field() || d_.field() != curve.field())
        throw std::invalid_argument("curve function field mismatch");
    if (d_.is_zero()) throw std::domain_error("zero denominator in K(C)");
    canonicalize();
}

void CurveFunction::canonicalize() {
    if (a_.is_zero() && b_.is_zero()) {
        d_ = Poly::constant(curve_.field(), 1);
        return;
    }
    Poly g = gcd(gcd(a_, b_), d_);
    if (g.degree() > 0) {
        a_ = divmod(a_, g).first;
        b_ = divmod(b_, g).first;
        d_ = divmod(d_, g).first;
    }
    FieldElement inv_lead = d_.leading().inv();
    a_ = a_ * inv_lead;
    b_ = b_ * inv_lead;
    d_ = d_ * inv_lead;
}

CurveFunction CurveFunction::zero(const WeierstrassCurve& curve) {
    const FieldSpec& k = curve.field();
    return CurveFunction(curve, Poly(k), Poly(k), Poly::constant(k, 1));
}

CurveFunction CurveFunction::one(const WeierstrassCurve& curve) {
    return constant(curve, FieldElement::one(curve.field()));
}

CurveFunction CurveFunction::constant(const WeierstrassCurve& curve, const FieldElement& c) {
    const FieldSpec& k = curve.field();
    return CurveFunction(curve, Poly::constant(k, c), Poly(k), Poly::constant(k, 1));
}

CurveFunction CurveFunction::coordinate_x(const WeierstrassCurve& curve) {
    const FieldSpec& k = curve.field();
    return CurveFunction(curve, Poly::x(k), Poly(k), Poly::constant(k, 1));
}

CurveFunction CurveFunction::coordinate_y(const WeierstrassCurve& curve) {
    const FieldSpec& k = curve.field();
    return CurveFunction(curve, Poly(k), Poly::constant(k, 1), Poly::constant(k, 1));
}

CurveFunction CurveFunction::from_xy_polynomial(const WeierstrassCurve& curve,
                                                const std::vector<Poly>& coeffs_by_y_power) {
    const FieldSpec& k = curve.field();
    Poly h = curve_h(curve), s = curve_s(curve);
    // Fold y^j down with y^2 = s - h y, highest power first.
    std::vector<Poly> c = coeffs_by_y_power;
    while (c.size() > 2) {
        Poly top = c.back();
        c.pop_back();
        size_t j = c.size();  // top was the coefficient of y^j
        c[j - 2] = c[j - 2] + top * s;
        c[j - 1] = c[j - 1] - top * h;
    }
    Poly a = c.empty() ? Poly(k) : c[0];
    Poly b = c.size() > 1 ? c[1] : Poly(k);
    return CurveFunction(curve, a, b, Poly::constant(k, 1));
}

bool CurveFunction::is_constant() const {
    return b_.is_zero() && d_.degree() == 0 && a_.degree() <= 0;
}

FieldElement CurveFunction::constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value() of a non-constant function");
    return a_.coeff(0);
}

CurveFunction operator+(const CurveFunction& f, const CurveFunction& g) {
    if (f.curve_ != g.curve_) throw std::invalid_argument("curve mismatch in K(C)");
    // lcm denominator; cancelling the shared factor up front keeps the
    // final canonicalization gcd trivial in the common case.
    Poly shared = gcd(f.d_, g.d_);
    Poly f_scale = divmod(g.d_, shared).first;
    Poly g_scale = divmod(f.d_, shared).first;
    return CurveFunction(f.curve_, f.a_ * f_scale + g.a_ * g_scale,
                         f.b_ * f_scale + g.b_ * g_scale, f.d_ * f_scale);
}

CurveFunction operator-(const CurveFunction& f, const CurveFunction& g) {
    return f + (-g);
}

CurveFunction CurveFunction::operator-() const {
    return CurveFunction(curve_, -a_, -b_, d_);
}

CurveFunction CurveFunction::operator*(const FieldElement& c) const {
    return CurveFunction(curve_, a_ * c, b_ * c, d_);
}

CurveFunction operator*(const CurveFunction& f, const CurveFunction& g) {
    if (f.curve_ != g.curve_) throw std::invalid_argument("curve mismatch in K(C)");
    Poly h = curve_h(f.curve_), s = curve_s(f.curve_);
    // (a1 + b1 y)(a2 + b2 y) with y^2 = s - h y.
    Poly num_a = f.a_ * g.a_ + f.b_ * g.b_ * s;
    Poly num_b = f.a_ * g.b_ + f.b_ * g.a_ - f.b_ * g.b_ * h;
    return CurveFunction(f.curve_, num_a, num_b, f.d_ * g.d_);
}

CurveFunction CurveFunction::inv() const {
    if (is_zero()) throw std::domain_error("division by the zero function");
    Poly h = curve_h(curve_), s = curve_s(curve_);
    // Conjugate of a + b y is (a - b h) - b y; the norm lies in K[x].
    Poly norm = a_ * a_ - a_ * b_ * h - b_ * b_ * s;
    Poly conj_a = a_ - b_ * h;
    Poly conj_b = -b_;
    // 1/((a+by)/d) = d (conj) / norm.
    return CurveFunction(curve_, d_ * conj_a, d_ * conj_b, norm);
}

CurveFunction operator/(const CurveFunction& f, const CurveFunction& g) {
    return f * g.inv();
}

CurveFunction CurveFunction::pow(long n) const {
    if (n < 0) return inv().pow(-n);
    CurveFunction out = CurveFunction::one(curve_);
    CurveFunction base = *this;
    while (n > 0) {
        if (n & 1) out = out * base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

bool CurveFunction::operator==(const CurveFunction& o) const {
    return curve_ == o.curve_ && a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
}

long CurveFunction::num_weighted_degree() const {
    long w = 0;
    if (!a_.is_zero()) w = std::max(w, 2L * a_.degree());
    if (!b_.is_zero()) w = std::max(w, 2L * b_.degree() + 3);
    return w;
}

HomogeneousFraction CurveFunction::homogenize() const {
    const FieldSpec& k = curve_.field();
    int n = std::max({a_.degree(), b_.degree() + 1, d_.degree(), 0});
    TriPoly num(k), den(k);
    for (int i = 0; i <= a_.degree(); ++i)
        num = num + TriPoly::monomial(k, a_.coeff(i), i, 0, n - i);
    for (int i = 0; i <= b_.degree(); ++i)
        num = num + TriPoly::monomial(k, b_.coeff(i), i, 1, n - i - 1);
    for (int i = 0; i <= d_.degree(); ++i)
        den = den + TriPoly::monomial(k, d_.coeff(i), i, 0, n - i);
    return HomogeneousFraction(std::move(num), std::move(den));
}

std::string CurveFunction::to_string() const {
    if (is_zero()) return "0";
    std::string num;
    if (!a_.is_zero()) num = a_.to_string();
    if (!b_.is_zero()) {
        std::string bs;
        if (b_.degree() == 0) {
            FieldElement c = b_.coeff(0);
            if (c.is_one())
                bs = "y";
            else
                bs = c.to_string() + "*y";
        } else {
            bs = "(" + b_.to_string() + ")*y";
        }
        num = num.empty() ? bs : num + " + " + bs;
    }
    if (d_.degree() == 0) return num;  // monic, so d = 1
    return "(" + num + ")/(" + d_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const CurveFunction& f) {
    return os << f.to_string();
}

CurveFunction from_homogeneous(const WeierstrassCurve& curve, const HomogeneousFraction& hf) {
    if (hf.num().field() != curve.field())
        throw std::invalid_argument("fraction/curve field mismatch");
    CurveFunction den = CurveFunction::from_xy_polynomial(curve, hf.den().dehomogenize_xy());
    if (den.is_zero())
        throw std::domain_error("denominator vanishes identically on the curve");
    CurveFunction num = CurveFunction::from_xy_polynomial(curve, hf.num().dehomogenize_xy());
    return num / den;
}

}  // namespace ecf
