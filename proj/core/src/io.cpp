#include "ecfield/io.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace ecf {

namespace {

std::string strip(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == delim) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

Integer parse_integer(const std::string& raw) {
    std::string t = strip(raw);
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("malformed integer literal '" + raw + "'");
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            throw std::invalid_argument("malformed integer literal '" + raw + "'");
    return Integer(t);
}

}  // namespace

FieldSpec parse_field_spec(const std::string& text) {
    std::string t = strip(text);
    if (t == "Q") return FieldSpec::rationals();
    const std::string prefix = "Fp:";
    if (t.rfind(prefix, 0) == 0) return FieldSpec::prime_field(parse_integer(t.substr(prefix.size())));
    throw std::invalid_argument("malformed field '" + text + "' (expected Fp:<p> or Q)");
}

FieldElement parse_field_element(const FieldSpec& spec, const std::string& text) {
    std::string t = strip(text);
    size_t slash = t.find('/');
    if (slash == std::string::npos) return FieldElement(spec, parse_integer(t));
    Integer num = parse_integer(t.substr(0, slash));
    Integer den = parse_integer(t.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in literal '" + text + "'");
    return FieldElement(spec, Rational(num) / Rational(den));
}

WeierstrassCurve parse_curve(const FieldSpec& spec, const std::string& text) {
    std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 5)
        throw std::invalid_argument("curve needs five coefficients a1,a2,a3,a4,a6");
    std::vector<FieldElement> a;
    for (const std::string& p : parts) a.push_back(parse_field_element(spec, p));
    return WeierstrassCurve(spec, a[0], a[1], a[2], a[3], a[4]);
}

ProjectivePoint parse_point(const FieldSpec& spec, const std::string& text) {
    std::string t = strip(text);
    if (t == "O") return ProjectivePoint::infinity(spec);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw std::invalid_argument("malformed point '" + text + "'");
    std::string inner = t.substr(1, t.size() - 2);
    if (inner.find(':') != std::string::npos) {
        std::vector<std::string> parts = split(inner, ':');
        if (parts.size() != 3) throw std::invalid_argument("malformed point '" + text + "'");
        return ProjectivePoint(parse_field_element(spec, parts[0]),
                               parse_field_element(spec, parts[1]),
                               parse_field_element(spec, parts[2]));
    }
    std::vector<std::string> parts = split(inner, ',');
    if (parts.size() != 2) throw std::invalid_argument("malformed point '" + text + "'");
    return ProjectivePoint::affine(parse_field_element(spec, parts[0]),
                                   parse_field_element(spec, parts[1]));
}

}  // namespace ecf
