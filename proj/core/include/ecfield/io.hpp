#pragma once

#include <string>

#include "ecfield/curve.hpp"

namespace ecf {

/// "Fp:<p>" or "Q".
FieldSpec parse_field_spec(const std::string& text);

/// Integer literal, or "a/b" over Q. Signs allowed.
FieldElement parse_field_element(const FieldSpec& spec, const std::string& text);

/// Comma-separated "a1,a2,a3,a4,a6".
WeierstrassCurve parse_curve(const FieldSpec& spec, const std::string& text);

/// "(x,y)" affine, "(X:Y:Z)" projective, or "O" for the point at infinity.
ProjectivePoint parse_point(const FieldSpec& spec, const std::string& text);

}  // namespace ecf
