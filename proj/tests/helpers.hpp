#pragma once

#include "rayzeta/exactmath.hpp"
#include "rayzeta/quadfield.hpp"

namespace rayzeta::testing {

inline Rational R(const char* text) { return parse_rational(text); }
inline QuadElem Q(const Rational& a, const Rational& b, long radicand) { return QuadElem(a, b, Integer(radicand)); }

}  // namespace rayzeta::testing
