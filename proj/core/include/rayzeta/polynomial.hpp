#pragma once

#include "rayzeta/exactmath.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rayzeta {

// Univariate polynomial with exact rational coefficients, lowest power
// first. Trailing zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  // Sums of terms like "8x^2", "-3x", "1/4x^3", "x^4/4", "7"; the variable
  // may be written x or n, '*' is optional. A whole expression may also be
  // given as "(...)/den". Throws ConfigError on malformed input.
  static Polynomial parse(std::string_view text);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : Rational(0); }
  bool has_integer_coeffs() const;

  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // "8x^2+8x+2"; rational coefficients written "1/4x^4".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

// The unique polynomial of degree < xs.size() through the points
// (xs[i], ys[i]). Throws std::invalid_argument on repeated abscissae or
// mismatched sizes.
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace rayzeta
