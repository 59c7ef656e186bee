#pragma once

#include "rayzeta/exactmath.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace rayzeta {

// a + b*sqrt(radicand) with exact rational a, b. Elements of different
// fields (radicands) never mix; arithmetic across fields throws.
class QuadElem {
 public:
  QuadElem(Rational a, Rational b, Integer radicand);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& radicand() const { return radicand_; }

  bool is_rational() const { return b_ == 0; }
  bool same_field(const QuadElem& other) const { return radicand_ == other.radicand_; }

  // Sign of the real number under the embedding sqrt(radicand) > 0,
  // decided exactly.
  int sign() const;
  double approx() const;

  QuadElem operator-() const;
  QuadElem& operator+=(const QuadElem& rhs);
  QuadElem& operator-=(const QuadElem& rhs);
  QuadElem& operator*=(const QuadElem& rhs);
  QuadElem& operator/=(const QuadElem& rhs);
  QuadElem& operator+=(const Rational& rhs);
  QuadElem& operator-=(const Rational& rhs);
  QuadElem& operator*=(const Rational& rhs);

  friend QuadElem operator+(QuadElem lhs, const QuadElem& rhs) { return lhs += rhs; }
  friend QuadElem operator-(QuadElem lhs, const QuadElem& rhs) { return lhs -= rhs; }
  friend QuadElem operator*(QuadElem lhs, const QuadElem& rhs) { return lhs *= rhs; }
  friend QuadElem operator/(QuadElem lhs, const QuadElem& rhs) { return lhs /= rhs; }
  friend QuadElem operator+(QuadElem lhs, const Rational& rhs) { return lhs += rhs; }
  friend QuadElem operator-(QuadElem lhs, const Rational& rhs) { return lhs -= rhs; }
  friend QuadElem operator*(QuadElem lhs, const Rational& rhs) { return lhs *= rhs; }
  friend QuadElem operator-(const Rational& lhs, const QuadElem& rhs) { return -rhs + lhs; }

  friend bool operator==(const QuadElem&, const QuadElem&) = default;

  // "a + b*sqrt(D)" with exact rationals.
  std::string to_string() const;

 private:
  void require_same_field(const QuadElem& other) const;

  Rational a_;
  Rational b_;
  Integer radicand_;
};

QuadElem conj(const QuadElem& x);
Rational norm(const QuadElem& x);
Rational trace(const QuadElem& x);
// Both real embeddings positive. Throws std::invalid_argument for x = 0.
bool is_totally_positive(const QuadElem& x);
Integer floor(const QuadElem& x);
Integer ceil(const QuadElem& x);
QuadElem pow(const QuadElem& x, unsigned exponent);

// K = Q(sqrt(radicand)) together with the reduced basis delta of its ring
// of integers, O_K = [1, delta], delta > 1, 0 < delta' < 1.
class QuadField {
 public:
  explicit QuadField(Integer radicand);

  const Integer& radicand() const { return radicand_; }
  const QuadElem& ring_delta() const { return ring_delta_; }
  QuadElem element(Rational a, Rational b = 0) const { return QuadElem(std::move(a), std::move(b), radicand_); }
  // Discriminant of O_K.
  Integer discriminant() const;

 private:
  Integer radicand_;
  QuadElem ring_delta_;
};

// Primitive integer binary quadratic form A x^2 + B x y + C y^2.
struct QuadraticForm {
  Integer a, b, c;
  Integer operator()(const Integer& x, const Integer& y) const { return a * x * x + b * x * y + c * y * y; }
  Integer discriminant() const { return b * b - 4 * a * c; }
};

// The lattice [1, delta] with delta reduced for the minus continued
// fraction: delta > 1 and 0 < delta' < 1. Plays the role of b^{-1}.
class ModuleBasis {
 public:
  explicit ModuleBasis(QuadElem delta);

  const QuadElem& delta() const { return delta_; }
  QuadElem gen0() const { return QuadElem(1, 0, delta_.radicand()); }
  const QuadElem& gen1() const { return delta_; }

  // (u, v) with x = u + v*delta.
  std::pair<Rational, Rational> coords(const QuadElem& x) const;
  QuadElem eval(const Rational& u, const Rational& v) const;

  // N((c + d*delta) b) for the invertible ideal b = [1, delta]^{-1} of the
  // multiplier ring of the lattice: the primitive form attached to the
  // minimal polynomial A t^2 + B t + C of delta, evaluated as
  // A c^2 - B c d + C d^2.
  const QuadraticForm& norm_form() const { return norm_form_; }
  Integer ideal_norm(const Integer& c, const Integer& d) const;
  // N(b) itself (the leading coefficient A).
  const Integer& inverse_lattice_norm() const { return norm_form_.a; }
  // Discriminant of the multiplier ring of the lattice.
  Integer order_discriminant() const { return norm_form_.discriminant(); }

 private:
  QuadElem delta_;
  QuadraticForm norm_form_;
};

// Generator eps > 1 of the totally positive units of the multiplier ring of
// [1, delta], from the period of the plus continued fraction of delta.
QuadElem fundamental_unit_totally_positive(const ModuleBasis& basis,
                                           std::size_t max_period = 1'000'000);
QuadElem fundamental_unit_totally_positive(const QuadField& field,
                                           std::size_t max_period = 1'000'000);

// Integer 2x2 matrix of multiplication by `unit` in the basis [1, delta]:
// columns are the coordinates of unit*1 and unit*delta. Throws
// HypothesisError if `unit` does not preserve the lattice.
struct UnitMatrix {
  Integer m00, m01, m10, m11;  // unit*1 = m00 + m10 delta, unit*delta = m01 + m11 delta
};
UnitMatrix multiplication_matrix(const ModuleBasis& basis, const QuadElem& unit);

// Least lambda >= 1 with eps^lambda = 1 mod q (both [1, delta] coordinates
// of eps^lambda - 1 divisible by q).
std::int64_t unit_index_lambda(const ModuleBasis& basis, std::int64_t q, const QuadElem& eps);

std::pair<Rational, Rational> coords_in_basis(const QuadElem& x, const ModuleBasis& basis);

}  // namespace rayzeta
