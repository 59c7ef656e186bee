#include "rayzeta/quasipoly.hpp"

#include <stdexcept>
#include <string>

namespace rayzeta {
namespace {

void require_shape(const QuasiPoly& p) {
  if (p.q < 1) throw std::invalid_argument("quasi-polynomial period must be positive");
  for (const auto& [r, c] : p.coeffs) {
    if (r < 0 || r >= p.q) throw std::invalid_argument("residue " + std::to_string(r) + " out of range");
    if (c.size() != p.degree + 1) throw std::invalid_argument("coefficient vector has the wrong length");
  }
}

Rational horner(const std::vector<Rational>& c, const Rational& x) {
  Rational value = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) value = value * x + *it;
  return value;
}

}  // namespace

Rational QuasiPoly::evaluate(const Integer& n) const {
  const Integer r = residue_zero(n, Integer(q));
  const auto it = coeffs.find(to_int64(r));
  if (it == coeffs.end()) throw std::out_of_range("no coefficients stored for residue " + r.str());
  if (form == QuasiForm::n_form) return horner(it->second, Rational(n));
  return horner(it->second, Rational((n - r) / q));
}

QuasiPoly k_to_n_form(const QuasiPoly& p) {
  require_shape(p);
  if (p.form != QuasiForm::k_form) throw std::invalid_argument("k_to_n_form expects a k-form");
  QuasiPoly out{p.q, p.degree, QuasiForm::n_form, {}};
  for (const auto& [r, a] : p.coeffs) {
    std::vector<Rational> c(p.degree + 1, Rational(0));
    for (unsigned j = 0; j <= p.degree; ++j) {
      for (unsigned i = j; i <= p.degree; ++i) {
        c[j] += a[i] * Rational(binomial(i, j)) * pow(Rational(-r), i - j) / Rational(pow(Integer(p.q), i));
      }
    }
    out.coeffs.emplace(r, std::move(c));
  }
  return out;
}

QuasiPoly n_to_k_form(const QuasiPoly& p) {
  require_shape(p);
  if (p.form != QuasiForm::n_form) throw std::invalid_argument("n_to_k_form expects an n-form");
  QuasiPoly out{p.q, p.degree, QuasiForm::k_form, {}};
  for (const auto& [r, c] : p.coeffs) {
    std::vector<Rational> a(p.degree + 1, Rational(0));
    for (unsigned i = 0; i <= p.degree; ++i) {
      for (unsigned j = i; j <= p.degree; ++j) {
        a[i] += c[j] * Rational(binomial(j, i) * pow(Integer(p.q), i) * pow(Integer(r), j - i));
      }
    }
    out.coeffs.emplace(r, std::move(a));
  }
  return out;
}

bool n_form_denominators_ok(const QuasiPoly& p) {
  if (p.form != QuasiForm::n_form) throw std::invalid_argument("denominator bound is stated for n-forms");
  for (const auto& [r, c] : p.coeffs) {
    for (unsigned i = 0; i < c.size(); ++i) {
      if (!is_integer(c[i] * Rational(12 * pow(Integer(p.q), i + 2)))) return false;
    }
  }
  return true;
}

}  // namespace rayzeta
