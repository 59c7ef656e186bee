#pragma once

#include "rayzeta/exactmath.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace rayzeta {

enum class QuasiForm {
  k_form,  // sum_i c_i(r) k^i with n = qk + r
  n_form,  // sum_i c_i(r) n^i
};

// Quasi-polynomial of period q: for each residue r in [0, q-1] a coefficient
// vector of length degree + 1. Residues may be missing when only some
// classes are known; evaluating at a missing class throws.
struct QuasiPoly {
  std::int64_t q = 1;
  unsigned degree = 0;
  QuasiForm form = QuasiForm::k_form;
  std::map<std::int64_t, std::vector<Rational>> coeffs;

  Rational evaluate(const Integer& n) const;
  friend bool operator==(const QuasiPoly&, const QuasiPoly&) = default;
};

// c_j(r) = sum_{i >= j} a_i(r) binom(i, j) (-r)^{i-j} q^{-i}
QuasiPoly k_to_n_form(const QuasiPoly& p);
// a_i(r) = sum_{j >= i} c_j(r) binom(j, i) q^i r^{j-i}
QuasiPoly n_to_k_form(const QuasiPoly& p);

// Is 12 q^{i+2} c_i(r) an integer for every stored coefficient of an n-form?
bool n_form_denominators_ok(const QuasiPoly& p);

}  // namespace rayzeta
