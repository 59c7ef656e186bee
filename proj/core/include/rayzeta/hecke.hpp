#pragma once

#include "rayzeta/family.hpp"
#include "rayzeta/shintani.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rayzeta {

// Dirichlet character mod q of order dividing `order`: chi(a) =
// exp(2 pi i e(a) / order) on units, 0 elsewhere. Built from exponents on
// a generating set of (Z/q)^x; inconsistent or incomplete tables are
// rejected with ConfigError.
class DirichletChar {
 public:
  DirichletChar(std::int64_t q, std::int64_t order, const std::vector<std::pair<std::int64_t, std::int64_t>>& gens);
  static DirichletChar trivial(std::int64_t q);

  std::int64_t modulus() const { return q_; }
  std::int64_t order() const { return order_; }
  // e(a) in [0, order-1]; nullopt when gcd(a, q) > 1.
  std::optional<std::int64_t> exponent(std::int64_t a) const;
  const std::map<std::int64_t, std::int64_t>& table() const { return table_; }
  std::complex<double> value(std::int64_t a) const;
  // Smallest unit residue b with chi(b) = chi(a); nullopt when gcd(a, q) > 1.
  std::optional<std::int64_t> canonical(std::int64_t a) const;

 private:
  std::int64_t q_;
  std::int64_t order_;
  std::map<std::int64_t, std::int64_t> table_;
};

// Formal sum sum_a c_a [chi(a)] over residues a prime to q. Symbols are
// canonical: a is the smallest residue with its character value.
class CharSpanValue {
 public:
  void add(std::int64_t symbol, const Rational& coeff);
  const std::map<std::int64_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  CharSpanValue& operator+=(const CharSpanValue& rhs);
  friend CharSpanValue operator+(CharSpanValue lhs, const CharSpanValue& rhs) { return lhs += rhs; }
  friend bool operator==(const CharSpanValue&, const CharSpanValue&) = default;

  // "1/6*chi(1)-1/3*chi(4)"; "0" for the empty sum.
  std::string to_string() const;
  // Substitutes the character values. Display only.
  std::complex<double> render(const DirichletChar& chi) const;
  // Every coefficient times `scale` is an integer.
  bool scaled_integral(const Integer& scale) const;

 private:
  std::map<std::int64_t, Rational> terms_;
};

// The canonical symbol of [chi(N)], or nullopt for chi(N) = 0.
std::optional<std::int64_t> ray_char_value(const DirichletChar& chi, const Integer& ideal_norm);

// One representative per eps-orbit of F_delta: the smallest label of each
// orbit, in increasing order.
std::vector<RayLabel> orbit_representatives(const ShintaniField& field, std::int64_t q);

struct LValue {
  CharSpanValue value;
  std::vector<RayLabel> representatives;
};

// L(chi, 0, b) = sum over orbit representatives of
// chi(N((C + D delta) b)) zeta_q(0, (C + D delta) b).
LValue hecke_L0(const ShintaniField& field, const DirichletChar& chi, std::size_t max_terms = max_terms_from_env());

// Per residue r, k-form coefficient vectors of L(chi_n, 0, b_n) at
// n = qk + r as formal sums.
struct CharQuasiPoly {
  std::int64_t q = 0;
  unsigned degree = 0;
  std::map<std::int64_t, std::vector<CharSpanValue>> k_coeffs;
  std::map<std::int64_t, std::vector<CharSpanValue>> n_coeffs;
  std::map<std::int64_t, std::vector<std::int64_t>> verified_k;
};

// Assembled from quasi_poly over the orbit representatives of each class
// and checked against hecke_L0 at every usable sample; VerificationError
// on mismatch, HypothesisError if some norm is not invariant or a class has
// fewer than two usable samples.
CharQuasiPoly hecke_L0_family(const Family& family, const DirichletChar& chi, const std::vector<std::int64_t>& ks);

}  // namespace rayzeta
