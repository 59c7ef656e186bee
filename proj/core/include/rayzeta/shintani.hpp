#pragma once

#include "rayzeta/contfrac.hpp"
#include "rayzeta/quadfield.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rayzeta {

// (C, D) with 0 <= C, D <= q-1, labelling the class of (C + D delta) b.
struct RayLabel {
  std::int64_t c = 0;
  std::int64_t d = 0;

  auto operator<=>(const RayLabel&) const = default;
  std::string to_string() const;
};

// x_i in (0, 1] and y_i in [0, 1) for i = 0..count.
struct XYSeq {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
};

// Cap on lambda*m, read from RAYZETA_MAX_TERMS (default 10^6).
std::size_t max_terms_from_env();

// Everything about a single lattice [1, delta] that does not depend on q:
// the totally positive fundamental unit, its action matrix and the minus
// continued fraction of delta.
class ShintaniField {
 public:
  explicit ShintaniField(ModuleBasis basis);
  // Uses a caller-supplied unit; it must be a totally positive unit > 1
  // preserving the lattice.
  ShintaniField(ModuleBasis basis, QuadElem eps);
  ShintaniField(ModuleBasis basis, QuadElem eps, MinusCF minus);

  const ModuleBasis& basis() const { return basis_; }
  const QuadElem& eps() const { return eps_; }
  const UnitMatrix& unit() const { return unit_; }
  const MinusCF& minus() const { return minus_; }
  std::size_t m() const { return minus_.period(); }
  std::int64_t lambda(std::int64_t q) const { return unit_index_lambda(basis_, q, eps_); }

 private:
  ModuleBasis basis_;
  QuadElem eps_;
  UnitMatrix unit_;
  MinusCF minus_;
};

// All labels with gcd(N((C + D delta) b), q) = 1 in lexicographic order.
// ConfigError for q < 2, HypothesisError if N(b) is not prime to q.
std::vector<RayLabel> f_delta(const ModuleBasis& basis, std::int64_t q);
bool in_f_delta(const ModuleBasis& basis, std::int64_t q, const RayLabel& label);

// eps * (C + D delta) reduced mod q (coordinates in [0, q-1]).
RayLabel eps_act(const QuadElem& eps, const RayLabel& label, const ModuleBasis& basis, std::int64_t q);
RayLabel eps_act(const UnitMatrix& unit, const RayLabel& label, std::int64_t q);

// Seed first, then successive images under eps_act until the cycle closes.
std::vector<RayLabel> orbit(const RayLabel& label, const UnitMatrix& unit, std::int64_t q);
std::vector<RayLabel> orbit(const RayLabel& label, const QuadElem& eps, const ModuleBasis& basis, std::int64_t q);

// P_{-1} = delta, P_0 = 1, P_{i+1} = b_i P_i - P_{i-1}; returns
// P_{-1}, ..., P_count.
std::vector<QuadElem> boundary_points(const ModuleBasis& basis, const MinusCF& minus, std::size_t count);
std::vector<QuadElem> boundary_points(const ModuleBasis& basis, std::size_t count);

// x_0 = <D/q>, x_{-1} = (q - C)/q, x_{i+1} = <b_i x_i - x_{i-1}>,
// y_i = 1 - x_{i-1}.
XYSeq yamamoto_xy(const RayLabel& label, std::int64_t q, const MinusCF& minus, std::size_t count);

// Numerators of the same recursion: X_i = q x_i in [1, q], i = -1..count,
// stored at offset 1. Unlike partial_zeta0 this accepts any (C, D) in
// [0, q-1]^2, including (0, 0).
std::vector<std::int64_t> yamamoto_numerators(const RayLabel& label, std::int64_t q, const MinusCF& minus,
                                              std::size_t count);

// The representative x P_{i-1} + y P_i of (C + D delta)/q + [1, delta] with
// x in (0, 1], y in [0, 1), by solving the unimodular system.
std::pair<Rational, Rational> xy_direct(const RayLabel& label, std::int64_t q, const ModuleBasis& basis,
                                        const QuadElem& p_prev, const QuadElem& p_cur);

// sum_{i=1}^{terms} -B1(x_i) B1(x_{i-1}) + (b_i/2) B2(x_i)
Rational zeta_sum(const RayLabel& label, std::int64_t q, const MinusCF& minus, std::size_t terms);
// The same sum over one minus period (terms = m), in integer arithmetic.
Rational orbit_member_sum(const RayLabel& label, std::int64_t q, const MinusCF& minus);

// zeta_q(0, (C + D delta) b), computed as the lambda*m sum and as the sum of
// orbit_member_sum over the orbit; VerificationError if they differ.
// ConfigError if the label is not in F_delta.
Rational partial_zeta0(const RayLabel& label, const ShintaniField& field, std::int64_t q,
                       std::size_t max_terms = max_terms_from_env());

}  // namespace rayzeta
