#pragma once

#include "rayzeta/quadfield.hpp"

#include <cstddef>
#include <vector>

namespace rayzeta {

// One period [[a_0, ..., a_{s-1}]] of a purely periodic (plus) continued
// fraction a_0 + 1/(a_1 + 1/(...)). All terms >= 1.
struct PeriodicCF {
  std::vector<Integer> terms;

  std::size_t period() const { return terms.size(); }
  const Integer& operator[](std::size_t i) const { return terms[i % terms.size()]; }
  friend bool operator==(const PeriodicCF&, const PeriodicCF&) = default;
};

// One period ((b_0, ..., b_{m-1})) of a minus (ceiling) continued fraction
// b_0 - 1/(b_1 - 1/(...)). All terms >= 2.
struct MinusCF {
  std::vector<Integer> terms;

  std::size_t period() const { return terms.size(); }
  const Integer& operator[](std::size_t i) const { return terms[i % terms.size()]; }
  friend bool operator==(const MinusCF&, const MinusCF&) = default;
};

// Full plus expansion of a quadratic irrational: preperiod, then period.
// complete_quotients[k] is x_k with x_0 = x, x_{k+1} = 1/(x_k - a_k).
struct PlusExpansion {
  std::vector<Integer> preperiod;
  std::vector<Integer> period;
  std::vector<QuadElem> complete_quotients;  // preperiod.size() + period.size() entries
};

PlusExpansion plus_expansion(const QuadElem& x, std::size_t max_steps = 1'000'000);

// Requires a reduced x (x > 1, -1 < x' < 0). Throws HypothesisError for a
// rational x or when the expansion has a preperiod (its length is reported).
PeriodicCF plus_cf(const QuadElem& x, std::size_t max_steps = 1'000'000);

// Ceiling algorithm x -> 1/(ceil(x) - x). Requires x > 1, 0 < x' < 1.
MinusCF minus_cf(const QuadElem& x, std::size_t max_steps = 1'000'000);

// Positions of the terms b > 2 in the minus expansion of 1 + value(cf):
// S_0 = 0, S_j = S_{j-1} + a_{2j-1}, for j = 0..pairs. The minus period is
// m = S_pairs with pairs = s/2 for even s and s for odd s.
struct ConversionLayout {
  std::size_t pairs = 0;
  std::vector<Integer> s_index;  // S_0 .. S_pairs
  Integer period() const { return s_index.back(); }
};
ConversionLayout conversion_layout(const PeriodicCF& cf);

// Minus expansion of 1 + value(cf) through b_{S_j} = a_{2j} + 2 and b_i = 2
// elsewhere. Cross-checked against minus_cf; VerificationError on mismatch.
MinusCF plus_to_minus(const PeriodicCF& cf, std::size_t max_terms = 1'000'000);

// The root > 1 of the fixed-point equation of one period, in the field
// Q(sqrt(core)) where core is the squarefree part of the discriminant.
QuadElem cf_value(const PeriodicCF& cf);
// Same value, expressed over the given radicand. Throws HypothesisError if
// the value does not lie in Q(sqrt(radicand)).
QuadElem cf_value(const PeriodicCF& cf, const Integer& radicand);

}  // namespace rayzeta
