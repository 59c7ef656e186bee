#pragma once

#include "rayzeta/contfrac.hpp"
#include "rayzeta/polynomial.hpp"
#include "rayzeta/quasipoly.hpp"
#include "rayzeta/shintani.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rayzeta {

// A family of lattices [1, delta(n)] with delta(n) - 1 = [[a_0(n), ...,
// a_{s-1}(n)]] inside Q(sqrt(f(n))).
struct FamilySpec {
  std::string name;
  Polynomial f;               // may have rational coefficients; must be integral at every n used
  std::vector<Polynomial> a;  // integer coefficients
  std::int64_t n_min = 0;
  std::int64_t n_max = 1'000'000;

  std::size_t s() const { return a.size(); }
  // d = max deg a_i.
  unsigned degree() const;
  // ConfigError on an empty period, non-integer a_i coefficients or an
  // empty n range.
  void validate() const;
};

std::vector<std::string> preset_names();
// "rd-n2p2", "quartic-16n4" and "adversarial". ConfigError if unknown.
FamilySpec preset(std::string_view name);

struct FamilyInstance {
  std::int64_t n = 0;
  Integer radicand;
  PeriodicCF cf;
  ShintaniField field;
  bool maximal_order = false;  // [1, delta(n)] is the ring of integers
};

// Caches instantiated fields by n. Safe to share between threads.
class Family {
 public:
  explicit Family(FamilySpec spec);

  const FamilySpec& spec() const { return spec_; }

  // nullptr (with a reason) when n is outside the validity range or f(n)
  // is not squarefree. HypothesisError when the family data are
  // inconsistent at n: some a_i(n) < 1, value not in Q(sqrt(f(n))),
  // delta(n) <= 2, or the minus conversion disagrees.
  std::shared_ptr<const FamilyInstance> instance(std::int64_t n, std::string* skip_reason = nullptr) const;

 private:
  struct Entry {
    std::shared_ptr<const FamilyInstance> instance;
    std::string skip_reason;
  };

  FamilySpec spec_;
  mutable std::mutex mutex_;
  mutable std::map<std::int64_t, Entry> cache_;
};

// gamma_i(r) in [1, q] and tau_i(r) with a_i(r) = q tau_i(r) + gamma_i(r),
// for i = 0..s-1.
struct GammaTau {
  std::vector<std::int64_t> gamma;
  std::vector<Integer> tau;
};
GammaTau gamma_tau(const FamilySpec& spec, std::int64_t q, std::int64_t r);

// Residue-class data shared by all labels: Gamma_0 = 0,
// Gamma_j = Gamma_{j-1} + gamma_{2j-1}, and c_i = gamma_{2j} + 2 at
// i = Gamma_j, 2 elsewhere, for i = 0..Gamma_pairs - 1.
struct ResidueData {
  std::int64_t q = 0;
  std::int64_t r = 0;
  GammaTau gt;
  std::size_t pairs = 0;
  std::vector<std::int64_t> big_gamma;  // Gamma_0 .. Gamma_pairs
  std::vector<std::int64_t> c;

  std::int64_t gamma(std::size_t i) const { return gt.gamma[i % gt.gamma.size()]; }
  const Integer& tau(std::size_t i) const { return gt.tau[i % gt.tau.size()]; }
};
ResidueData residue_data(const FamilySpec& spec, std::int64_t q, std::int64_t r);

// nu^{-1} = (q - A)/q, nu^0 = <B/q>, nu^{i+1} = <c_i nu^i - nu^{i-1}>,
// with c extended periodically.
struct NuSeq {
  std::vector<Rational> values;  // nu^{-1}, nu^0, ..., nu^{last}
  const Rational& at(std::int64_t i) const { return values.at(static_cast<std::size_t>(i + 1)); }
};
NuSeq nu_seq(const ResidueData& rd, const RayLabel& label, std::size_t length);

// A_{im}(r) = sum_{j >= m} alpha_{ij} binom(j, m) q^{m-1} r^{j-m}, so that
// a_i(qk + r) = q sum_{m >= 1} A_{im}(r) k^m + q tau_i(r) + gamma_i(r).
Rational A_im(const FamilySpec& spec, std::size_t i, unsigned m, std::int64_t q, std::int64_t r);

// Candidate forms of the constant coefficient. `corrected` subtracts
// 6 B2(nu^{Gamma_l}) and scales the wrap term by 6; `statement` keeps the
// wrap term unscaled; `proof` subtracts 6 B2(nu^{Gamma_{l+1}}) instead.
enum class B0Variant { corrected, statement, proof };
// [y]_1 read as the integer part y - <y>, or as <y> itself.
enum class WrapBracket { integer_part, unit_fraction };
struct CoefficientFormula {
  B0Variant variant = B0Variant::corrected;
  WrapBracket bracket = WrapBracket::integer_part;
  friend bool operator==(const CoefficientFormula&, const CoefficientFormula&) = default;
};
std::string to_string(const CoefficientFormula& f);
std::vector<CoefficientFormula> candidate_formulas();

// B^0_{AB}(r), ..., B^d_{AB}(r): the contribution of orbit member (A, B) to
// the zeta value at n = qk + r is sum_m B^m k^m.
std::vector<Rational> coeffs_closed(const FamilySpec& spec, const ResidueData& rd, const RayLabel& label,
                                    const CoefficientFormula& formula = {});

// N((C + D delta(n)) b_n) mod q is the same for all usable n = qk + r.
bool norm_invariance_check(const Family& family, const RayLabel& label, std::int64_t q, std::int64_t r,
                           const std::vector<std::int64_t>& ks);

struct CandidateReport {
  CoefficientFormula formula;
  bool per_member = false;   // every orbit member matches its own direct sum
  bool orbit_total = false;  // the orbit total matches partial_zeta0
};

struct QuasiPolyResult {
  std::int64_t q = 0;
  std::int64_t r = 0;
  RayLabel label;
  std::vector<RayLabel> orbit;
  std::vector<Rational> coeffs;  // A_0 .. A_d in k
  std::map<RayLabel, std::vector<Rational>> member_coeffs;
  CoefficientFormula formula;
  std::vector<CandidateReport> candidates;
  std::vector<std::int64_t> verified_k;
  std::vector<std::int64_t> skipped_k;
};

// Closed-form k-form coefficients of zeta_q(0, (C + D delta(n)) b_n) on the
// class n = qk + r, self-verified against partial_zeta0 at every usable k
// (at least two). HypothesisError if the norm is not invariant, the orbit
// changes with k, or too few samples are usable; VerificationError if no
// candidate formula reproduces the direct values.
QuasiPolyResult quasi_poly(const Family& family, const RayLabel& label, std::int64_t q, std::int64_t r,
                           const std::vector<std::int64_t>& ks);

struct FitResult {
  std::vector<Rational> coeffs;  // degree <= d part, length d + 1
  bool consistent = false;       // all points lie on one polynomial of degree <= d
  std::vector<std::int64_t> used_k;
  std::vector<std::int64_t> skipped_k;
};

// Exact Lagrange interpolation of k -> partial_zeta0 at n = qk + r through
// the first d + 1 usable samples, checked against the remaining ones.
// HypothesisError if fewer than d + 2 samples are usable.
FitResult fit_oracle(const Family& family, const RayLabel& label, std::int64_t q, std::int64_t r,
                     const std::vector<std::int64_t>& ks);

}  // namespace rayzeta
