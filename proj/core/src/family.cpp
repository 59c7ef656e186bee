#include "rayzeta/family.hpp"

#include "rayzeta/error.hpp"

#include <algorithm>

namespace rayzeta {
namespace {

Rational wrap(const Rational& y, WrapBracket bracket) {
  return bracket == WrapBracket::integer_part ? Rational(int_part_unit(y)) : frac_unit(y);
}

Rational eval_k(const std::vector<Rational>& coeffs, std::int64_t k) {
  Rational value = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * k + *it;
  return value;
}

void require_class(std::int64_t q, std::int64_t r) {
  if (q < 2) throw ConfigError("modulus q must be >= 2, got " + std::to_string(q));
  if (r < 0 || r >= q) throw ConfigError("residue r must lie in [0, q-1], got " + std::to_string(r));
}

// One usable sample n = qk + r for a label.
struct Sample {
  std::int64_t k;
  std::shared_ptr<const FamilyInstance> inst;
};

std::vector<Sample> usable_samples(const Family& family, const RayLabel& label, std::int64_t q, std::int64_t r,
                                   const std::vector<std::int64_t>& ks, std::vector<std::int64_t>& skipped) {
  std::vector<Sample> out;
  for (std::int64_t k : ks) {
    auto inst = family.instance(q * k + r);
    if (inst && in_f_delta(inst->field.basis(), q, label)) {
      out.push_back(Sample{k, std::move(inst)});
    } else {
      skipped.push_back(k);
    }
  }
  return out;
}

}  // namespace

unsigned FamilySpec::degree() const {
  int d = 0;
  for (const Polynomial& p : a) d = std::max(d, p.degree());
  return static_cast<unsigned>(d);
}

void FamilySpec::validate() const {
  if (a.empty()) throw ConfigError("family '" + name + "': the continued fraction period is empty");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].has_integer_coeffs()) {
      throw ConfigError("family '" + name + "': a_" + std::to_string(i) + " must have integer coefficients");
    }
  }
  if (f.degree() < 0) throw ConfigError("family '" + name + "': f is zero");
  if (n_min > n_max) throw ConfigError("family '" + name + "': empty n range");
}

std::vector<std::string> preset_names() { return {"rd-n2p2", "quartic-16n4", "adversarial"}; }

FamilySpec preset(std::string_view name) {
  if (name == "rd-n2p2") {
    return FamilySpec{"rd-n2p2", Polynomial::parse("x^2+2"), {Polynomial::parse("2x"), Polynomial::parse("x")}, 1};
  }
  if (name == "quartic-16n4") {
    return FamilySpec{"quartic-16n4",
                      Polynomial::parse("16x^4+32x^3+24x^2+12x+3"),
                      {Polynomial::parse("8x^2+8x+2"), Polynomial::parse("2x+1")},
                      0};
  }
  if (name == "adversarial") {
    // Norm of C + D delta(n) is C^2 + (t+2)CD + (1+t/2)D^2 with t = n(n+1),
    // which is not constant mod 2 on odd n.
    return FamilySpec{"adversarial",
                      Polynomial::parse("(x^4+2x^3+3x^2+2x)/4"),
                      {Polynomial::parse("x^2+x"), Polynomial::parse("2")},
                      1};
  }
  throw ConfigError("unknown family preset '" + std::string(name) + "'");
}

Family::Family(FamilySpec spec) : spec_(std::move(spec)) { spec_.validate(); }

std::shared_ptr<const FamilyInstance> Family::instance(std::int64_t n, std::string* skip_reason) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(n);
  if (it == cache_.end()) {
    Entry entry;
    const std::string at = " at n = " + std::to_string(n);
    if (n < spec_.n_min || n > spec_.n_max) {
      entry.skip_reason = "n = " + std::to_string(n) + " outside the validity range [" + std::to_string(spec_.n_min) +
                          ", " + std::to_string(spec_.n_max) + "]";
    } else {
      const Rational fval = spec_.f(Rational(n));
      if (!is_integer(fval) || fval <= 1) {
        throw HypothesisError("family '" + spec_.name + "': f(n) = " + to_string(fval) +
                              " is not an integer > 1" + at);
      }
      const Integer radicand = numerator(fval);
      if (!is_squarefree(radicand)) {
        entry.skip_reason = "f(" + std::to_string(n) + ") = " + radicand.str() + " is not squarefree";
      } else {
        PeriodicCF cf;
        for (std::size_t i = 0; i < spec_.s(); ++i) {
          const Rational ai = spec_.a[i](Rational(n));
          if (ai < 1) {
            throw HypothesisError("family '" + spec_.name + "': a_" + std::to_string(i) + "(n) = " + to_string(ai) +
                                  " < 1" + at);
          }
          cf.terms.push_back(numerator(ai));
        }
        const QuadElem delta = cf_value(cf, radicand) + Rational(1);
        if ((delta - Rational(2)).sign() <= 0) {
          throw HypothesisError("family '" + spec_.name + "': delta(n) = " + delta.to_string() + " <= 2" + at);
        }
        ModuleBasis basis(delta);
        MinusCF minus = plus_to_minus(cf, max_terms_from_env());
        QuadElem eps = fundamental_unit_totally_positive(basis);
        const bool maximal = basis.order_discriminant() == QuadField(radicand).discriminant();
        entry.instance = std::make_shared<const FamilyInstance>(
            FamilyInstance{n, radicand, std::move(cf), ShintaniField(basis, std::move(eps), std::move(minus)), maximal});
      }
    }
    it = cache_.emplace(n, std::move(entry)).first;
  }
  if (skip_reason != nullptr) *skip_reason = it->second.skip_reason;
  return it->second.instance;
}

GammaTau gamma_tau(const FamilySpec& spec, std::int64_t q, std::int64_t r) {
  require_class(q, r);
  GammaTau out;
  const Integer qq(q);
  for (const Polynomial& a : spec.a) {
    const Rational value = a(Rational(r));
    if (!is_integer(value)) throw ConfigError("a_i(r) is not an integer");
    const Integer g = residue_one(numerator(value), qq);
    out.gamma.push_back(to_int64(g));
    out.tau.push_back((numerator(value) - g) / qq);
  }
  return out;
}

ResidueData residue_data(const FamilySpec& spec, std::int64_t q, std::int64_t r) {
  ResidueData rd;
  rd.q = q;
  rd.r = r;
  rd.gt = gamma_tau(spec, q, r);
  const std::size_t s = spec.s();
  rd.pairs = s % 2 == 0 ? s / 2 : s;
  rd.big_gamma.push_back(0);
  for (std::size_t j = 1; j <= rd.pairs; ++j) rd.big_gamma.push_back(rd.big_gamma.back() + rd.gamma(2 * j - 1));
  rd.c.assign(static_cast<std::size_t>(rd.big_gamma.back()), 2);
  for (std::size_t j = 0; j < rd.pairs; ++j) {
    rd.c[static_cast<std::size_t>(rd.big_gamma[j])] = rd.gamma(2 * j) + 2;
  }
  return rd;
}

NuSeq nu_seq(const ResidueData& rd, const RayLabel& label, std::size_t length) {
  const std::int64_t q = rd.q;
  if (label.c < 0 || label.c >= q || label.d < 0 || label.d >= q) {
    throw ConfigError("label " + label.to_string() + " out of range for q = " + std::to_string(q));
  }
  std::vector<std::int64_t> num{q - label.c, residue_one(label.d, q)};
  num.reserve(length + 2);
  for (std::size_t i = 0; i < length; ++i) {
    num.push_back(residue_one(rd.c[i % rd.c.size()] * num[i + 1] - num[i], q));
  }
  NuSeq out;
  out.values.reserve(num.size());
  for (std::int64_t x : num) out.values.emplace_back(x, q);
  return out;
}

Rational A_im(const FamilySpec& spec, std::size_t i, unsigned m, std::int64_t q, std::int64_t r) {
  if (m < 1) throw std::invalid_argument("A_im is defined for m >= 1");
  const Polynomial& a = spec.a[i % spec.s()];
  Rational total = 0;
  for (int j = static_cast<int>(m); j <= a.degree(); ++j) {
    const auto ju = static_cast<unsigned>(j);
    total += a.coeff(ju) * Rational(binomial(ju, m) * pow(Integer(q), m - 1) * pow(Integer(r), ju - m));
  }
  return total;
}

std::string to_string(const CoefficientFormula& f) {
  std::string out;
  switch (f.variant) {
    case B0Variant::corrected: out = "corrected"; break;
    case B0Variant::statement: out = "statement"; break;
    case B0Variant::proof: out = "proof"; break;
  }
  return out + (f.bracket == WrapBracket::integer_part ? "/integer-part" : "/unit-fraction");
}

std::vector<CoefficientFormula> candidate_formulas() {
  std::vector<CoefficientFormula> out;
  for (WrapBracket b : {WrapBracket::integer_part, WrapBracket::unit_fraction}) {
    for (B0Variant v : {B0Variant::corrected, B0Variant::statement, B0Variant::proof}) out.push_back({v, b});
  }
  return out;
}

std::vector<Rational> coeffs_closed(const FamilySpec& spec, const ResidueData& rd, const RayLabel& label,
                                    const CoefficientFormula& formula) {
  const unsigned d = spec.degree();
  const std::size_t pairs = rd.pairs;
  const std::int64_t q = rd.q;
  const NuSeq nu = nu_seq(rd, label, static_cast<std::size_t>(rd.big_gamma.back()));
  const auto nu_at = [&](std::int64_t i) -> const Rational& { return nu.at(i); };

  std::vector<Rational> out(d + 1, Rational(0));

  // Terms at the positions S_l, l = 1..pairs, where b = a_{2l} + 2.
  for (std::size_t l = 1; l <= pairs; ++l) {
    const Rational& x = nu_at(rd.big_gamma[l]);
    const Rational& xp = nu_at(rd.big_gamma[l] - 1);
    const Rational b2 = bernoulli2(x);
    out[0] += -bernoulli1(x) * bernoulli1(xp) + Rational(q * rd.tau(2 * l) + rd.gamma(2 * l) + 2, 2) * b2;
    for (unsigned m = 1; m <= d; ++m) out[m] += Rational(q, 2) * A_im(spec, 2 * l, m, q, rd.r) * b2;
  }

  // Runs of b = 2 between S_l and S_{l+1}: the x_i form an arithmetic
  // progression mod 1 with difference d_l, so each full window of q steps
  // contributes the same amount W_l.
  for (std::size_t l = 0; l < pairs; ++l) {
    const std::int64_t g0 = rd.big_gamma[l];
    const std::int64_t g1 = rd.big_gamma[l + 1];
    const Rational& x0 = nu_at(g0);
    const Rational dl = frac_unit(nu_at(g0 + 1) - x0);
    const Rational window = (6 * (q * dl * dl + (1 - 2 * dl) * wrap(x0 + dl * q, formula.bracket)) - q) / 12;

    const std::int64_t gamma = rd.gamma(2 * l + 1);
    const Rational wraps =
        (gamma - 1) * dl * dl + (1 - 2 * dl) * wrap(x0 + dl * (gamma - 1), formula.bracket);
    Rational partial = 6 * bernoulli2(nu_at(g1 - 1)) - gamma + 1;
    switch (formula.variant) {
      case B0Variant::corrected: partial += -6 * bernoulli2(x0) + 6 * wraps; break;
      case B0Variant::statement: partial += -6 * bernoulli2(x0) + wraps; break;
      case B0Variant::proof: partial += -6 * bernoulli2(nu_at(g1)) + 6 * wraps; break;
    }
    out[0] += Rational(rd.tau(2 * l + 1)) * window + partial / 12;
    for (unsigned m = 1; m <= d; ++m) out[m] += A_im(spec, 2 * l + 1, m, q, rd.r) * window;
  }
  return out;
}

bool norm_invariance_check(const Family& family, const RayLabel& label, std::int64_t q, std::int64_t r,
                           const std::vector<std::int64_t>& ks) {
  require_class(q, r);
  std::optional<Integer> seen;
  const Integer qq(q);
  for (std::int64_t k : ks) {
    const auto inst = family.instance(q * k + r);
    if (!inst) continue;
    const Integer residue = residue_zero(inst->field.basis().ideal_norm(label.c, label.d), qq);
    if (seen && *seen != residue) return false;
    seen = residue;
  }
  return true;
}

QuasiPolyResult quasi_poly(const Family& family, const RayLabel& label, std::int64_t q, std::int64_t r,
                           const std::vector<std::int64_t>& ks) {
  require_class(q, r);
  const FamilySpec& spec = family.spec();
  if (!norm_invariance_check(family, label, q, r, ks)) {
    throw HypothesisError("family '" + spec.name + "': N((C + D delta(n)) b_n) mod " + std::to_string(q) +
                          " for " + label.to_string() + " depends on k in n = " + std::to_string(q) + "k + " +
                          std::to_string(r));
  }

  QuasiPolyResult out;
  out.q = q;
  out.r = r;
  out.label = label;
  const std::vector<Sample> samples = usable_samples(family, label, q, r, ks, out.skipped_k);
  if (samples.size() < 2) {
    throw HypothesisError("family '" + spec.name + "': fewer than two usable samples for " + label.to_string() +
                          " on n = " + std::to_string(q) + "k + " + std::to_string(r));
  }

  out.orbit = orbit(label, samples.front().inst->field.unit(), q);
  for (const Sample& sample : samples) {
    if (orbit(label, sample.inst->field.unit(), q) != out.orbit) {
      throw HypothesisError("family '" + spec.name + "': orbit of " + label.to_string() + " changes at n = " +
                            std::to_string(sample.inst->n));
    }
  }

  // Direct values: per member over one minus period, and the full partial zeta.
  std::vector<std::vector<Rational>> member_direct;
  std::vector<Rational> total_direct;
  for (const Sample& sample : samples) {
    std::vector<Rational> row;
    for (const RayLabel& member : out.orbit) row.push_back(orbit_member_sum(member, q, sample.inst->field.minus()));
    member_direct.push_back(std::move(row));
    total_direct.push_back(partial_zeta0(label, sample.inst->field, q));
  }

  const ResidueData rd = residue_data(spec, q, r);
  std::optional<std::size_t> per_member_choice;
  std::optional<std::size_t> total_choice;
  std::vector<std::map<RayLabel, std::vector<Rational>>> per_candidate;
  for (const CoefficientFormula& formula : candidate_formulas()) {
    std::map<RayLabel, std::vector<Rational>> members;
    for (const RayLabel& member : out.orbit) members.emplace(member, coeffs_closed(spec, rd, member, formula));
    CandidateReport report{formula, true, true};
    for (std::size_t si = 0; si < samples.size(); ++si) {
      Rational total = 0;
      for (std::size_t mi = 0; mi < out.orbit.size(); ++mi) {
        const Rational value = eval_k(members.at(out.orbit[mi]), samples[si].k);
        if (value != member_direct[si][mi]) report.per_member = false;
        total += value;
      }
      if (total != total_direct[si]) report.orbit_total = false;
    }
    report.per_member = report.per_member && report.orbit_total;
    if (report.per_member && !per_member_choice) per_member_choice = out.candidates.size();
    if (report.orbit_total && !total_choice) total_choice = out.candidates.size();
    out.candidates.push_back(report);
    per_candidate.push_back(std::move(members));
  }

  const std::optional<std::size_t> choice = per_member_choice ? per_member_choice : total_choice;
  if (!choice) {
    Rational predicted = 0;
    for (const auto& [member, coeffs] : per_candidate.front()) predicted += eval_k(coeffs, samples.front().k);
    throw VerificationError("family '" + spec.name + "': no closed form reproduces zeta for " + label.to_string() +
                            " at n = " + std::to_string(samples.front().inst->n) + " (closed form " +
                            to_string(predicted) + ", direct " + to_string(total_direct.front()) + ")");
  }
  out.formula = out.candidates[*choice].formula;
  out.member_coeffs = std::move(per_candidate[*choice]);
  out.coeffs.assign(spec.degree() + 1, Rational(0));
  for (const auto& [member, coeffs] : out.member_coeffs) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += coeffs[i];
  }
  for (const Sample& sample : samples) out.verified_k.push_back(sample.k);
  return out;
}

FitResult fit_oracle(const Family& family, const RayLabel& label, std::int64_t q, std::int64_t r,
                     const std::vector<std::int64_t>& ks) {
  require_class(q, r);
  const unsigned d = family.spec().degree();
  FitResult out;
  const std::vector<Sample> samples = usable_samples(family, label, q, r, ks, out.skipped_k);
  if (samples.size() < d + 2) {
    throw HypothesisError("fit for " + label.to_string() + " on n = " + std::to_string(q) + "k + " +
                          std::to_string(r) + " needs " + std::to_string(d + 2) + " usable samples, found " +
                          std::to_string(samples.size()));
  }
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (const Sample& sample : samples) {
    xs.emplace_back(sample.k);
    ys.push_back(partial_zeta0(label, sample.inst->field, q));
    out.used_k.push_back(sample.k);
  }
  const Polynomial fit = interpolate(std::vector<Rational>(xs.begin(), xs.begin() + d + 1),
                                     std::vector<Rational>(ys.begin(), ys.begin() + d + 1));
  out.consistent = true;
  for (std::size_t i = d + 1; i < xs.size(); ++i) {
    if (fit(xs[i]) != ys[i]) out.consistent = false;
  }
  out.coeffs.assign(d + 1, Rational(0));
  for (unsigned i = 0; i <= d; ++i) out.coeffs[i] = fit.coeff(i);
  return out;
}

}  // namespace rayzeta
