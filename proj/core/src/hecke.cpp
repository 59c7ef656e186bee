#include "rayzeta/hecke.hpp"

#include "rayzeta/error.hpp"

#include <deque>
#include <numbers>
#include <set>

namespace rayzeta {
namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

std::int64_t unit_count(std::int64_t q) {
  std::int64_t count = 0;
  for (std::int64_t a = 1; a <= q; ++a) {
    if (gcd64(a % q, q) == 1) ++count;
  }
  return count;
}

CharSpanValue eval_k(const std::vector<CharSpanValue>& coeffs, std::int64_t k) {
  CharSpanValue out;
  Rational power = 1;
  for (const CharSpanValue& c : coeffs) {
    for (const auto& [symbol, coeff] : c.terms()) out.add(symbol, coeff * power);
    power *= k;
  }
  return out;
}

}  // namespace

DirichletChar::DirichletChar(std::int64_t q, std::int64_t order,
                             const std::vector<std::pair<std::int64_t, std::int64_t>>& gens)
    : q_(q), order_(order) {
  if (q < 2) throw ConfigError("character modulus must be >= 2, got " + std::to_string(q));
  if (order < 1) throw ConfigError("character order must be >= 1, got " + std::to_string(order));
  std::vector<std::pair<std::int64_t, std::int64_t>> reduced;
  for (const auto& [g, e] : gens) {
    const std::int64_t gr = residue_zero(g, q);
    if (gcd64(gr, q) != 1) {
      throw ConfigError("character generator " + std::to_string(g) + " is not a unit mod " + std::to_string(q));
    }
    reduced.emplace_back(gr, residue_zero(e, order));
  }
  // Close {1} under multiplication by the generators, checking that the
  // exponents stay consistent.
  table_.emplace(1, 0);
  std::deque<std::int64_t> queue{1};
  while (!queue.empty()) {
    const std::int64_t x = queue.front();
    queue.pop_front();
    for (const auto& [g, e] : reduced) {
      const std::int64_t y = x * g % q;
      const std::int64_t ey = (table_.at(x) + e) % order;
      const auto [it, inserted] = table_.emplace(y, ey);
      if (inserted) {
        queue.push_back(y);
      } else if (it->second != ey) {
        throw ConfigError("character table is not multiplicative: chi(" + std::to_string(y) +
                          ") would need exponents " + std::to_string(it->second) + " and " + std::to_string(ey));
      }
    }
  }
  if (static_cast<std::int64_t>(table_.size()) != unit_count(q)) {
    throw ConfigError("character generators do not generate (Z/" + std::to_string(q) + ")^x");
  }
}

DirichletChar DirichletChar::trivial(std::int64_t q) {
  if (q < 2) throw ConfigError("character modulus must be >= 2, got " + std::to_string(q));
  std::vector<std::pair<std::int64_t, std::int64_t>> gens;
  for (std::int64_t a = 1; a < q; ++a) {
    if (gcd64(a, q) == 1) gens.emplace_back(a, 0);
  }
  return DirichletChar(q, 1, gens);
}

std::optional<std::int64_t> DirichletChar::exponent(std::int64_t a) const {
  const auto it = table_.find(residue_zero(a, q_));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::int64_t> DirichletChar::canonical(std::int64_t a) const {
  const auto e = exponent(a);
  if (!e) return std::nullopt;
  for (const auto& [b, eb] : table_) {
    if (eb == *e) return b;
  }
  return std::nullopt;
}

std::complex<double> DirichletChar::value(std::int64_t a) const {
  const auto e = exponent(a);
  if (!e) return {0.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(*e) / static_cast<double>(order_));
}

void CharSpanValue::add(std::int64_t symbol, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(symbol, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

CharSpanValue& CharSpanValue::operator+=(const CharSpanValue& rhs) {
  for (const auto& [symbol, coeff] : rhs.terms_) add(symbol, coeff);
  return *this;
}

std::string CharSpanValue::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [symbol, coeff] : terms_) {
    if (!out.empty() && coeff > 0) out += "+";
    out += rayzeta::to_string(coeff) + "*chi(" + std::to_string(symbol) + ")";
  }
  return out;
}

std::complex<double> CharSpanValue::render(const DirichletChar& chi) const {
  std::complex<double> total{0.0, 0.0};
  for (const auto& [symbol, coeff] : terms_) total += coeff.convert_to<double>() * chi.value(symbol);
  return total;
}

bool CharSpanValue::scaled_integral(const Integer& scale) const {
  for (const auto& [symbol, coeff] : terms_) {
    if (!is_integer(coeff * Rational(scale))) return false;
  }
  return true;
}

std::optional<std::int64_t> ray_char_value(const DirichletChar& chi, const Integer& ideal_norm) {
  if (ideal_norm <= 0) throw std::invalid_argument("ideal norm must be positive");
  return chi.canonical(to_int64(residue_zero(ideal_norm, Integer(chi.modulus()))));
}

std::vector<RayLabel> orbit_representatives(const ShintaniField& field, std::int64_t q) {
  std::set<RayLabel> seen;
  std::vector<RayLabel> reps;
  for (const RayLabel& label : f_delta(field.basis(), q)) {
    if (seen.contains(label)) continue;
    reps.push_back(label);
    for (const RayLabel& member : orbit(label, field.unit(), q)) seen.insert(member);
  }
  return reps;
}

LValue hecke_L0(const ShintaniField& field, const DirichletChar& chi, std::size_t max_terms) {
  const std::int64_t q = chi.modulus();
  LValue out;
  out.representatives = orbit_representatives(field, q);
  for (const RayLabel& rep : out.representatives) {
    const auto symbol = ray_char_value(chi, field.basis().ideal_norm(rep.c, rep.d));
    if (!symbol) throw VerificationError("label " + rep.to_string() + " in F_delta has a norm sharing a factor with q");
    out.value.add(*symbol, partial_zeta0(rep, field, q, max_terms));
  }
  return out;
}

CharQuasiPoly hecke_L0_family(const Family& family, const DirichletChar& chi, const std::vector<std::int64_t>& ks) {
  const std::int64_t q = chi.modulus();
  const unsigned d = family.spec().degree();
  CharQuasiPoly out;
  out.q = q;
  out.degree = d;
  for (std::int64_t r = 0; r < q; ++r) {
    std::vector<std::pair<std::int64_t, std::shared_ptr<const FamilyInstance>>> samples;
    for (std::int64_t k : ks) {
      if (auto inst = family.instance(q * k + r)) samples.emplace_back(k, std::move(inst));
    }
    if (samples.size() < 2) {
      throw HypothesisError("fewer than two usable samples on n = " + std::to_string(q) + "k + " + std::to_string(r));
    }
    for (std::int64_t c = 0; c < q; ++c) {
      for (std::int64_t dd = 0; dd < q; ++dd) {
        if ((c != 0 || dd != 0) && !norm_invariance_check(family, RayLabel{c, dd}, q, r, ks)) {
          throw HypothesisError("N((C + D delta(n)) b_n) mod " + std::to_string(q) + " for " +
                                RayLabel{c, dd}.to_string() + " depends on k in n = " + std::to_string(q) + "k + " +
                                std::to_string(r));
        }
      }
    }

    const ShintaniField& first = samples.front().second->field;
    std::vector<CharSpanValue> coeffs(d + 1);
    for (const RayLabel& rep : orbit_representatives(first, q)) {
      const QuasiPolyResult qp = quasi_poly(family, rep, q, r, ks);
      const auto symbol = ray_char_value(chi, first.basis().ideal_norm(rep.c, rep.d));
      if (!symbol) throw VerificationError("label " + rep.to_string() + " in F_delta has a norm sharing a factor with q");
      for (unsigned i = 0; i <= d; ++i) coeffs[i].add(*symbol, qp.coeffs[i]);
    }

    for (const auto& [k, inst] : samples) {
      const LValue direct = hecke_L0(inst->field, chi);
      if (!(direct.value == eval_k(coeffs, k))) {
        throw VerificationError("L-value at n = " + std::to_string(inst->n) + ": closed form " +
                                eval_k(coeffs, k).to_string() + ", direct " + direct.value.to_string());
      }
      out.verified_k[r].push_back(k);
    }

    // n-form, one character symbol at a time.
    std::set<std::int64_t> symbols;
    for (const CharSpanValue& c : coeffs) {
      for (const auto& [symbol, coeff] : c.terms()) symbols.insert(symbol);
    }
    std::vector<CharSpanValue> n_coeffs(d + 1);
    for (std::int64_t symbol : symbols) {
      QuasiPoly coordinate{q, d, QuasiForm::k_form, {}};
      std::vector<Rational> column;
      for (const CharSpanValue& c : coeffs) {
        const auto it = c.terms().find(symbol);
        column.push_back(it == c.terms().end() ? Rational(0) : it->second);
      }
      coordinate.coeffs.emplace(r, std::move(column));
      const QuasiPoly n_form = k_to_n_form(coordinate);
      for (unsigned i = 0; i <= d; ++i) n_coeffs[i].add(symbol, n_form.coeffs.at(r)[i]);
    }
    out.k_coeffs.emplace(r, std::move(coeffs));
    out.n_coeffs.emplace(r, std::move(n_coeffs));
  }
  return out;
}

}  // namespace rayzeta
