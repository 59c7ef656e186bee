#include "rayzeta/contfrac.hpp"

#include "rayzeta/error.hpp"

#include <map>
#include <utility>

namespace rayzeta {
namespace {

Integer floor_div(const Integer& a, const Integer& b) { return floor(Rational(a, b)); }

// (p + sqrt(d)) / q with q | d - p^2 and d = root^2 * radicand, so that the
// value is p/q + (root/q) sqrt(radicand).
struct Surd {
  Integer p, q, d, root, radicand;

  QuadElem value() const { return QuadElem(Rational(p, q), Rational(root, q), radicand); }

  Integer floor_value() const {
    const Integer s = isqrt(d);
    return q > 0 ? floor_div(p + s, q) : floor_div(p + s + 1, q);
  }

  // x -> 1 / (x - a)
  void plus_step(const Integer& a) {
    p = a * q - p;
    q = (d - p * p) / q;
  }

  // x -> 1 / (b - x)
  void minus_step(const Integer& b) {
    p = b * q - p;
    q = (p * p - d) / q;
  }
};

Surd to_surd(const QuadElem& x) {
  if (x.is_rational()) throw HypothesisError(x.to_string() + " is rational");
  const Integer l = boost::multiprecision::lcm(denominator(x.a()), denominator(x.b()));
  Integer p = numerator(x.a()) * (l / denominator(x.a()));
  Integer root = numerator(x.b()) * (l / denominator(x.b()));
  Integer q = l;
  if (root < 0) {
    p = -p;
    q = -q;
    root = -root;
  }
  Surd s{p, q, root * root * x.radicand(), root, x.radicand()};
  if ((s.d - s.p * s.p) % s.q != 0) {
    const Integer scale = s.q < 0 ? Integer(-s.q) : s.q;
    s.p *= scale;
    s.q *= scale;
    s.root *= scale;
    s.d *= scale * scale;
  }
  return s;
}

// Fixed-point data of one period: qq x^2 + (qp - p) x - pp = 0.
struct PeriodMatrix {
  Integer p = 1, pp = 0, qq = 0, qp = 1;
};

PeriodMatrix period_matrix(const PeriodicCF& cf) {
  if (cf.terms.empty()) throw ConfigError("continued fraction period is empty");
  PeriodMatrix m;
  for (const Integer& a : cf.terms) {
    if (a < 1) throw HypothesisError("continued fraction terms must be >= 1, got " + a.str());
    m = PeriodMatrix{a * m.p + m.pp, m.p, a * m.qq + m.qp, m.qq};
  }
  return m;
}

}  // namespace

PlusExpansion plus_expansion(const QuadElem& x, std::size_t max_steps) {
  Surd state = to_surd(x);
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  std::vector<Integer> terms;
  PlusExpansion out;
  for (std::size_t k = 0; k <= max_steps; ++k) {
    auto [it, inserted] = seen.emplace(std::make_pair(state.p, state.q), k);
    if (!inserted) {
      const std::size_t start = it->second;
      out.preperiod.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(start));
      out.period.assign(terms.begin() + static_cast<std::ptrdiff_t>(start), terms.end());
      return out;
    }
    out.complete_quotients.push_back(state.value());
    const Integer a = state.floor_value();
    terms.push_back(a);
    state.plus_step(a);
  }
  throw HypothesisError("continued fraction of " + x.to_string() + " did not become periodic within " +
                        std::to_string(max_steps) + " steps");
}

PeriodicCF plus_cf(const QuadElem& x, std::size_t max_steps) {
  if (x.is_rational()) throw HypothesisError(x.to_string() + " is rational; no periodic expansion");
  PlusExpansion e = plus_expansion(x, max_steps);
  if (!e.preperiod.empty()) {
    throw HypothesisError("continued fraction of " + x.to_string() + " is not purely periodic (preperiod length " +
                          std::to_string(e.preperiod.size()) + ")");
  }
  return PeriodicCF{std::move(e.period)};
}

MinusCF minus_cf(const QuadElem& x, std::size_t max_steps) {
  if (x.is_rational()) throw HypothesisError(x.to_string() + " is rational; no periodic expansion");
  const QuadElem xc = conj(x);
  if ((x - Rational(1)).sign() <= 0 || xc.sign() <= 0 || (xc - Rational(1)).sign() >= 0) {
    throw HypothesisError(x.to_string() + " is not reduced for the minus expansion (need x > 1, 0 < x' < 1)");
  }
  Surd state = to_surd(x);
  const auto start = std::make_pair(state.p, state.q);
  MinusCF out;
  for (std::size_t k = 0; k < max_steps; ++k) {
    const Integer b = state.floor_value() + 1;
    out.terms.push_back(b);
    state.minus_step(b);
    if (std::make_pair(state.p, state.q) == start) return out;
  }
  throw HypothesisError("minus continued fraction of " + x.to_string() + " exceeds " + std::to_string(max_steps) +
                        " terms");
}

ConversionLayout conversion_layout(const PeriodicCF& cf) {
  const std::size_t s = cf.period();
  if (s == 0) throw ConfigError("continued fraction period is empty");
  ConversionLayout layout;
  layout.pairs = s % 2 == 0 ? s / 2 : s;
  layout.s_index.reserve(layout.pairs + 1);
  layout.s_index.push_back(0);
  for (std::size_t j = 1; j <= layout.pairs; ++j) layout.s_index.push_back(layout.s_index.back() + cf[2 * j - 1]);
  return layout;
}

MinusCF plus_to_minus(const PeriodicCF& cf, std::size_t max_terms) {
  const ConversionLayout layout = conversion_layout(cf);
  if (layout.period() > max_terms) {
    throw HypothesisError("minus period " + layout.period().str() + " exceeds the term cap");
  }
  const auto m = static_cast<std::size_t>(to_int64(layout.period()));
  MinusCF formula{std::vector<Integer>(m, Integer(2))};
  for (std::size_t j = 0; j < layout.pairs; ++j) {
    formula.terms[static_cast<std::size_t>(to_int64(layout.s_index[j]))] = cf[2 * j] + 2;
  }
  const MinusCF direct = minus_cf(cf_value(cf) + Rational(1), max_terms);
  bool agree = m % direct.period() == 0;
  for (std::size_t i = 0; agree && i < m; ++i) agree = formula.terms[i] == direct[i];
  if (!agree) {
    throw VerificationError("plus-to-minus conversion disagrees with the ceiling algorithm");
  }
  return formula;
}

QuadElem cf_value(const PeriodicCF& cf) {
  const PeriodMatrix m = period_matrix(cf);
  const Integer disc = (m.qp - m.p) * (m.qp - m.p) + 4 * m.qq * m.pp;
  const SquarefreeSplit split = squarefree_split(disc);
  const Integer den = 2 * m.qq;
  return QuadElem(Rational(m.p - m.qp, den), Rational(split.root, den), split.core);
}

QuadElem cf_value(const PeriodicCF& cf, const Integer& radicand) {
  const PeriodMatrix m = period_matrix(cf);
  const Integer disc = (m.qp - m.p) * (m.qp - m.p) + 4 * m.qq * m.pp;
  const Integer product = disc * radicand;
  if (!is_square(product)) {
    throw HypothesisError("continued fraction value does not lie in Q(sqrt(" + radicand.str() + "))");
  }
  const Integer den = 2 * m.qq;
  // sqrt(disc) = sqrt(disc * radicand) / radicand * sqrt(radicand)
  return QuadElem(Rational(m.p - m.qp, den), Rational(isqrt(product), den * radicand), radicand);
}

}  // namespace rayzeta
