#include "rayzeta/shintani.hpp"

#include "rayzeta/error.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace rayzeta {
namespace {

// Keeps products of two residues inside int64.
constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

void require_modulus(std::int64_t q) {
  if (q < 2) throw ConfigError("modulus q must be >= 2 (F is empty for q = 1), got " + std::to_string(q));
  if (q >= kMaxModulus) throw ConfigError("modulus q must be < 2^31, got " + std::to_string(q));
}

void require_range(const RayLabel& label, std::int64_t q) {
  if (label.c < 0 || label.c >= q || label.d < 0 || label.d >= q) {
    throw ConfigError("label " + label.to_string() + " out of range for q = " + std::to_string(q));
  }
}

void require_label(const RayLabel& label, std::int64_t q) {
  require_range(label, q);
  if (label.c == 0 && label.d == 0) throw ConfigError("label (0,0) is excluded");
}

struct ReducedUnit {
  std::int64_t m00, m01, m10, m11;
};

ReducedUnit reduce(const UnitMatrix& unit, std::int64_t q) {
  const Integer qq(q);
  return ReducedUnit{to_int64(residue_zero(unit.m00, qq)), to_int64(residue_zero(unit.m01, qq)),
                     to_int64(residue_zero(unit.m10, qq)), to_int64(residue_zero(unit.m11, qq))};
}

RayLabel apply(const ReducedUnit& u, const RayLabel& label, std::int64_t q) {
  return RayLabel{(u.m00 * label.c % q + u.m01 * label.d % q) % q, (u.m10 * label.c % q + u.m11 * label.d % q) % q};
}

std::vector<std::int64_t> minus_residues(const MinusCF& minus, std::int64_t q) {
  std::vector<std::int64_t> out;
  out.reserve(minus.period());
  const Integer qq(q);
  for (const Integer& b : minus.terms) out.push_back(to_int64(residue_zero(b, qq)));
  return out;
}

void check_eps(const ModuleBasis& basis, const QuadElem& eps) {
  if (!eps.same_field(basis.delta())) throw ConfigError("unit is not in the field of the lattice");
  if (norm(eps) != 1 || !is_totally_positive(eps) || (eps - Rational(1)).sign() <= 0) {
    throw HypothesisError(eps.to_string() + " is not a totally positive unit > 1");
  }
}

}  // namespace

std::string RayLabel::to_string() const { return "(" + std::to_string(c) + "," + std::to_string(d) + ")"; }

std::size_t max_terms_from_env() {
  const char* raw = std::getenv("RAYZETA_MAX_TERMS");
  if (raw == nullptr || *raw == '\0') return 1'000'000;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw ConfigError(std::string("RAYZETA_MAX_TERMS must be a positive integer, got '") + raw + "'");
  }
  return value;
}

ShintaniField::ShintaniField(ModuleBasis basis)
    : ShintaniField(basis, fundamental_unit_totally_positive(basis)) {}

ShintaniField::ShintaniField(ModuleBasis basis, QuadElem eps)
    : ShintaniField(basis, eps, minus_cf(basis.delta())) {}

ShintaniField::ShintaniField(ModuleBasis basis, QuadElem eps, MinusCF minus)
    : basis_(std::move(basis)),
      eps_(std::move(eps)),
      unit_(UnitMatrix{1, 0, 0, 1}),
      minus_(std::move(minus)) {
  check_eps(basis_, eps_);
  unit_ = multiplication_matrix(basis_, eps_);
  if (minus_.terms.empty()) throw ConfigError("minus continued fraction is empty");
}

bool in_f_delta(const ModuleBasis& basis, std::int64_t q, const RayLabel& label) {
  if (label.c < 0 || label.c >= q || label.d < 0 || label.d >= q || (label.c == 0 && label.d == 0)) return false;
  return gcd(basis.ideal_norm(label.c, label.d), Integer(q)) == 1;
}

std::vector<RayLabel> f_delta(const ModuleBasis& basis, std::int64_t q) {
  require_modulus(q);
  // The norm form is A * |N(c + d delta)|, so gcd(A, q) = 1 is N(b) prime to q.
  if (gcd(basis.inverse_lattice_norm(), Integer(q)) != 1) {
    throw HypothesisError("N(b) is not prime to q = " + std::to_string(q));
  }
  std::vector<RayLabel> out;
  for (std::int64_t c = 0; c < q; ++c) {
    for (std::int64_t d = 0; d < q; ++d) {
      const RayLabel label{c, d};
      if (in_f_delta(basis, q, label)) out.push_back(label);
    }
  }
  return out;
}

RayLabel eps_act(const UnitMatrix& unit, const RayLabel& label, std::int64_t q) {
  require_modulus(q);
  return apply(reduce(unit, q), RayLabel{residue_zero(label.c, q), residue_zero(label.d, q)}, q);
}

RayLabel eps_act(const QuadElem& eps, const RayLabel& label, const ModuleBasis& basis, std::int64_t q) {
  const auto [u, v] = basis.coords(basis.eval(Rational(label.c), Rational(label.d)) * eps);
  if (!is_integer(u) || !is_integer(v)) {
    throw HypothesisError(eps.to_string() + " does not stabilise the lattice [1, " + basis.delta().to_string() + "]");
  }
  const Integer qq(q);
  return RayLabel{to_int64(residue_zero(numerator(u), qq)), to_int64(residue_zero(numerator(v), qq))};
}

std::vector<RayLabel> orbit(const RayLabel& label, const UnitMatrix& unit, std::int64_t q) {
  require_modulus(q);
  const ReducedUnit u = reduce(unit, q);
  std::vector<RayLabel> out{label};
  const std::size_t bound = static_cast<std::size_t>(q) * static_cast<std::size_t>(q);
  for (RayLabel next = apply(u, label, q); next != label; next = apply(u, next, q)) {
    if (out.size() >= bound) throw VerificationError("orbit of " + label.to_string() + " does not close");
    out.push_back(next);
  }
  return out;
}

std::vector<RayLabel> orbit(const RayLabel& label, const QuadElem& eps, const ModuleBasis& basis, std::int64_t q) {
  return orbit(label, multiplication_matrix(basis, eps), q);
}

std::vector<QuadElem> boundary_points(const ModuleBasis& basis, const MinusCF& minus, std::size_t count) {
  std::vector<QuadElem> out{basis.delta(), basis.gen0()};
  out.reserve(count + 2);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(out[i + 1] * Rational(minus[i]) - out[i]);
  }
  return out;
}

std::vector<QuadElem> boundary_points(const ModuleBasis& basis, std::size_t count) {
  return boundary_points(basis, minus_cf(basis.delta()), count);
}

std::vector<std::int64_t> yamamoto_numerators(const RayLabel& label, std::int64_t q, const MinusCF& minus,
                                              std::size_t count) {
  require_modulus(q);
  require_range(label, q);
  const std::vector<std::int64_t> b = minus_residues(minus, q);
  std::vector<std::int64_t> xs;
  xs.reserve(count + 2);
  xs.push_back(q - label.c);
  xs.push_back(residue_one(label.d, q));
  for (std::size_t i = 0; i < count; ++i) {
    xs.push_back(residue_one(b[i % b.size()] * xs[i + 1] - xs[i], q));
  }
  return xs;
}

XYSeq yamamoto_xy(const RayLabel& label, std::int64_t q, const MinusCF& minus, std::size_t count) {
  const std::vector<std::int64_t> num = yamamoto_numerators(label, q, minus, count);
  XYSeq out;
  out.xs.reserve(count + 1);
  out.ys.reserve(count + 1);
  for (std::size_t i = 0; i <= count; ++i) {
    out.xs.emplace_back(num[i + 1], q);
    out.ys.emplace_back(q - num[i], q);
  }
  return out;
}

std::pair<Rational, Rational> xy_direct(const RayLabel& label, std::int64_t q, const ModuleBasis& basis,
                                        const QuadElem& p_prev, const QuadElem& p_cur) {
  const auto [u1, v1] = basis.coords(p_prev);
  const auto [u2, v2] = basis.coords(p_cur);
  const Rational det = u1 * v2 - u2 * v1;
  if (det != 1 && det != -1) throw VerificationError("boundary points do not form a basis of the lattice");
  const Rational tc(label.c, q);
  const Rational td(label.d, q);
  const Rational x = (tc * v2 - u2 * td) / det;
  const Rational y = (u1 * td - v1 * tc) / det;
  return {frac_unit(x), y - Rational(floor(y))};
}

Rational zeta_sum(const RayLabel& label, std::int64_t q, const MinusCF& minus, std::size_t terms) {
  const std::vector<std::int64_t> num = yamamoto_numerators(label, q, minus, terms);
  Rational sum = 0;
  Rational prev(num[1], q);
  for (std::size_t i = 1; i <= terms; ++i) {
    const Rational x(num[i + 1], q);
    sum += -bernoulli1(x) * bernoulli1(prev) + Rational(minus[i], 2) * bernoulli2(x);
    prev = x;
  }
  return sum;
}

Rational orbit_member_sum(const RayLabel& label, std::int64_t q, const MinusCF& minus) {
  const std::size_t m = minus.period();
  const std::vector<std::int64_t> num = yamamoto_numerators(label, q, minus, m);
  // 12 q^2 times each term is -3(2X_i - q)(2X_{i-1} - q) + b_i (6 X_i (X_i - q) + q^2).
  Integer total = 0;
  const Integer qsq = Integer(q) * q;
  for (std::size_t i = 1; i <= m; ++i) {
    const Integer x(num[i + 1]);
    const Integer xp(num[i]);
    total -= 3 * (2 * x - q) * (2 * xp - q);
    total += minus[i] * (6 * x * (x - q) + qsq);
  }
  return Rational(total, 12 * qsq);
}

Rational partial_zeta0(const RayLabel& label, const ShintaniField& field, std::int64_t q, std::size_t max_terms) {
  require_modulus(q);
  require_label(label, q);
  if (!in_f_delta(field.basis(), q, label)) {
    throw ConfigError("label " + label.to_string() + " is not in F_delta for q = " + std::to_string(q));
  }
  const std::int64_t lambda = field.lambda(q);
  const std::size_t m = field.m();
  if (static_cast<std::size_t>(lambda) > max_terms / m) {
    throw HypothesisError("lambda*m = " + std::to_string(lambda) + "*" + std::to_string(m) +
                          " exceeds the term cap " + std::to_string(max_terms));
  }
  const Rational single = zeta_sum(label, q, field.minus(), static_cast<std::size_t>(lambda) * m);

  const std::vector<RayLabel> members = orbit(label, field.unit(), q);
  if (members.size() != static_cast<std::size_t>(lambda)) {
    throw VerificationError("orbit of " + label.to_string() + " has length " + std::to_string(members.size()) +
                            ", unit index is " + std::to_string(lambda));
  }
  Rational split = 0;
  for (const RayLabel& member : members) split += orbit_member_sum(member, q, field.minus());
  if (split != single) {
    throw VerificationError("partial zeta of " + label.to_string() + ": single sum " + to_string(single) +
                            " != orbit sum " + to_string(split));
  }
  return single;
}

}  // namespace rayzeta
