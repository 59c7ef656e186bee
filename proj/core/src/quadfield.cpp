#include "rayzeta/quadfield.hpp"

#include "rayzeta/contfrac.hpp"
#include "rayzeta/error.hpp"

#include <cmath>
#include <stdexcept>

namespace rayzeta {
namespace {

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::string rational_text(const Rational& x) {
  return denominator(x) == 1 ? numerator(x).str() : to_string(x);
}

}  // namespace

QuadElem::QuadElem(Rational a, Rational b, Integer radicand)
    : a_(std::move(a)), b_(std::move(b)), radicand_(std::move(radicand)) {
  if (radicand_ <= 0) throw std::invalid_argument("quadratic field radicand must be positive");
}

void QuadElem::require_same_field(const QuadElem& other) const {
  if (radicand_ != other.radicand_) {
    throw std::invalid_argument("elements of Q(sqrt(" + radicand_.str() + ")) and Q(sqrt(" +
                                other.radicand_.str() + ")) cannot be combined");
  }
}

int QuadElem::sign() const {
  const int sa = sign_of(a_);
  const int sb = sign_of(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and b^2 D decides.
  const Rational diff = a_ * a_ - b_ * b_ * Rational(radicand_);
  if (diff == 0) throw std::logic_error("radicand is a perfect square");
  return diff > 0 ? sa : sb;
}

double QuadElem::approx() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(radicand_.convert_to<double>());
}

QuadElem QuadElem::operator-() const { return QuadElem(-a_, -b_, radicand_); }

QuadElem& QuadElem::operator+=(const QuadElem& rhs) {
  require_same_field(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& rhs) {
  require_same_field(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& rhs) {
  require_same_field(rhs);
  Rational a = a_ * rhs.a_ + b_ * rhs.b_ * Rational(radicand_);
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& rhs) {
  require_same_field(rhs);
  const Rational n = norm(rhs);
  if (n == 0) throw std::domain_error("division by zero in quadratic field");
  *this *= conj(rhs);
  a_ /= n;
  b_ /= n;
  return *this;
}

QuadElem& QuadElem::operator+=(const Rational& rhs) {
  a_ += rhs;
  return *this;
}

QuadElem& QuadElem::operator-=(const Rational& rhs) {
  a_ -= rhs;
  return *this;
}

QuadElem& QuadElem::operator*=(const Rational& rhs) {
  a_ *= rhs;
  b_ *= rhs;
  return *this;
}

std::string QuadElem::to_string() const {
  if (b_ == 0) return rational_text(a_);
  std::string out;
  if (a_ != 0) out = rational_text(a_) + (b_ > 0 ? "+" : "-");
  else if (b_ < 0) out = "-";
  const Rational mag = b_ > 0 ? b_ : Rational(-b_);
  if (mag != 1) out += rational_text(mag) + "*";
  return out + "sqrt(" + radicand_.str() + ")";
}

QuadElem conj(const QuadElem& x) { return QuadElem(x.a(), -x.b(), x.radicand()); }

Rational norm(const QuadElem& x) { return x.a() * x.a() - x.b() * x.b() * Rational(x.radicand()); }

Rational trace(const QuadElem& x) { return 2 * x.a(); }

bool is_totally_positive(const QuadElem& x) {
  const int s = x.sign();
  if (s == 0) throw std::invalid_argument("total positivity of zero is undefined");
  return s > 0 && conj(x).sign() > 0;
}

Integer floor(const QuadElem& x) {
  // Integer estimate from isqrt, then exact correction.
  const Integer bn = numerator(x.b());
  const Integer bd = denominator(x.b());
  Integer t = isqrt(bn * bn * x.radicand()) / bd;  // floor(|b| sqrt(D))
  Rational estimate = x.a() + (bn >= 0 ? Rational(t) : Rational(-t));
  Integer n = rayzeta::floor(estimate);
  while ((x - Rational(n)).sign() < 0) n -= 1;
  while ((x - Rational(n + 1)).sign() >= 0) n += 1;
  return n;
}

Integer ceil(const QuadElem& x) { return -floor(-x); }

QuadElem pow(const QuadElem& x, unsigned exponent) {
  QuadElem result(1, 0, x.radicand());
  QuadElem base = x;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

QuadField::QuadField(Integer radicand)
    : radicand_(std::move(radicand)), ring_delta_(0, 0, radicand_ > 0 ? radicand_ : Integer(1)) {
  if (radicand_ <= 0 || is_square(radicand_)) {
    throw ConfigError("radicand must be a positive non-square integer, got " + radicand_.str());
  }
  const QuadElem root(0, 1, radicand_);
  // omega generates the ring; shift it so that 0 < delta' < 1.
  const QuadElem omega = residue_zero(radicand_, Integer(4)) == 1 ? (root + Rational(1)) * Rational(1, 2) : root;
  ring_delta_ = omega + Rational(floor(-conj(omega)) + 1);
}

Integer QuadField::discriminant() const {
  return residue_zero(radicand_, Integer(4)) == 1 ? radicand_ : Integer(4 * radicand_);
}

ModuleBasis::ModuleBasis(QuadElem delta) : delta_(std::move(delta)) {
  if (delta_.is_rational()) throw HypothesisError("lattice generator delta must be irrational");
  const QuadElem dconj = conj(delta_);
  if ((delta_ - Rational(1)).sign() <= 0 || dconj.sign() <= 0 || (dconj - Rational(1)).sign() >= 0) {
    throw HypothesisError("delta = " + delta_.to_string() + " is not reduced (need delta > 1, 0 < delta' < 1)");
  }
  // Minimal polynomial t^2 - tr t + N, cleared to a primitive integer form.
  const Rational tr = trace(delta_);
  const Rational nm = norm(delta_);
  const Integer l = boost::multiprecision::lcm(denominator(tr), denominator(nm));
  Integer a = l;
  Integer b = numerator(tr) * (l / denominator(tr));  // minus the linear coefficient
  Integer c = numerator(nm) * (l / denominator(nm));
  const Integer g = gcd(gcd(a, b), c);
  norm_form_ = QuadraticForm{a / g, b / g, c / g};
}

std::pair<Rational, Rational> ModuleBasis::coords(const QuadElem& x) const {
  if (!x.same_field(delta_)) throw std::invalid_argument("element is not in the field of the lattice");
  Rational v = x.b() / delta_.b();
  Rational u = x.a() - v * delta_.a();
  return {std::move(u), std::move(v)};
}

QuadElem ModuleBasis::eval(const Rational& u, const Rational& v) const { return delta_ * v + u; }

Integer ModuleBasis::ideal_norm(const Integer& c, const Integer& d) const {
  Integer value = norm_form_(c, d);
  return value < 0 ? Integer(-value) : value;
}

QuadElem fundamental_unit_totally_positive(const ModuleBasis& basis, std::size_t max_period) {
  const PlusExpansion expansion = plus_expansion(basis.delta(), max_period);
  QuadElem eps(1, 0, basis.delta().radicand());
  const std::size_t start = expansion.preperiod.size();
  for (std::size_t k = 0; k < expansion.period.size(); ++k) eps *= expansion.complete_quotients[start + k];
  if (expansion.period.size() % 2 == 1) eps *= eps;
  if (norm(eps) != 1 || !is_totally_positive(eps) || (eps - Rational(1)).sign() <= 0) {
    throw VerificationError("period product " + eps.to_string() + " is not a totally positive unit > 1");
  }
  return eps;
}

QuadElem fundamental_unit_totally_positive(const QuadField& field, std::size_t max_period) {
  return fundamental_unit_totally_positive(ModuleBasis(field.ring_delta()), max_period);
}

UnitMatrix multiplication_matrix(const ModuleBasis& basis, const QuadElem& unit) {
  const auto [u0, v0] = basis.coords(unit);
  const auto [u1, v1] = basis.coords(unit * basis.delta());
  if (!is_integer(u0) || !is_integer(v0) || !is_integer(u1) || !is_integer(v1)) {
    throw HypothesisError(unit.to_string() + " does not preserve the lattice [1, " + basis.delta().to_string() + "]");
  }
  return UnitMatrix{numerator(u0), numerator(u1), numerator(v0), numerator(v1)};
}

std::int64_t unit_index_lambda(const ModuleBasis& basis, std::int64_t q, const QuadElem& eps) {
  if (q < 1) throw ConfigError("modulus must be positive");
  const UnitMatrix m = multiplication_matrix(basis, eps);
  const Integer qq(q);
  const std::int64_t m00 = to_int64(residue_zero(m.m00, qq));
  const std::int64_t m01 = to_int64(residue_zero(m.m01, qq));
  const std::int64_t m10 = to_int64(residue_zero(m.m10, qq));
  const std::int64_t m11 = to_int64(residue_zero(m.m11, qq));
  // Coordinates of eps^lambda (= eps^lambda * 1), advanced by the matrix.
  std::int64_t u = m00 % q;
  std::int64_t v = m10 % q;
  const std::int64_t bound = q * q;
  for (std::int64_t lambda = 1; lambda <= bound; ++lambda) {
    if (u == 1 % q && v == 0) return lambda;
    const std::int64_t nu = (m00 * u + m01 * v) % q;
    const std::int64_t nv = (m10 * u + m11 * v) % q;
    u = nu;
    v = nv;
  }
  throw VerificationError("unit has no finite order modulo " + std::to_string(q));
}

std::pair<Rational, Rational> coords_in_basis(const QuadElem& x, const ModuleBasis& basis) {
  return basis.coords(x);
}

}  // namespace rayzeta
