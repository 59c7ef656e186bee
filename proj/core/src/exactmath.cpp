#include "rayzeta/exactmath.hpp"

#include "rayzeta/error.hpp"

#include <limits>

namespace rayzeta {

Integer floor(const Rational& x) {
  const Integer n = numerator(x);
  const Integer d = denominator(x);
  Integer q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Integer ceil(const Rational& x) { return -floor(-x); }

bool is_integer(const Rational& x) { return denominator(x) == 1; }

Rational bernoulli1(const Rational& x) { return x - Rational(1, 2); }

Rational bernoulli2(const Rational& x) { return x * x - x + Rational(1, 6); }

Rational frac_unit(const Rational& x) {
  if (is_integer(x)) return Rational(1);
  return x - Rational(floor(x));
}

Integer int_part_unit(const Rational& x) { return ceil(x) - 1; }

Integer residue_zero(const Integer& a, const Integer& q) {
  Integer r = a % q;
  if (r < 0) r += q;
  return r;
}

std::int64_t residue_zero(std::int64_t a, std::int64_t q) {
  std::int64_t r = a % q;
  return r < 0 ? r + q : r;
}

Integer residue_one(const Integer& a, const Integer& q) {
  Integer r = residue_zero(a, q);
  return r == 0 ? q : r;
}

std::int64_t residue_one(std::int64_t a, std::int64_t q) {
  std::int64_t r = residue_zero(a, q);
  return r == 0 ? q : r;
}

Rational kernel_F(const Rational& x, const Rational& y) {
  return -bernoulli1(x) * bernoulli1(y) + bernoulli2(x);
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Integer pow(const Integer& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

bool is_square(const Integer& n) {
  if (n < 0) return false;
  const Integer r = isqrt(n);
  return r * r == n;
}

SquarefreeSplit squarefree_split(const Integer& n, const Integer& trial_limit) {
  if (n <= 0) throw std::domain_error("squarefree_split needs a positive integer");
  SquarefreeSplit out{1, 1};
  Integer rest = n;
  // Every prime factor of `rest` left after this loop exceeds the cube root
  // of n, so `rest` is 1, p, p^2 or p*q.
  for (Integer p = 2; p * p * p <= n; ++p) {
    if (p > trial_limit) {
      throw ConfigError("squarefree test of " + to_string(n) + " exceeds the trial-division bound");
    }
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e % 2 == 1) out.core *= p;
    out.root *= pow(p, e / 2);
    if (rest == 1) break;
  }
  if (is_square(rest)) {
    out.root *= isqrt(rest);
  } else {
    out.core *= rest;
  }
  return out;
}

bool is_squarefree(const Integer& n, const Integer& trial_limit) {
  return squarefree_split(n, trial_limit).root == 1;
}

std::string to_string(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

std::string to_string(const Integer& x) { return x.str(); }

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ConfigError("not a rational number: '" + std::string(text) + "'");
    }
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer " + x.str() + " does not fit in 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

}  // namespace rayzeta
