#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace rayzeta {

using Integer = boost::multiprecision::mpz_int;
// Always canonical: lowest terms, positive denominator.
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denominator(const Rational& x) { return boost::multiprecision::denominator(x); }

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
bool is_integer(const Rational& x);

// B_1(x) = x - 1/2
Rational bernoulli1(const Rational& x);
// B_2(x) = x^2 - x + 1/6
Rational bernoulli2(const Rational& x);

// <x>: the representative of x mod 1 in the half-open interval (0, 1].
Rational frac_unit(const Rational& x);

// [x]_1 = x - <x>, the integer part matching the (0,1] convention
// (ceil(x) - 1).
Integer int_part_unit(const Rational& x);

// Representative of a mod q in [0, q-1].
Integer residue_zero(const Integer& a, const Integer& q);
std::int64_t residue_zero(std::int64_t a, std::int64_t q);

// Representative of a mod q in [1, q]. (a - residue_one(a, q)) / q is the
// matching quotient.
Integer residue_one(const Integer& a, const Integer& q);
std::int64_t residue_one(std::int64_t a, std::int64_t q);

// F(x, y) = -B_1(x) B_1(y) + B_2(x)
Rational kernel_F(const Rational& x, const Rational& y);

Integer gcd(const Integer& a, const Integer& b);
Integer binomial(unsigned n, unsigned k);
Integer pow(const Integer& base, unsigned exponent);
Rational pow(const Rational& base, unsigned exponent);

// Floor of the square root of a non-negative integer.
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);

// Squarefree decomposition n = core * root^2 by trial division up to the
// cube root of n. Throws ConfigError when the cube root exceeds
// `trial_limit`.
struct SquarefreeSplit {
  Integer core;
  Integer root;
};
SquarefreeSplit squarefree_split(const Integer& n, const Integer& trial_limit = Integer(10'000'000));
bool is_squarefree(const Integer& n, const Integer& trial_limit = Integer(10'000'000));

// "num/den" with den > 0, always including the denominator.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);
// Accepts "p", "p/q", "-p/q".
Rational parse_rational(std::string_view text);

std::int64_t to_int64(const Integer& x);

}  // namespace rayzeta
