#include "helpers.hpp"
#include "rayzeta/error.hpp"
#include "rayzeta/polynomial.hpp"
#include "rayzeta/quasipoly.hpp"

#include <gtest/gtest.h>

#include <random>

namespace rayzeta {
namespace {

using testing::R;

TEST(Polynomial, Parse) {
  EXPECT_EQ(Polynomial::parse("8x^2+8x+2"), Polynomial({2, 8, 8}));
  EXPECT_EQ(Polynomial::parse("2n"), Polynomial({0, 2}));
  EXPECT_EQ(Polynomial::parse("1/4x^3 - x"), Polynomial({0, -1, 0, R("1/4")}));
  EXPECT_EQ(Polynomial::parse("x^4/4"), Polynomial({0, 0, 0, 0, R("1/4")}));
  EXPECT_EQ(Polynomial::parse("(x^2+x)/2"), Polynomial({0, R("1/2"), R("1/2")}));
  EXPECT_EQ(Polynomial::parse("3*x^2 + 7"), Polynomial({7, 0, 3}));
}

TEST(Polynomial, ParseErrors) {
  for (const char* bad : {"", "x^", "2y", "x/0", "(x+1", "1/"}) {
    EXPECT_THROW(Polynomial::parse(bad), ConfigError) << bad;
  }
}

TEST(Polynomial, PrintRoundTrip) {
  for (const char* text : {"8x^2+8x+2", "x", "-3x^3+1/4x-2", "0"}) {
    const Polynomial p = Polynomial::parse(text);
    EXPECT_EQ(Polynomial::parse(p.to_string()), p) << text;
  }
}

TEST(Interpolate, RecoversCubic) {
  const Polynomial p({R("1/3"), -2, 0, R("5/7")});
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int x = -1; x < 3; ++x) {
    xs.emplace_back(x);
    ys.push_back(p(x));
  }
  EXPECT_EQ(interpolate(xs, ys), p);
  EXPECT_THROW(interpolate({1, 1}, {0, 1}), std::invalid_argument);
}

TEST(QuasiPoly, KToNExample) {
  QuasiPoly k{2, 1, QuasiForm::k_form, {{1, {3, 2}}}};
  const QuasiPoly n = k_to_n_form(k);
  EXPECT_EQ(n.coeffs.at(1), (std::vector<Rational>{2, 1}));
  EXPECT_EQ(n_to_k_form(n), k);
}

TEST(QuasiPoly, DegreeZeroUnchanged) {
  QuasiPoly k{3, 0, QuasiForm::k_form, {{0, {R("1/6")}}, {1, {2}}, {2, {R("-1/4")}}}};
  EXPECT_EQ(k_to_n_form(k).coeffs, k.coeffs);
}

TEST(QuasiPoly, RandomRoundTrips) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-30, 30);
  for (int trial = 0; trial < 40; ++trial) {
    QuasiPoly p{1 + trial % 7, static_cast<unsigned>(trial % 4), QuasiForm::k_form, {}};
    for (std::int64_t r = 0; r < p.q; ++r) {
      std::vector<Rational> c;
      for (unsigned i = 0; i <= p.degree; ++i) c.emplace_back(small(rng), 1 + (small(rng) + 30) % 9);
      p.coeffs.emplace(r, c);
    }
    const QuasiPoly n = k_to_n_form(p);
    for (std::int64_t x = 0; x < 4 * p.q; ++x) EXPECT_EQ(p.evaluate(x), n.evaluate(x));
    EXPECT_EQ(n_to_k_form(n), p);
  }
}

TEST(QuasiPoly, MissingResidueThrows) {
  QuasiPoly k{2, 0, QuasiForm::k_form, {{0, {1}}}};
  EXPECT_EQ(k.evaluate(4), 1);
  EXPECT_ANY_THROW(k.evaluate(3));
}

TEST(QuasiPoly, DenominatorCheck) {
  QuasiPoly n{2, 1, QuasiForm::n_form, {{0, {R("1/48"), R("1/96")}}}};
  EXPECT_TRUE(n_form_denominators_ok(n));
  n.coeffs[0][1] = R("1/192");
  EXPECT_FALSE(n_form_denominators_ok(n));
}

}  // namespace
}  // namespace rayzeta
