#include "helpers.hpp"
#include "rayzeta/error.hpp"
#include "rayzeta/hecke.hpp"

#include <gtest/gtest.h>

namespace rayzeta {
namespace {

using testing::Q;
using testing::R;

TEST(DirichletChar, TableFromGenerators) {
  const DirichletChar chi(5, 4, {{2, 1}});
  EXPECT_EQ(chi.exponent(1), 0);
  EXPECT_EQ(chi.exponent(2), 1);
  EXPECT_EQ(chi.exponent(4), 2);
  EXPECT_EQ(chi.exponent(3), 3);
  EXPECT_EQ(chi.exponent(10), std::nullopt);
  EXPECT_NEAR(chi.value(2).imag(), 1.0, 1e-12);
  for (std::int64_t a = 1; a < 5; ++a) {
    for (std::int64_t b = 1; b < 5; ++b) EXPECT_EQ(*chi.exponent(a * b), (*chi.exponent(a) + *chi.exponent(b)) % 4);
  }
}

TEST(DirichletChar, RejectsBadTables) {
  EXPECT_THROW(DirichletChar(5, 4, {{2, 1}, {4, 1}}), ConfigError);
  EXPECT_THROW(DirichletChar(5, 2, {{4, 1}}), ConfigError);
  EXPECT_THROW(DirichletChar(6, 2, {{2, 1}}), ConfigError);
  EXPECT_THROW(DirichletChar(1, 1, {}), ConfigError);
  EXPECT_THROW(DirichletChar(5, 0, {{2, 1}}), ConfigError);
}

TEST(RayCharValue, Symbols) {
  EXPECT_EQ(ray_char_value(DirichletChar::trivial(2), Integer(6)), std::nullopt);
  EXPECT_EQ(ray_char_value(DirichletChar::trivial(5), Integer(7)), 1);
  EXPECT_EQ(ray_char_value(DirichletChar(5, 4, {{2, 1}}), Integer(7)), 2);
  // Quadratic character mod 5: 1 and 4 share a value, as do 2 and 3.
  EXPECT_EQ(ray_char_value(DirichletChar(5, 2, {{2, 1}}), Integer(4)), 1);
  EXPECT_EQ(ray_char_value(DirichletChar(5, 2, {{2, 1}}), Integer(3)), 2);
}

TEST(CharSpanValue, Formatting) {
  CharSpanValue v;
  EXPECT_EQ(v.to_string(), "0");
  v.add(1, R("1/6"));
  v.add(4, R("-1/3"));
  EXPECT_EQ(v.to_string(), "1/6*chi(1)-1/3*chi(4)");
  v.add(4, R("1/3"));
  EXPECT_EQ(v.to_string(), "1/6*chi(1)");
  EXPECT_TRUE(v.scaled_integral(Integer(6)));
  EXPECT_FALSE(v.scaled_integral(Integer(4)));
}

TEST(HeckeL0, TrivialCharacterAnchor) {
  const ShintaniField field(ModuleBasis(Q(2, 1, 3)));
  const LValue l = hecke_L0(field, DirichletChar::trivial(2));
  EXPECT_EQ(l.representatives, (std::vector<RayLabel>{{0, 1}}));
  CharSpanValue expected;
  expected.add(1, R("1/6"));
  EXPECT_EQ(l.value, expected);
}

TEST(HeckeL0, DenominatorsOnPresets) {
  for (const char* name : {"rd-n2p2", "quartic-16n4"}) {
    const Family family(preset(name));
    for (std::int64_t n = 1; n <= 4; ++n) {
      const auto inst = family.instance(n);
      if (!inst) continue;
      for (std::int64_t q : {2, 3, 5}) {
        const LValue l = hecke_L0(inst->field, DirichletChar::trivial(q));
        EXPECT_TRUE(l.value.scaled_integral(Integer(12 * q * q)));
      }
    }
  }
}

TEST(HeckeL0Family, TrivialCharacterMatchesQuasiPolys) {
  const Family family(preset("rd-n2p2"));
  const std::vector<std::int64_t> ks{0, 1, 2, 3, 4};
  const CharQuasiPoly lq = hecke_L0_family(family, DirichletChar::trivial(2), ks);
  for (std::int64_t r = 0; r < 2; ++r) {
    const auto inst = family.instance(2 * 1 + r);
    std::vector<Rational> total(2);
    for (const RayLabel& rep : orbit_representatives(inst->field, 2)) {
      const QuasiPolyResult qp = quasi_poly(family, rep, 2, r, ks);
      for (std::size_t i = 0; i < 2; ++i) total[i] += qp.coeffs[i];
    }
    for (std::size_t i = 0; i < 2; ++i) {
      CharSpanValue expected;
      expected.add(1, total[i]);
      EXPECT_EQ(lq.k_coeffs.at(r)[i], expected);
    }
  }
}

TEST(HeckeL0Family, OrderFourCharacterMod5) {
  const Family family(preset("rd-n2p2"));
  const CharQuasiPoly lq = hecke_L0_family(family, DirichletChar(5, 4, {{2, 1}}), {0, 1, 2, 3, 4, 5, 6});
  std::set<std::int64_t> symbols;
  for (const auto& [r, coeffs] : lq.n_coeffs) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      EXPECT_TRUE(coeffs[i].scaled_integral(12 * pow(Integer(5), static_cast<unsigned>(i) + 2)));
      for (const auto& [s, c] : coeffs[i].terms()) symbols.insert(s);
    }
  }
  EXPECT_EQ(symbols, (std::set<std::int64_t>{1, 2, 3, 4}));
}

}  // namespace
}  // namespace rayzeta
