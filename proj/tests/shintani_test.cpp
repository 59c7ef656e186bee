#include "helpers.hpp"
#include "rayzeta/error.hpp"
#include "rayzeta/shintani.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <numeric>

namespace rayzeta {
namespace {

using testing::Q;
using testing::R;

class Sqrt3 : public ::testing::Test {
 protected:
  ShintaniField field{ModuleBasis(Q(2, 1, 3))};
};

TEST_F(Sqrt3, FDelta) {
  EXPECT_EQ(f_delta(field.basis(), 2), (std::vector<RayLabel>{{0, 1}, {1, 0}}));
  std::vector<RayLabel> expected;
  for (std::int64_t c = 0; c < 3; ++c) {
    for (std::int64_t d = 0; d < 3; ++d) {
      if ((c != 0 || d != 0) && std::gcd(std::abs(c * c + 4 * c * d + d * d), std::int64_t{3}) == 1) {
        expected.push_back({c, d});
      }
    }
  }
  EXPECT_EQ(f_delta(field.basis(), 3), expected);
  EXPECT_THROW(f_delta(field.basis(), 1), ConfigError);
}

TEST_F(Sqrt3, EpsAction) {
  EXPECT_EQ(eps_act(field.eps(), {1, 0}, field.basis(), 2), (RayLabel{0, 1}));
  EXPECT_EQ(eps_act(field.eps(), {0, 1}, field.basis(), 2), (RayLabel{1, 0}));
  EXPECT_EQ(eps_act(field.unit(), {0, 1}, 2), (RayLabel{1, 0}));
}

TEST_F(Sqrt3, Orbits) {
  EXPECT_EQ(orbit({1, 0}, field.unit(), 2), (std::vector<RayLabel>{{1, 0}, {0, 1}}));
  EXPECT_EQ(orbit({0, 1}, field.unit(), 2), (std::vector<RayLabel>{{0, 1}, {1, 0}}));
  for (std::int64_t q : {3, 5, 7}) {
    for (const RayLabel& label : f_delta(field.basis(), q)) {
      EXPECT_EQ(static_cast<std::int64_t>(orbit(label, field.unit(), q).size()), field.lambda(q));
    }
  }
}

TEST_F(Sqrt3, BoundaryPoints) {
  const std::vector<QuadElem> p = boundary_points(field.basis(), field.minus(), 2);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p[0], Q(2, 1, 3));
  EXPECT_EQ(p[1], Q(1, 0, 3));
  EXPECT_EQ(p[2], Q(2, -1, 3));
  EXPECT_EQ(p[3], Q(7, -4, 3));
  EXPECT_EQ(p[3], pow(conj(field.eps()), 2));
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const auto [a, b] = coords_in_basis(p[i], field.basis());
    const auto [c, d] = coords_in_basis(p[i + 1], field.basis());
    EXPECT_EQ(abs(a * d - b * c), 1);
  }
}

TEST_F(Sqrt3, YamamotoSequence) {
  const XYSeq a = yamamoto_xy({1, 0}, 2, field.minus(), 2);
  EXPECT_EQ(a.xs, (std::vector<Rational>{1, R("1/2"), 1}));
  const XYSeq b = yamamoto_xy({0, 1}, 2, field.minus(), 1);
  EXPECT_EQ(b.xs, (std::vector<Rational>{R("1/2"), 1}));
}

TEST_F(Sqrt3, DirectSolve) {
  const std::vector<QuadElem> p = boundary_points(field.basis(), field.minus(), 0);
  EXPECT_EQ(xy_direct({1, 0}, 2, field.basis(), p[0], p[1]), std::make_pair(Rational(1), R("1/2")));
  EXPECT_EQ(xy_direct({0, 1}, 2, field.basis(), p[0], p[1]), std::make_pair(R("1/2"), Rational(0)));
}

TEST_F(Sqrt3, PartialZetaAnchor) {
  EXPECT_EQ(partial_zeta0({1, 0}, field, 2), R("1/6"));
  EXPECT_EQ(partial_zeta0({0, 1}, field, 2), R("1/6"));
  EXPECT_THROW(partial_zeta0({1, 1}, field, 2), ConfigError);
}

TEST(Shintani, YamamotoMatchesDirectSolve) {
  for (long f : {3L, 7L, 11L, 19L, 51L}) {
    const ShintaniField field(ModuleBasis(QuadField(Integer(f)).ring_delta()));
    for (std::int64_t q : {2, 3, 4, 5}) {
      const std::size_t count = static_cast<std::size_t>(field.lambda(q)) * field.m();
      const std::vector<QuadElem> p = boundary_points(field.basis(), field.minus(), count);
      for (const RayLabel& label : f_delta(field.basis(), q)) {
        const XYSeq xy = yamamoto_xy(label, q, field.minus(), count);
        for (std::size_t i = 0; i <= count; ++i) {
          const auto [x, y] = xy_direct(label, q, field.basis(), p[i], p[i + 1]);
          ASSERT_EQ(x, xy.xs[i]) << "f=" << f << " q=" << q << " " << label.to_string() << " i=" << i;
          ASSERT_EQ(y, xy.ys[i]);
          EXPECT_TRUE(is_integer(x * q));
        }
      }
    }
  }
}

TEST(Shintani, DistributionOverAllClasses) {
  // Summing over every (C, D) mod q, including (0, 0), recovers lambda times
  // the zeta value of the whole lattice.
  for (long f : {3L, 6L, 7L, 11L, 14L, 23L}) {
    const ShintaniField field(ModuleBasis(QuadField(Integer(f)).ring_delta()));
    for (std::int64_t q : {2, 3, 5}) {
      const std::int64_t lambda = field.lambda(q);
      const std::size_t terms = static_cast<std::size_t>(lambda) * field.m();
      Rational total = 0;
      for (std::int64_t c = 0; c < q; ++c) {
        for (std::int64_t d = 0; d < q; ++d) total += zeta_sum({c, d}, q, field.minus(), terms);
      }
      Rational whole = 0;
      for (const Integer& b : field.minus().terms) whole += Rational(b - 3) / 12;
      EXPECT_EQ(total, whole * lambda) << "f=" << f << " q=" << q;
    }
  }
}

TEST(Shintani, DenominatorsAndOrbitConstancy) {
  for (long f : {3L, 7L, 11L, 19L}) {
    const ShintaniField field(ModuleBasis(QuadField(Integer(f)).ring_delta()));
    for (std::int64_t q : {2, 3, 5}) {
      for (const RayLabel& label : f_delta(field.basis(), q)) {
        const Rational z = partial_zeta0(label, field, q);
        EXPECT_TRUE(is_integer(z * 12 * q * q));
        for (const RayLabel& member : orbit(label, field.unit(), q)) EXPECT_EQ(partial_zeta0(member, field, q), z);
      }
    }
  }
}

TEST(Shintani, MaxTermsCap) {
  const ShintaniField field(ModuleBasis(Q(2, 1, 3)));
  EXPECT_THROW(partial_zeta0({1, 0}, field, 2, 1), HypothesisError);
  ::setenv("RAYZETA_MAX_TERMS", "1", 1);
  EXPECT_EQ(max_terms_from_env(), 1u);
  ::setenv("RAYZETA_MAX_TERMS", "lots", 1);
  EXPECT_THROW(max_terms_from_env(), ConfigError);
  ::unsetenv("RAYZETA_MAX_TERMS");
  EXPECT_EQ(max_terms_from_env(), 1000000u);
}

}  // namespace
}  // namespace rayzeta
