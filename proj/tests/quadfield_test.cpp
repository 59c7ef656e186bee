#include "helpers.hpp"

#include <gtest/gtest.h>

namespace rayzeta {
namespace {

using testing::Q;
using testing::R;

TEST(QuadElem, ConjugateAndNorm) {
  EXPECT_EQ(conj(Q(2, 1, 3)), Q(2, -1, 3));
  EXPECT_EQ(conj(Q(5, 0, 3)), Q(5, 0, 3));
  EXPECT_EQ(conj(Q(0, 1, 3)), Q(0, -1, 3));
  EXPECT_EQ(norm(Q(2, 1, 3)), 1);
  EXPECT_EQ(norm(Q(3, 1, 3)), 6);
  EXPECT_EQ(norm(Q(1, 0, 3)), 1);
}

TEST(QuadElem, TotallyPositive) {
  EXPECT_TRUE(is_totally_positive(Q(2, 1, 3)));
  EXPECT_FALSE(is_totally_positive(Q(1, 1, 3)));
  EXPECT_FALSE(is_totally_positive(Q(-1, 0, 3)));
}

TEST(QuadElem, MixedFieldsThrow) { EXPECT_ANY_THROW(Q(1, 1, 3) + Q(1, 1, 5)); }

TEST(QuadElem, ExactFloor) {
  EXPECT_EQ(floor(Q(0, 1, 3)), 1);
  EXPECT_EQ(floor(Q(R("1/2"), R("1/2"), 5)), 1);
  EXPECT_EQ(ceil(Q(2, 1, 3)), 4);
}

TEST(QuadField, RingDelta) {
  EXPECT_EQ(QuadField(Integer(3)).ring_delta(), Q(2, 1, 3));
  EXPECT_EQ(QuadField(Integer(11)).ring_delta(), Q(4, 1, 11));
  EXPECT_EQ(QuadField(Integer(5)).ring_delta(), Q(R("3/2"), R("1/2"), 5));
}

TEST(FundamentalUnit, Examples) {
  EXPECT_EQ(fundamental_unit_totally_positive(QuadField(Integer(3))), Q(2, 1, 3));
  EXPECT_EQ(fundamental_unit_totally_positive(QuadField(Integer(11))), Q(10, 3, 11));
  // Q(sqrt 5): the unit (1+sqrt5)/2 has norm -1, its square is the answer.
  EXPECT_EQ(fundamental_unit_totally_positive(QuadField(Integer(5))), Q(R("3/2"), R("1/2"), 5));
}

TEST(UnitIndex, Lambda) {
  const ModuleBasis basis(Q(2, 1, 3));
  const QuadElem eps = Q(2, 1, 3);
  EXPECT_EQ(unit_index_lambda(basis, 2, eps), 2);
  const std::int64_t l3 = unit_index_lambda(basis, 3, eps);
  QuadElem power = Q(1, 0, 3);
  for (std::int64_t j = 1; j <= l3; ++j) {
    power *= eps;
    const auto [u, v] = coords_in_basis(power - Q(1, 0, 3), basis);
    const bool trivial = is_integer(u / 3) && is_integer(v / 3);
    EXPECT_EQ(trivial, j == l3) << "j = " << j;
  }
}

TEST(ModuleBasis, Coordinates) {
  const ModuleBasis basis(Q(2, 1, 3));
  EXPECT_EQ(coords_in_basis(Q(2, 1, 3), basis), std::make_pair(Rational(0), Rational(1)));
  EXPECT_EQ(coords_in_basis(Q(7, 4, 3), basis), std::make_pair(Rational(-1), Rational(4)));
  EXPECT_EQ(coords_in_basis(Q(R("1/2"), 0, 3), basis), std::make_pair(R("1/2"), Rational(0)));
}

TEST(ModuleBasis, IdealNorms) {
  const ModuleBasis basis(Q(2, 1, 3));
  EXPECT_EQ(basis.ideal_norm(1, 0), 1);
  EXPECT_EQ(basis.ideal_norm(0, 1), 1);
  EXPECT_EQ(basis.ideal_norm(1, 1), 6);
}

TEST(UnitMatrix, MultiplicationByEps) {
  const ModuleBasis basis(Q(2, 1, 3));
  const UnitMatrix m = multiplication_matrix(basis, Q(2, 1, 3));
  EXPECT_EQ(m.m00, 0);
  EXPECT_EQ(m.m10, 1);
  EXPECT_EQ(m.m01, -1);
  EXPECT_EQ(m.m11, 4);
  EXPECT_THROW(multiplication_matrix(basis, Q(R("1/2"), 0, 3)), std::exception);
}

}  // namespace
}  // namespace rayzeta
