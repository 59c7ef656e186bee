#include "helpers.hpp"

#include <gtest/gtest.h>

namespace rayzeta {
namespace {

using testing::R;

TEST(Bernoulli, FirstPolynomial) {
  EXPECT_EQ(bernoulli1(R("1/2")), 0);
  EXPECT_EQ(bernoulli1(R("1")), R("1/2"));
  EXPECT_EQ(bernoulli1(R("3/4")), R("1/4"));
}

TEST(Bernoulli, SecondPolynomial) {
  EXPECT_EQ(bernoulli2(R("1")), R("1/6"));
  EXPECT_EQ(bernoulli2(R("1/2")), R("-1/12"));
  EXPECT_EQ(bernoulli2(R("0")), R("1/6"));
}

TEST(FracUnit, RangeIsHalfOpenAtZero) {
  EXPECT_EQ(frac_unit(R("7/2")), R("1/2"));
  EXPECT_EQ(frac_unit(R("3")), 1);
  EXPECT_EQ(frac_unit(R("-1/4")), R("3/4"));
  EXPECT_EQ(int_part_unit(R("3")), 2);
  EXPECT_EQ(int_part_unit(R("-1/4")), -1);
}

TEST(Residues, ZeroAndOneConventions) {
  EXPECT_EQ(residue_zero(std::int64_t{2}, 2), 0);
  EXPECT_EQ(residue_zero(std::int64_t{-1}, 5), 4);
  EXPECT_EQ(residue_zero(std::int64_t{7}, 7), 0);
  EXPECT_EQ(residue_one(std::int64_t{2}, 2), 2);
  EXPECT_EQ(residue_one(std::int64_t{5}, 3), 2);
  EXPECT_EQ(residue_one(std::int64_t{3}, 3), 3);
  EXPECT_EQ(residue_one(Integer(-6), Integer(3)), 3);
}

TEST(KernelF, Examples) {
  EXPECT_EQ(kernel_F(R("1/2"), R("3/7")), R("-1/12"));
  EXPECT_EQ(kernel_F(R("1"), R("1")), R("-1/12"));
  EXPECT_EQ(kernel_F(R("1"), R("1/2")), R("1/6"));
}

TEST(Squarefree, SmallCases) {
  EXPECT_TRUE(is_squarefree(Integer(3)));
  EXPECT_FALSE(is_squarefree(Integer(27)));
  EXPECT_FALSE(is_squarefree(Integer(18)));
  EXPECT_TRUE(is_squarefree(Integer(1155)));
  EXPECT_TRUE(is_square(Integer(144)));
  EXPECT_EQ(isqrt(Integer(143)), 11);
}

TEST(Rationals, ParseAndPrint) {
  EXPECT_EQ(to_string(R("4/6")), "2/3");
  EXPECT_EQ(to_string(R("-3")), "-3/1");
  EXPECT_EQ(R(" 5 / 10 "), R("1/2"));
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("abc"), std::exception);
}

}  // namespace
}  // namespace rayzeta
