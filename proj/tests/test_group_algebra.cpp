#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permpat/error.hpp"
#include "permpat/group_algebra.hpp"

using namespace permpat;

TEST(GroupAlgebra, CompositionProduct) {
  const auto a = GroupAlgebraElt::basis(parse_permutation("213"));
  const auto b = GroupAlgebraElt::basis(parse_permutation("132"));
  EXPECT_EQ((a * b).to_string(), "231");
}

TEST(YoungSymmetrizer, WorkedExample) {
  const Tableau t = make_tableau({{1, 2}, {3}});
  EXPECT_EQ(young_symmetrizer(t).to_string(), "123+213-312-321");
}

TEST(YoungSymmetrizer, IdealDimensionIsShapeDimension) {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& lambda : partitions(k)) {
      std::vector<std::vector<int>> rows;
      int next = 1;
      for (int len : lambda.parts) {
        rows.emplace_back();
        for (int c = 0; c < len; ++c) rows.back().push_back(next++);
      }
      const auto c = young_symmetrizer(make_tableau(rows));
      EXPECT_EQ(left_ideal_dimension(c), static_cast<std::size_t>(oracle::hook_dim(lambda.parts))) << lambda.label();
      // c_T^2 is a nonzero multiple of c_T (k!/d times).
      auto sq = c * c;
      auto scaled = c;
      scaled *= Rational(static_cast<long>(factorial(k))) / Rational(oracle::hook_dim(lambda.parts));
      EXPECT_EQ(sq, scaled) << lambda.label();
    }
  }
}

TEST(Tableau, Validation) {
  EXPECT_THROW(make_tableau({{1}, {2, 3}}), Error);
  EXPECT_THROW(make_tableau({{1, 1}}), Error);
  EXPECT_THROW(make_tableau({{1, 3}}), Error);
  const Tableau t = make_tableau({{1, 2}, {3}});
  EXPECT_EQ(row_group(t).size(), 2U);
  EXPECT_EQ(column_group(t).size(), 2U);
}
