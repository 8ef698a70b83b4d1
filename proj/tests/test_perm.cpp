#include <gtest/gtest.h>

#include <sstream>

#include "permpat/error.hpp"
#include "permpat/perm.hpp"

using namespace permpat;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;  // sentinel, checked with EXPECT_THROW elsewhere
}

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation::from_one_line({2, 2}), Error);
  EXPECT_EQ(kind_of([] { Permutation::from_one_line({2, 2}); }), ErrorKind::NotABijection);
  EXPECT_EQ(kind_of([] { Permutation::from_one_line({0, 1}); }), ErrorKind::NotABijection);
  EXPECT_EQ(kind_of([] { Permutation::from_one_line({1, 3}); }), ErrorKind::NotABijection);
}

TEST(Permutation, ParsesSeparatorsAndCompactForm) {
  const auto a = parse_permutation("4 1 2 5 3");
  EXPECT_EQ(a, parse_permutation("4,1,2,5,3"));
  EXPECT_EQ(a, parse_permutation("41253"));
  EXPECT_EQ(a.to_string(), "41253");
  EXPECT_EQ(parse_permutation("1").size(), 1);
  EXPECT_EQ(kind_of([] { parse_permutation("1 x 2"); }), ErrorKind::ParseError);
}

TEST(Permutation, InverseReverseComplement) {
  const auto p = parse_permutation("2 4 1 3");
  EXPECT_EQ(p.inverse(), parse_permutation("3 1 4 2"));
  EXPECT_EQ(p.reversed(), parse_permutation("3 1 4 2"));
  EXPECT_EQ(p.complemented(), parse_permutation("3 1 4 2"));
  EXPECT_EQ(compose(p, p.inverse()), Permutation::identity(4));
  EXPECT_EQ(p.sign(), -1);
  EXPECT_EQ(Permutation::identity(5).sign(), 1);
}

TEST(Permutation, ComposeAndThen) {
  const auto a = parse_permutation("213");
  const auto b = parse_permutation("132");
  // (a o b)(i) = a(b(i))
  EXPECT_EQ(compose(a, b), parse_permutation("231"));
  EXPECT_EQ(then(b, a), compose(a, b));
}

TEST(Permutation, LexIndexRoundTrip) {
  for (int k = 1; k <= 6; ++k) {
    const auto all = all_permutations(k);
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_EQ(lex_index(all[i]), static_cast<std::int64_t>(i));
      EXPECT_EQ(lex_perm(k, static_cast<std::int64_t>(i)), all[i]);
    }
  }
  EXPECT_EQ(lex_index(parse_permutation("123")), 0);
  EXPECT_EQ(lex_index(parse_permutation("321")), 5);
}

TEST(Permutation, PatternOfPositions) {
  const auto pi = parse_permutation("4 1 2 5 3");
  const auto id = [](const char* s) { return PatternId{3, lex_index(parse_permutation(s))}; };
  EXPECT_EQ(pattern_of(pi, std::vector<int>{1, 2, 4}), id("213"));
  EXPECT_EQ(pattern_of(pi, std::vector<int>{1, 3, 5}), id("312"));
  EXPECT_EQ(pattern_of(pi, std::vector<int>{2, 3, 5}), id("123"));
  EXPECT_EQ(kind_of([&] { pattern_of(pi, std::vector<int>{2, 1}); }), ErrorKind::BadPositions);
  EXPECT_EQ(kind_of([&] { pattern_of(pi, std::vector<int>{1, 6}); }), ErrorKind::BadPositions);
}

TEST(PermOfPoints, RanksBothCoordinates) {
  const std::vector<PlanePoint> pts{{0.1, 0.7}, {0.2, 0.1}, {0.3, 0.2}, {0.4, 0.9}, {0.5, 0.5}};
  EXPECT_EQ(perm_of_points(pts), parse_permutation("4 1 2 5 3"));
  std::vector<PlanePoint> shuffled{pts[3], pts[0], pts[4], pts[2], pts[1]};
  EXPECT_EQ(perm_of_points(shuffled), parse_permutation("4 1 2 5 3"));
  const std::vector<PlanePoint> tied{{0.1, 0.2}, {0.1, 0.3}};
  EXPECT_EQ(kind_of([&] { perm_of_points(tied); }), ErrorKind::DegeneratePoints);
}

TEST(PointsCsv, HeaderOptionalAndStrict) {
  std::istringstream with_header("y,z\n1,2\n2,1\n");
  EXPECT_EQ(read_points_csv(with_header).size(), 2U);
  std::istringstream plain("1;2\n2;1\n3;3\n");
  EXPECT_EQ(read_points_csv(plain, ';').size(), 3U);
  std::istringstream blank("1,2\n\n2,1\n");
  EXPECT_EQ(kind_of([&] { read_points_csv(blank); }), ErrorKind::ParseError);
  std::istringstream nan_row("1,2\nnan,1\n");
  EXPECT_EQ(kind_of([&] { read_points_csv(nan_row); }), ErrorKind::ParseError);
  std::istringstream one_col("1\n2\n");
  EXPECT_EQ(kind_of([&] { read_points_csv(one_col); }), ErrorKind::ParseError);
}
