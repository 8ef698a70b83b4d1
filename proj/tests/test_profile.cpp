#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permpat/error.hpp"
#include "permpat/profile.hpp"

using namespace permpat;

TEST(Profile, MatchesWorkedExample) {
  const auto prof = profile(parse_permutation("4 1 2 5 3"), 3);
  const std::vector<std::uint64_t> expected{2, 2, 2, 1, 3, 0};
  EXPECT_EQ(prof.counts, expected);
  EXPECT_EQ(prof.density(4), oracle::frac(3, 10));
  EXPECT_EQ(prof.total(), 10U);
}

TEST(Profile, TrivialSizes) {
  const auto one = profile(parse_permutation("1"), 1);
  EXPECT_EQ(one.counts, std::vector<std::uint64_t>{1});
  EXPECT_EQ(one.density(0), 1);
  EXPECT_THROW(profile(parse_permutation("1 2"), 3), Error);
}

TEST(Profile, AgreesWithBruteForceOnAllSmallPermutations) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& pi : all_permutations(n)) {
      for (int k = 1; k <= std::min(n, 4); ++k) {
        ASSERT_EQ(profile(pi, k).counts, oracle::brute_count_vector(pi, k)) << pi.to_string() << " k=" << k;
      }
    }
  }
}

TEST(Profile, AgreesWithBruteForceOnRandomPermutations) {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 8 + trial % 12;
    const int k = 2 + trial % 5;
    const auto pi = sample_uniform(n, rng);
    ASSERT_EQ(profile(pi, k).counts, oracle::brute_count_vector(pi, k)) << pi.to_string() << " k=" << k;
  }
}

TEST(Profile, FastCounterMatchesSubsetWalker) {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 12 + 3 * trial;
    const int k = 1 + trial % 6;
    std::vector<int> line;
    shuffle_into(line, n, rng);
    std::vector<std::uint64_t> fast(factorial(k)), slow(factorial(k), 0);
    count_patterns(line, k, fast);
    detail::for_each_pattern(line, k, [&](std::int64_t r) { ++slow[static_cast<std::size_t>(r)]; });
    ASSERT_EQ(fast, slow) << "n=" << n << " k=" << k;
  }
}

TEST(Profile, BudgetRejectsHugeEnumerations) {
  Rng rng(1);
  const auto pi = sample_uniform(200, rng);
  ProfileOptions opts;
  opts.subset_budget = 1000;
  try {
    profile(pi, 3, opts);
    FAIL() << "expected TooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(ProfileSampled, ExhaustiveModeIsExact) {
  const auto pi = parse_permutation("4 1 2 5 3");
  Rng rng(5);
  const auto est = profile_sampled(pi, 3, 10, rng, true);
  EXPECT_FALSE(est.approximate);
  EXPECT_DOUBLE_EQ(est.densities[4], 0.3);
  EXPECT_DOUBLE_EQ(est.std_errors[4], 0.0);
}

TEST(ProfileSampled, EstimatesWithinErrorBars) {
  Rng gen(11);
  const auto pi = sample_uniform(60, gen);
  const auto exact = profile(pi, 3).densities();
  Rng rng(12);
  const auto est = profile_sampled(pi, 3, 40000, rng);
  EXPECT_TRUE(est.approximate);
  for (std::size_t i = 0; i < exact.size(); ++i) {
    EXPECT_NEAR(est.densities[i], exact[i].get_d(), 5 * est.std_errors[i] + 1e-12);
  }
}
