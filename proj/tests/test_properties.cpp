#include <gtest/gtest.h>

#include <cstring>

#include "oracles.hpp"
#include "permpat/moments.hpp"
#include "permpat/montecarlo.hpp"
#include "permpat/profile.hpp"
#include "permpat/rep.hpp"

using namespace permpat;

namespace {

// Index map sigma -> f(sigma) on S_k in lexicographic order.
std::vector<std::size_t> relabel(int k, Permutation (Permutation::*f)() const) {
  std::vector<std::size_t> out;
  for (const auto& s : all_permutations(k)) out.push_back(static_cast<std::size_t>(lex_index((s.*f)())));
  return out;
}

}  // namespace

TEST(ProfileProperties, SymmetriesPermuteCounts) {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 6 + trial % 15;
    const int k = 2 + trial % 4;
    const auto pi = sample_uniform(n, rng);
    const auto base = profile(pi, k).counts;
    for (auto f : {&Permutation::inverse, &Permutation::reversed, &Permutation::complemented}) {
      const auto map = relabel(k, f);
      const auto moved = profile((pi.*f)(), k).counts;
      for (std::size_t s = 0; s < base.size(); ++s) ASSERT_EQ(moved[map[s]], base[s]);
    }
  }
}

TEST(ProfileProperties, CountsSumToBinomial) {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial;
    const int k = 1 + trial % std::min(n, 6);
    const auto prof = profile(sample_uniform(n, rng), k);
    EXPECT_EQ(prof.total(), binomial(n, k));
    Rational sum;
    for (const auto& d : prof.densities()) sum += d;
    EXPECT_EQ(sum, 1);
  }
}

TEST(ProfileProperties, ParsevalInTheBasis) {
  Rng rng(8);
  const BasisMatrix u = build_U(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto prof = profile(sample_uniform(9 + trial, rng), 4);
    std::vector<QNum> p;
    Rational norm;
    for (const auto& d : prof.densities()) {
      p.emplace_back(d);
      norm += d * d;
    }
    QNum sum;
    for (std::size_t c = 0; c < u.size(); ++c) {
      const QNum x = dot(u.column(c), p);
      sum += x * x;
    }
    EXPECT_EQ(sum, QNum(norm));
  }
}

TEST(MomentProperties, OutOfSampleExactness) {
  for (int k = 1; k <= 3; ++k) {
    const MomentMatrix m = interpolate_moments(k);
    const int n = 2 * k + 1;
    const RMatrix direct = exact_second_moment(k, n);
    const Rational c(big_binomial(n, k));
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) EXPECT_EQ(m.at(i, j)(Rational(n)), c * direct(i, j));
    }
  }
}

TEST(MonteCarloProperties, BitIdenticalUnderThreadVariation) {
  const BasisMatrix u = build_U(3);
  std::vector<std::vector<double>> dirs;
  for (std::size_t c = 0; c < u.size(); ++c) {
    std::vector<double> v;
    for (const auto& q : u.column(c)) v.push_back(q.to_double());
    dirs.push_back(v);
  }
  McConfig cfg;
  cfg.k = 3;
  cfg.directions = dirs;
  cfg.n_grid = {10, 20, 30};
  cfg.samples = 500;
  cfg.seed = 2718281828;
  const auto serial = run_scaling(cfg);
  for (unsigned threads : {2U, 3U, 8U}) {
    cfg.options.threads = threads;
    const auto parallel = run_scaling(cfg);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t d = 0; d < serial.size(); ++d) {
      for (std::size_t i = 0; i < serial[d].points.size(); ++i) {
        EXPECT_EQ(std::memcmp(&serial[d].points[i].second_moment, &parallel[d].points[i].second_moment,
                              sizeof(double)),
                  0);
        EXPECT_EQ(serial[d].points[i].stderr, parallel[d].points[i].stderr);
        EXPECT_EQ(serial[d].points[i].mean, parallel[d].points[i].mean);
      }
    }
  }
}
