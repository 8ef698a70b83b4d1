#include "permpat/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "permpat/error.hpp"

namespace permpat {

std::uint64_t Profile::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

Rational Profile::density(std::size_t index) const {
  Rational q(BigInt(std::to_string(counts.at(index))), big_binomial(n, k));
  q.canonicalize();
  return q;
}

std::vector<Rational> Profile::densities() const {
  std::vector<Rational> out;
  out.reserve(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) out.push_back(density(i));
  return out;
}

namespace {

void check_k(int k, int n) {
  if (k < 1 || k > kMaxPatternSize) {
    throw Error(ErrorKind::InvalidArgument,
                "pattern size k must be in 1.." + std::to_string(kMaxPatternSize));
  }
  if (k > n) {
    throw Error(ErrorKind::InvalidArgument,
                "pattern size k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  }
}

}  // namespace

namespace {

// Chooses the first k-1 pattern entries by DFS and settles the last one in
// O(k) from a table of suffix counts: below[p][v] = #{j >= p : pi_j <= v}.
class PrefixCounter {
 public:
  PrefixCounter(std::span<const int> values, int k, std::span<std::uint64_t> counts)
      : values_(values), n_(static_cast<int>(values.size())), k_(k), counts_(counts),
        stride_(static_cast<std::size_t>(n_) + 1) {
    for (int i = 0; i < k; ++i) weight_[i] = detail::kFactorials[k - 1 - i];
    below_.assign(stride_ * stride_, 0);
    for (int p = n_ - 1; p >= 0; --p) {
      const std::uint32_t* next = below_.data() + (p + 1) * stride_;
      std::uint32_t* row = below_.data() + p * stride_;
      const int x = values_[p];
      for (int v = 0; v <= n_; ++v) row[v] = next[v] + (x <= v ? 1 : 0);
    }
  }

  void run() { descend(0, 0, 0); }

 private:
  void descend(int depth, int start, std::int64_t rank) {
    if (depth == k_ - 1) {
      settle_last(start, rank);
      return;
    }
    const int last = n_ - (k_ - depth);
    for (int j = start; j <= last; ++j) {
      const int v = values_[j];
      std::int64_t r = rank;
      for (int i = 0; i < depth; ++i) r += (v < chosen_[i]) ? weight_[i] : 0;
      chosen_[depth] = v;
      descend(depth + 1, j + 1, r);
    }
  }

  void settle_last(int start, std::int64_t rank) {
    const int m = k_ - 1;
    std::array<std::pair<int, std::int64_t>, kMaxPatternSize> sorted{};
    for (int i = 0; i < m; ++i) sorted[i] = {chosen_[i], weight_[i]};
    std::sort(sorted.begin(), sorted.begin() + m);
    const std::uint32_t* row = below_.data() + static_cast<std::size_t>(start) * stride_;
    std::int64_t above = 0;  // weights of chosen values above the current interval
    for (int i = 0; i < m; ++i) above += sorted[i].second;
    int lo = 0;
    for (int slot = 0; slot <= m; ++slot) {
      const int hi = slot < m ? sorted[slot].first - 1 : n_;
      const std::uint32_t c = row[hi] - row[lo];
      if (c != 0) counts_[static_cast<std::size_t>(rank + above)] += c;
      if (slot < m) {
        above -= sorted[slot].second;
        lo = sorted[slot].first;
      }
    }
  }

  std::span<const int> values_;
  int n_;
  int k_;
  std::span<std::uint64_t> counts_;
  std::size_t stride_;
  std::vector<std::uint32_t> below_;
  std::array<int, kMaxPatternSize> chosen_{};
  std::array<std::int64_t, kMaxPatternSize> weight_{};
};

// The table costs O(n^2); it pays off once C(n,k) clearly dominates.
constexpr int kPrefixTableMinN = 12;
constexpr int kPrefixTableMaxN = 4096;

}  // namespace

void count_patterns(std::span<const int> one_line, int k, std::span<std::uint64_t> counts) {
  std::fill(counts.begin(), counts.end(), 0);
  const int n = static_cast<int>(one_line.size());
  if (k < 1 || k > n) return;
  if (k >= 2 && n >= kPrefixTableMinN && n <= kPrefixTableMaxN) {
    PrefixCounter(one_line, k, counts).run();
    return;
  }
  detail::for_each_pattern(one_line, k, [&](std::int64_t rank) { ++counts[rank]; });
}

Profile profile(const Permutation& pi, int k, const ProfileOptions& options) {
  check_k(k, pi.size());
  const std::uint64_t subsets = binomial(pi.size(), k);
  if (subsets > options.subset_budget) {
    throw Error(ErrorKind::TooLarge, "C(" + std::to_string(pi.size()) + "," + std::to_string(k) +
                                         ") = " + std::to_string(subsets) +
                                         " subsets exceeds the budget of " +
                                         std::to_string(options.subset_budget));
  }
  Profile out{k, pi.size(), std::vector<std::uint64_t>(factorial(k), 0)};
  count_patterns(pi.one_line(), k, out.counts);
  return out;
}

ProfileEstimate profile_sampled(const Permutation& pi, int k, std::uint64_t samples, Rng& rng,
                                bool exhaustive) {
  const int n = pi.size();
  check_k(k, n);
  if (samples < 1) throw Error(ErrorKind::InvalidArgument, "samples must be >= 1");
  const auto patterns = static_cast<std::size_t>(factorial(k));
  ProfileEstimate est{k, n, samples, true, std::vector<double>(patterns, 0.0),
                      std::vector<double>(patterns, 0.0)};

  if (exhaustive) {
    const std::uint64_t subsets = binomial(n, k);
    if (samples != subsets) {
      throw Error(ErrorKind::InvalidArgument, "exhaustive sampling requires samples == C(n,k) = " +
                                                  std::to_string(subsets));
    }
    std::vector<std::uint64_t> counts(patterns);
    count_patterns(pi.one_line(), k, counts);
    for (std::size_t s = 0; s < patterns; ++s) {
      est.densities[s] = static_cast<double>(counts[s]) / static_cast<double>(subsets);
    }
    est.approximate = false;
    return est;
  }

  std::vector<std::uint64_t> hits(patterns, 0);
  std::vector<int> positions;
  positions.reserve(static_cast<std::size_t>(k));
  std::array<int, kMaxPatternSize> values{};
  for (std::uint64_t s = 0; s < samples; ++s) {
    // Floyd's algorithm: k distinct positions, uniformly.
    positions.clear();
    for (int j = n - k; j < n; ++j) {
      const int t = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(j) + 1));
      if (std::find(positions.begin(), positions.end(), t) == positions.end()) {
        positions.push_back(t);
      } else {
        positions.push_back(j);
      }
    }
    std::sort(positions.begin(), positions.end());
    for (int i = 0; i < k; ++i) values[i] = pi[positions[i]];
    std::int64_t rank = 0;
    for (int i = 0; i < k; ++i) {
      int smaller_after = 0;
      for (int j = i + 1; j < k; ++j) smaller_after += values[j] < values[i] ? 1 : 0;
      rank += smaller_after * detail::kFactorials[k - 1 - i];
    }
    ++hits[rank];
  }
  const auto m = static_cast<double>(samples);
  for (std::size_t i = 0; i < patterns; ++i) {
    const double p = static_cast<double>(hits[i]) / m;
    est.densities[i] = p;
    est.std_errors[i] = std::sqrt(p * (1.0 - p) / m);
  }
  return est;
}

void shuffle_into(std::vector<int>& one_line, int n, Rng& rng) {
  one_line.resize(static_cast<std::size_t>(n));
  std::iota(one_line.begin(), one_line.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(one_line[i], one_line[j]);
  }
}

Permutation sample_uniform(int n, Rng& rng) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "sample_uniform needs n >= 1");
  std::vector<int> v;
  shuffle_into(v, n, rng);
  return Permutation::from_one_line(v);
}

}  // namespace permpat
