#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "permpat/perm.hpp"
#include "permpat/random.hpp"
#include "permpat/rational.hpp"

namespace permpat {

inline constexpr int kMaxPatternSize = 8;
inline constexpr std::uint64_t kDefaultSubsetBudget = 1'000'000'000ULL;

/// Pattern counts N_sigma for every sigma in S_k, in lexicographic order.
struct Profile {
  int k = 0;
  int n = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;  // C(n, k)
  Rational density(std::size_t index) const;
  std::vector<Rational> densities() const;
};

struct ProfileOptions {
  std::uint64_t subset_budget = kDefaultSubsetBudget;
};

/// Exact k-profile by enumerating every k-subset of positions.
/// Throws TooLarge when C(n, k) exceeds the budget.
Profile profile(const Permutation& pi, int k, const ProfileOptions& options = {});

/// Same as profile() but writes into a caller-owned buffer of size k!.
void count_patterns(std::span<const int> one_line, int k, std::span<std::uint64_t> counts);

struct ProfileEstimate {
  int k = 0;
  int n = 0;
  std::uint64_t samples = 0;
  bool approximate = true;
  std::vector<double> densities;
  std::vector<double> std_errors;
};

/// Unbiased density estimates from `samples` uniform k-subsets drawn with
/// replacement. With `exhaustive` set and samples == C(n, k) every subset is
/// visited once and the result is exact.
ProfileEstimate profile_sampled(const Permutation& pi, int k, std::uint64_t samples, Rng& rng,
                                bool exhaustive = false);

/// Uniform permutation of size n (Fisher-Yates).
Permutation sample_uniform(int n, Rng& rng);
void shuffle_into(std::vector<int>& one_line, int n, Rng& rng);

namespace detail {

inline constexpr std::array<std::int64_t, kMaxPatternSize + 1> kFactorials = {
    1, 1, 2, 6, 24, 120, 720, 5040, 40320};

/// Visits the lexicographic pattern rank of every k-subset of positions.
/// The rank is maintained incrementally: appending a value v after values
/// x_0..x_{d-1} adds (k-1-i)! for every earlier x_i > v (Lehmer code).
template <class Visit>
class PatternWalker {
 public:
  PatternWalker(std::span<const int> values, int k, Visit& visit)
      : values_(values), n_(static_cast<int>(values.size())), k_(k), visit_(visit) {
    for (int i = 0; i < k; ++i) weight_[i] = kFactorials[k - 1 - i];
  }

  void run() {
    if (k_ == 0 || k_ > n_) return;
    descend(0, 0, 0);
  }

 private:
  void descend(int depth, int start, std::int64_t rank) {
    const int last = n_ - (k_ - depth);
    if (depth == k_ - 1) {
      for (int j = start; j <= last; ++j) {
        const int v = values_[j];
        std::int64_t r = rank;
        for (int i = 0; i < depth; ++i) r += (v < chosen_[i]) ? weight_[i] : 0;
        visit_(r);
      }
      return;
    }
    for (int j = start; j <= last; ++j) {
      const int v = values_[j];
      std::int64_t r = rank;
      for (int i = 0; i < depth; ++i) r += (v < chosen_[i]) ? weight_[i] : 0;
      chosen_[depth] = v;
      descend(depth + 1, j + 1, r);
    }
  }

  std::span<const int> values_;
  int n_;
  int k_;
  Visit& visit_;
  std::array<int, kMaxPatternSize> chosen_{};
  std::array<std::int64_t, kMaxPatternSize> weight_{};
};

template <class Visit>
void for_each_pattern(std::span<const int> values, int k, Visit&& visit) {
  PatternWalker<std::remove_reference_t<Visit>> walker(values, k, visit);
  walker.run();
}

}  // namespace detail

}  // namespace permpat
