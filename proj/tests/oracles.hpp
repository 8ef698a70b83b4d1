// Independent reference implementations used only by the tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "permpat/perm.hpp"
#include "permpat/rational.hpp"

namespace oracle {

using permpat::Permutation;
using permpat::Rational;

inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Pattern of the entries at the chosen positions, as a one-line vector.
inline std::vector<int> pattern_at(const std::vector<int>& line, const std::vector<int>& pos) {
  std::vector<int> vals;
  for (int p : pos) vals.push_back(line[p]);
  std::vector<int> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int v : vals) out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  return out;
}

// Counts keyed by pattern one-line vector; subsets enumerated by bitmask.
inline std::map<std::vector<int>, std::uint64_t> brute_counts(const Permutation& pi, int k) {
  const std::vector<int> line(pi.one_line().begin(), pi.one_line().end());
  const int n = pi.size();
  std::map<std::vector<int>, std::uint64_t> counts;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> pos;
    for (int i = 0; i < n; ++i) {
      if (mask & (1U << i)) pos.push_back(i);
    }
    ++counts[pattern_at(line, pos)];
  }
  return counts;
}

// Counts in lexicographic order of S_k via std::next_permutation.
inline std::vector<std::uint64_t> brute_count_vector(const Permutation& pi, int k) {
  const auto counts = brute_counts(pi, k);
  std::vector<int> sigma(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) sigma[i] = i + 1;
  std::vector<std::uint64_t> out;
  do {
    const auto it = counts.find(sigma);
    out.push_back(it == counts.end() ? 0 : it->second);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

inline Rational kendall(const Permutation& pi) {
  const int n = pi.size();
  long conc = 0, disc = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) (pi[i] < pi[j] ? conc : disc) += 1;
  }
  return frac(conc - disc, static_cast<long>(n) * (n - 1) / 2);
}

inline Rational spearman(const Permutation& pi) {
  const long n = pi.size();
  long s = 0;
  for (int i = 0; i < n; ++i) {
    const long d = pi[i] - (i + 1);
    s += d * d;
  }
  return 1 - frac(6 * s, n * (n * n - 1));
}

// Classical Hoeffding D from bivariate ranks (x rank i+1, y rank pi(i)).
inline Rational hoeffding(const Permutation& pi) {
  const long n = pi.size();
  Rational d1, d2, d3;
  for (long i = 0; i < n; ++i) {
    const long r = i + 1, s = pi[static_cast<int>(i)];
    long q = 1;
    for (long j = 0; j < n; ++j) {
      if (j + 1 < r && pi[static_cast<int>(j)] < s) ++q;
    }
    d1 += Rational((q - 1) * (q - 2));
    d2 += Rational((r - 1) * (r - 2) * (s - 1) * (s - 2));
    d3 += Rational((r - 2) * (s - 2) * (q - 1));
  }
  const Rational num = Rational((n - 2) * (n - 3)) * d1 + d2 - Rational(2 * (n - 2)) * d3;
  Rational out = num / Rational(n * (n - 1) * (n - 2) * (n - 3) * (n - 4));
  out.canonicalize();
  return out;
}

// Hook length formula.
inline std::int64_t hook_dim(const std::vector<int>& parts) {
  int k = 0;
  for (int p : parts) k += p;
  std::int64_t num = 1;
  for (int i = 2; i <= k; ++i) num *= i;
  std::int64_t hooks = 1;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (int c = 0; c < parts[r]; ++c) {
      int below = 0;
      for (std::size_t rr = r + 1; rr < parts.size() && parts[rr] > c; ++rr) ++below;
      hooks *= (parts[r] - c - 1) + below + 1;
    }
  }
  return num / hooks;
}

// E[P P^T] over S_n by direct rational averaging of outer products.
inline std::vector<std::vector<Rational>> second_moment(int k, int n) {
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  std::size_t size = 1;
  for (int i = 2; i <= k; ++i) size *= static_cast<std::size_t>(i);
  std::vector<std::vector<Rational>> acc(size, std::vector<Rational>(size));
  std::uint64_t total = 0, subsets = 0;
  do {
    const auto pi = Permutation::from_one_line(line);
    const auto c = brute_count_vector(pi, k);
    if (subsets == 0) {
      for (auto x : c) subsets += x;
    }
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) acc[i][j] += Rational(static_cast<long>(c[i] * c[j]));
    }
    ++total;
  } while (std::next_permutation(line.begin(), line.end()));
  const Rational denom = Rational(static_cast<long>(total)) * Rational(static_cast<long>(subsets * subsets));
  for (auto& row : acc) {
    for (auto& x : row) {
      x /= denom;
      x.canonicalize();
    }
  }
  return acc;
}

}  // namespace oracle
