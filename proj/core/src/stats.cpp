#include "permpat/stats.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "permpat/error.hpp"
#include "permpat/profile.hpp"
#include "permpat/random.hpp"
#include "permpat/rep.hpp"

namespace permpat {

namespace {

// Positions sorted by key; ties among equal keys ordered by the tie-breaker.
std::vector<std::size_t> order_by(std::span<const double> keys, std::span<const std::uint64_t> breaker) {
  std::vector<std::size_t> idx(keys.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (keys[a] != keys[b]) return keys[a] < keys[b];
    return breaker[a] < breaker[b];
  });
  return idx;
}

bool has_ties(std::span<const double> keys, const std::vector<std::size_t>& order) {
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (keys[order[i]] == keys[order[i - 1]]) return true;
  }
  return false;
}

QNum abs_value(const QNum& x) { return x.sign() < 0 ? -x : x; }

std::vector<QNum> combine(const std::vector<QNum>& a, const Rational& ca, const std::vector<QNum>& b,
                          const Rational& cb) {
  std::vector<QNum> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * ca + b[i] * cb;
  return out;
}

std::vector<QNum> rational_vector(std::initializer_list<long> values) {
  return std::vector<QNum>(values.begin(), values.end());
}

Rational require_rational(const QNum& q) {
  if (!q.is_rational()) throw Error(ErrorKind::NotRepresentable, "expected a rational value, got " + q.to_string());
  return q.rational_part();
}

}  // namespace

RankedSample ranks_to_perm(std::span<const PlanePoint> sample, TiePolicy policy, std::uint64_t seed) {
  const std::size_t n = sample.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty sample");
  std::vector<double> ys(n), zs(n);
  for (std::size_t i = 0; i < n; ++i) {
    ys[i] = sample[i].y;
    zs[i] = sample[i].z;
    if (!std::isfinite(ys[i]) || !std::isfinite(zs[i])) {
      throw Error(ErrorKind::DegeneratePoints, "non-finite coordinate in row " + std::to_string(i + 1));
    }
  }
  std::vector<std::uint64_t> ybreak(n, 0), zbreak(n, 0);
  if (policy == TiePolicy::RandomBreak) {
    Rng rng(seed);
    for (auto& b : ybreak) b = rng();
    for (auto& b : zbreak) b = rng();
  }
  const auto yorder = order_by(ys, ybreak);
  const auto zorder = order_by(zs, zbreak);
  const bool ties = has_ties(ys, yorder) || has_ties(zs, zorder);
  if (ties && policy == TiePolicy::Error) {
    throw Error(ErrorKind::TiesPresent, "tied values present; ranks need a tie-breaking policy");
  }
  std::vector<int> zrank(n);
  for (std::size_t r = 0; r < n; ++r) zrank[zorder[r]] = static_cast<int>(r) + 1;
  std::vector<int> line(n);
  for (std::size_t r = 0; r < n; ++r) line[r] = zrank[yorder[r]];
  return {Permutation::from_one_line(line), ties};
}

std::string to_string(Statistic s) {
  switch (s) {
    case Statistic::KendallTau: return "kendall_tau";
    case Statistic::SpearmanRho: return "spearman_rho";
    case Statistic::FisherLeeDelta: return "fisher_lee_delta";
    case Statistic::HoeffdingD: return "hoeffding_D";
    case Statistic::BkrB: return "bkr_B";
    case Statistic::BergsmaDassios: return "bergsma_dassios";
  }
  return "unknown";
}

Statistic parse_statistic(std::string_view name) {
  static const std::map<std::string, Statistic, std::less<>> names = {
      {"tau", Statistic::KendallTau},        {"kendall_tau", Statistic::KendallTau},
      {"rho", Statistic::SpearmanRho},       {"spearman_rho", Statistic::SpearmanRho},
      {"delta", Statistic::FisherLeeDelta},  {"fisher_lee_delta", Statistic::FisherLeeDelta},
      {"D", Statistic::HoeffdingD},          {"hoeffding_D", Statistic::HoeffdingD},
      {"B", Statistic::BkrB},                {"bkr_B", Statistic::BkrB},
      {"BD", Statistic::BergsmaDassios},     {"bergsma_dassios", Statistic::BergsmaDassios},
  };
  const auto it = names.find(name);
  if (it == names.end()) throw Error(ErrorKind::InvalidArgument, "unknown statistic '" + std::string(name) + "'");
  return it->second;
}

std::vector<QNum> builtin_matrix_element(int k, std::string_view lambda, int i, int j) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::string>, RepTable> cache;
  std::lock_guard lock(mutex);
  const auto key = std::make_pair(k, std::string(lambda));
  auto it = cache.find(key);
  if (it == cache.end()) {
    const Partition p = parse_partition(lambda);
    it = cache.emplace(key, expand_rep(k, load_generators(k, p))).first;
  }
  return it->second.matrix_element(i, j);
}

QNum LinearForm::evaluate(std::span<const std::uint64_t> counts, int n) const {
  QNum acc;
  for (std::size_t s = 0; s < weights.size(); ++s) {
    if (counts[s] == 0 || weights[s].is_zero()) continue;
    acc += weights[s] * Rational(BigInt(std::to_string(counts[s])));
  }
  acc *= Rational(1) / Rational(big_binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
  return acc;
}

QNum LinearForm::evaluate(const Permutation& pi) const {
  if (pi.size() < k) {
    throw Error(ErrorKind::InvalidArgument, "statistic needs n >= " + std::to_string(k));
  }
  std::vector<std::uint64_t> counts(weights.size());
  count_patterns(pi.one_line(), k, counts);
  return evaluate(counts, pi.size());
}

LinearForm linear_form(Statistic s, int n) {
  switch (s) {
    case Statistic::KendallTau:
      return {2, rational_vector({1, -1})};
    case Statistic::SpearmanRho: {
      const Rational a = make_rational(4L * n, 3L * n + 3);
      const Rational b = make_rational(-(n - 3L), 3L * n + 3);
      return {3, combine(builtin_matrix_element(3, "21", 2, 2), a, builtin_matrix_element(3, "111", 1, 1),
                         b)};
    }
    case Statistic::FisherLeeDelta:
      return {3, builtin_matrix_element(3, "111", 1, 1)};
    case Statistic::HoeffdingD:
      return {5, combine(builtin_matrix_element(5, "32", 4, 4), make_rational(1, 60),
                         builtin_matrix_element(5, "221", 3, 3), make_rational(1, 60))};
    case Statistic::BkrB:
      return {5, combine(builtin_matrix_element(5, "32", 4, 4), make_rational(5, 2),
                         builtin_matrix_element(5, "221", 3, 3), make_rational(-3, 2))};
    case Statistic::BergsmaDassios:
      return {4, builtin_matrix_element(4, "22", 2, 2)};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown statistic");
}

QNum statistic_value(Statistic s, const Permutation& pi) { return linear_form(s, pi.size()).evaluate(pi); }

Rational kendall_tau(const Permutation& pi) {
  return require_rational(statistic_value(Statistic::KendallTau, pi));
}

Rational spearman_rho(const Permutation& pi) {
  return require_rational(statistic_value(Statistic::SpearmanRho, pi));
}

Rational fisher_lee_delta(const Permutation& pi) {
  return require_rational(statistic_value(Statistic::FisherLeeDelta, pi));
}

QNum hoeffding_D(const Permutation& pi) { return statistic_value(Statistic::HoeffdingD, pi); }
QNum bkr_B(const Permutation& pi) { return statistic_value(Statistic::BkrB, pi); }
QNum bergsma_dassios(const Permutation& pi) { return statistic_value(Statistic::BergsmaDassios, pi); }
QNum quasirandom_score(const Permutation& pi) { return bergsma_dassios(pi); }

Rational bergsma_dassios_densities(const Permutation& pi) {
  if (pi.size() < 4) throw Error(ErrorKind::InvalidArgument, "statistic needs n >= 4");
  static const char* const kPatterns[] = {"1234", "1243", "2134", "2143", "3412", "3421", "4312", "4321"};
  const Profile prof = profile(pi, 4);
  Rational sum;
  for (const char* p : kPatterns) sum += prof.density(static_cast<std::size_t>(lex_index(parse_permutation(p))));
  return sum;
}

QNum independence_family(const Permutation& pi, const Rational& alpha) {
  const LinearForm form{5, combine(builtin_matrix_element(5, "32", 4, 4), alpha,
                                   builtin_matrix_element(5, "221", 3, 3), 1 - alpha)};
  return form.evaluate(pi);
}

PValue null_pvalue(Statistic s, const QNum& observed, int n, std::uint64_t samples, std::uint64_t seed,
                   unsigned threads) {
  if (samples < 100) throw Error(ErrorKind::InvalidArgument, "null simulation needs at least 100 samples");
  const LinearForm form = linear_form(s, n);
  if (n < form.k) throw Error(ErrorKind::InvalidArgument, "statistic needs n >= " + std::to_string(form.k));
  const std::uint64_t subsets = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(form.k));
  if (subsets > kDefaultSubsetBudget) {
    throw Error(ErrorKind::TooLarge, "C(" + std::to_string(n) + "," + std::to_string(form.k) +
                                         ") subsets per sample exceeds the budget");
  }
  const QNum target = abs_value(observed);
  std::vector<std::uint8_t> hit(samples, 0);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<int> line;
    std::vector<std::uint64_t> counts(form.weights.size());
    for (std::uint64_t i = begin; i < end; ++i) {
      Rng rng(split_seed(seed, i));
      shuffle_into(line, n, rng);
      count_patterns(line, form.k, counts);
      hit[i] = (abs_value(form.evaluate(counts, n)) - target).sign() >= 0;
    }
  };
  threads = std::max(1U, threads);
  if (threads == 1) {
    work(0, samples);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (samples + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min(samples, t * chunk);
      pool.emplace_back(work, begin, std::min(samples, begin + chunk));
    }
  }
  PValue out;
  out.samples = samples;
  out.seed = seed;
  out.exceedances = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), 1));
  out.p = static_cast<double>(out.exceedances + 1) / static_cast<double>(samples + 1);
  return out;
}

TestResult run_test(Statistic s, std::span<const PlanePoint> sample, TiePolicy policy,
                    std::uint64_t seed, std::uint64_t null_samples, unsigned threads) {
  const RankedSample ranked = ranks_to_perm(sample, policy, seed);
  TestResult result;
  result.name = to_string(s);
  result.n = ranked.perm.size();
  result.ties_broken = ranked.ties_broken;
  result.value = statistic_value(s, ranked.perm);
  if (null_samples > 0) {
    result.p_value = null_pvalue(s, result.value, result.n, null_samples, split_seed(seed, 1), threads);
  }
  return result;
}

}  // namespace permpat
