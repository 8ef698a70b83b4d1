#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace permpat {

inline constexpr std::uint64_t kDefaultPerSampleBudget = 10'000'000ULL;

/// Sample moments of <v, P_kn> over uniform random permutations.
struct MomentEstimate {
  int n = 0;
  std::uint64_t samples = 0;
  double mean = 0.0;
  double mean_stderr = 0.0;
  double second_moment = 0.0;
  double stderr = 0.0;  // of second_moment
};

struct SampleOptions {
  unsigned threads = 1;
  std::uint64_t per_sample_budget = kDefaultPerSampleBudget;
};

/// Projections <d, P_kn(pi_i)> for every direction d and sample i, as a
/// samples x directions row-major table. Sample i uses its own stream
/// split_seed(split_seed(seed, n), i), so results do not depend on threads.
/// Throws TooLarge when C(n,k) exceeds the per-sample budget.
std::vector<double> sample_projections(int k, std::span<const std::vector<double>> directions, int n,
                                       std::uint64_t samples, std::uint64_t seed,
                                       const SampleOptions& options = {});

MomentEstimate estimate_projection_moment(int k, std::span<const double> v, int n,
                                          std::uint64_t samples, std::uint64_t seed,
                                          const SampleOptions& options = {});

struct McConfig {
  int k = 0;
  std::vector<std::vector<double>> directions;  // each of length k!
  std::vector<int> n_grid;                       // strictly increasing
  std::uint64_t samples = 0;                     // >= 2
  std::uint64_t seed = 0;
  SampleOptions options;
  void validate() const;
};

struct ScalingPoint {
  int n = 0;
  double mean = 0.0;
  double second_moment = 0.0;
  double stderr = 0.0;
  bool usable = false;  // relative stderr below kMaxRelativeStderr
};

inline constexpr double kMaxRelativeStderr = 0.2;

struct SlopeFit {
  double slope = 0.0;
  double stderr = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::size_t points = 0;
};

struct ScalingReport {
  int k = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<int> block;  // r, when known; the target exponent is -r
  std::vector<ScalingPoint> points;
  std::optional<SlopeFit> fit;
};

/// One report per direction; all directions share the same sampled permutations.
std::vector<ScalingReport> run_scaling(const McConfig& config);

/// Least squares of log(second moment) on log(n) over usable points, with a
/// 95% Student-t interval. Throws InsufficientData with fewer than 3 points.
SlopeFit fit_scaling_exponent(const ScalingReport& report);
SlopeFit fit_log_log(std::span<const double> ns, std::span<const double> values);

struct CovEstimate {
  int n = 0;
  double value = 0.0;  // n^{(r+s)/2} cov(<u,P>, <v,P>)
  double stderr = 0.0;
  bool exact = false;  // u or v constant on the simplex
};

CovEstimate cross_cov_estimate(int k, std::span<const double> u, int r, std::span<const double> v,
                               int s, int n, std::uint64_t samples, std::uint64_t seed,
                               const SampleOptions& options = {});

}  // namespace permpat
