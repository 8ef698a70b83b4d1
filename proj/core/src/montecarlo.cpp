#include "permpat/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <boost/math/distributions/students_t.hpp>

#include "permpat/error.hpp"
#include "permpat/profile.hpp"
#include "permpat/random.hpp"
#include "permpat/rational.hpp"

namespace permpat {

namespace {

std::size_t pattern_count(int k) {
  if (k < 1 || k > kMaxPatternSize) {
    throw Error(ErrorKind::InvalidArgument, "k must be in 1.." + std::to_string(kMaxPatternSize));
  }
  return static_cast<std::size_t>(factorial(k));
}

// A direction parallel to the all-ones vector gives a constant projection.
bool is_constant(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

double mean_of(std::span<const double> xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

// Sample mean and its standard error.
std::pair<double, double> mean_and_stderr(std::span<const double> xs) {
  const double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  const auto count = static_cast<double>(xs.size());
  return {m, std::sqrt(ss / (count - 1) / count)};
}

}  // namespace

std::vector<double> sample_projections(int k, std::span<const std::vector<double>> directions, int n,
                                       std::uint64_t samples, std::uint64_t seed,
                                       const SampleOptions& options) {
  const std::size_t patterns = pattern_count(k);
  if (n < k) throw Error(ErrorKind::InvalidArgument, "need n >= k");
  for (const auto& d : directions) {
    if (d.size() != patterns) throw Error(ErrorKind::InvalidArgument, "direction length must be k!");
  }
  const std::uint64_t subsets = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  if (subsets > options.per_sample_budget) {
    throw Error(ErrorKind::TooLarge, "C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                                         std::to_string(subsets) + " exceeds the per-sample budget of " +
                                         std::to_string(options.per_sample_budget));
  }

  const std::size_t dims = directions.size();
  std::vector<double> out(static_cast<std::size_t>(samples) * dims);
  const std::uint64_t stream = split_seed(seed, static_cast<std::uint64_t>(n));
  const double scale = 1.0 / static_cast<double>(subsets);

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<int> line;
    std::vector<std::uint64_t> counts(patterns);
    for (std::uint64_t i = begin; i < end; ++i) {
      Rng rng(split_seed(stream, i));
      shuffle_into(line, n, rng);
      count_patterns(line, k, counts);
      for (std::size_t d = 0; d < dims; ++d) {
        double acc = 0.0;
        for (std::size_t p = 0; p < patterns; ++p) acc += directions[d][p] * static_cast<double>(counts[p]);
        out[i * dims + d] = acc * scale;
      }
    }
  };

  const unsigned threads = static_cast<unsigned>(
      std::clamp<std::uint64_t>(options.threads, 1, std::max<std::uint64_t>(samples, 1)));
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
  return out;
}

MomentEstimate estimate_projection_moment(int k, std::span<const double> v, int n,
                                          std::uint64_t samples, std::uint64_t seed,
                                          const SampleOptions& options) {
  if (samples < 2) throw Error(ErrorKind::InvalidArgument, "need at least 2 samples");
  const std::vector<std::vector<double>> dirs{std::vector<double>(v.begin(), v.end())};
  const auto xs = sample_projections(k, dirs, n, samples, seed, options);
  MomentEstimate est;
  est.n = n;
  est.samples = samples;
  if (is_constant(v)) {
    // <v,P> is the same for every permutation; report it without rounding noise.
    est.mean = v.front();
    est.second_moment = v.front() * v.front();
    return est;
  }
  std::vector<double> squares(xs.size());
  std::transform(xs.begin(), xs.end(), squares.begin(), [](double x) { return x * x; });
  std::tie(est.mean, est.mean_stderr) = mean_and_stderr(xs);
  std::tie(est.second_moment, est.stderr) = mean_and_stderr(squares);
  return est;
}

void McConfig::validate() const {
  const std::size_t patterns = pattern_count(k);
  if (directions.empty()) throw Error(ErrorKind::InvalidArgument, "at least one direction is required");
  for (const auto& d : directions) {
    if (d.size() != patterns) throw Error(ErrorKind::InvalidArgument, "direction length must be k!");
  }
  if (n_grid.empty()) throw Error(ErrorKind::InvalidArgument, "empty n grid");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < k) throw Error(ErrorKind::InvalidArgument, "grid sizes must be >= k");
    if (i > 0 && n_grid[i] <= n_grid[i - 1]) {
      throw Error(ErrorKind::InvalidArgument, "n grid must be strictly increasing");
    }
  }
  if (samples < 2) throw Error(ErrorKind::InvalidArgument, "need at least 2 samples");
  const std::uint64_t worst = binomial(static_cast<std::uint64_t>(n_grid.back()), static_cast<std::uint64_t>(k));
  if (worst > options.per_sample_budget) {
    throw Error(ErrorKind::TooLarge, "C(" + std::to_string(n_grid.back()) + "," + std::to_string(k) +
                                         ") exceeds the per-sample budget of " +
                                         std::to_string(options.per_sample_budget));
  }
}

std::vector<ScalingReport> run_scaling(const McConfig& config) {
  config.validate();
  const std::size_t dims = config.directions.size();
  std::vector<ScalingReport> reports(dims);
  for (auto& r : reports) {
    r.k = config.k;
    r.samples = config.samples;
    r.seed = config.seed;
  }
  for (int n : config.n_grid) {
    const auto table =
        sample_projections(config.k, config.directions, n, config.samples, config.seed, config.options);
    for (std::size_t d = 0; d < dims; ++d) {
      std::vector<double> xs(config.samples);
      std::vector<double> squares(config.samples);
      for (std::uint64_t i = 0; i < config.samples; ++i) {
        xs[i] = table[i * dims + d];
        squares[i] = xs[i] * xs[i];
      }
      ScalingPoint p;
      p.n = n;
      p.mean = mean_and_stderr(xs).first;
      std::tie(p.second_moment, p.stderr) = mean_and_stderr(squares);
      p.usable = p.second_moment > 0.0 && p.stderr < kMaxRelativeStderr * p.second_moment;
      reports[d].points.push_back(p);
    }
  }
  for (auto& r : reports) {
    try {
      r.fit = fit_scaling_exponent(r);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InsufficientData) throw;
    }
  }
  return reports;
}

SlopeFit fit_log_log(std::span<const double> ns, std::span<const double> values) {
  if (ns.size() != values.size()) throw Error(ErrorKind::InvalidArgument, "mismatched fit inputs");
  if (ns.size() < 3) {
    throw Error(ErrorKind::InsufficientData, "slope fit needs at least 3 usable grid points, got " +
                                                 std::to_string(ns.size()));
  }
  const std::size_t m = ns.size();
  std::vector<double> x(m), y(m);
  for (std::size_t i = 0; i < m; ++i) {
    x[i] = std::log(ns[i]);
    y[i] = std::log(values[i]);
  }
  const double mx = mean_of(x);
  const double my = mean_of(y);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  SlopeFit fit;
  fit.points = m;
  fit.slope = sxy / sxx;
  const double intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double e = y[i] - intercept - fit.slope * x[i];
    rss += e * e;
  }
  const auto dof = static_cast<double>(m - 2);
  fit.stderr = std::sqrt(rss / dof / sxx);
  const boost::math::students_t dist(dof);
  const double t = boost::math::quantile(boost::math::complement(dist, 0.025));
  fit.ci_low = fit.slope - t * fit.stderr;
  fit.ci_high = fit.slope + t * fit.stderr;
  return fit;
}

SlopeFit fit_scaling_exponent(const ScalingReport& report) {
  std::vector<double> ns, values;
  for (const auto& p : report.points) {
    if (!p.usable) continue;
    ns.push_back(p.n);
    values.push_back(p.second_moment);
  }
  return fit_log_log(ns, values);
}

CovEstimate cross_cov_estimate(int k, std::span<const double> u, int r, std::span<const double> v,
                               int s, int n, std::uint64_t samples, std::uint64_t seed,
                               const SampleOptions& options) {
  if (samples < 2) throw Error(ErrorKind::InvalidArgument, "need at least 2 samples");
  CovEstimate est;
  est.n = n;
  if (is_constant(u) || is_constant(v)) {
    // Validate sizes and budget even though nothing needs sampling.
    sample_projections(k, std::vector<std::vector<double>>{}, n, 0, seed, options);
    if (u.size() != pattern_count(k) || v.size() != pattern_count(k)) {
      throw Error(ErrorKind::InvalidArgument, "direction length must be k!");
    }
    est.exact = true;
    return est;
  }
  const std::vector<std::vector<double>> dirs{std::vector<double>(u.begin(), u.end()),
                                              std::vector<double>(v.begin(), v.end())};
  const auto table = sample_projections(k, dirs, n, samples, seed, options);
  std::vector<double> xs(samples), ys(samples);
  for (std::uint64_t i = 0; i < samples; ++i) {
    xs[i] = table[2 * i];
    ys[i] = table[2 * i + 1];
  }
  const double mx = mean_of(xs);
  const double my = mean_of(ys);
  std::vector<double> products(samples);
  for (std::uint64_t i = 0; i < samples; ++i) products[i] = (xs[i] - mx) * (ys[i] - my);
  auto [m, se] = mean_and_stderr(products);
  const auto count = static_cast<double>(samples);
  const double scale = std::pow(static_cast<double>(n), 0.5 * (r + s)) * count / (count - 1);
  est.value = m * scale;
  est.stderr = se * scale;
  return est;
}

}  // namespace permpat
