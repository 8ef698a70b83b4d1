#include "permpat/moments.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <thread>

#include <nlohmann/json.hpp>

#include "permpat/error.hpp"
#include "permpat/profile.hpp"

namespace permpat {

namespace {

void check_sizes(int k, int n, const MomentOptions& options) {
  if (k < 1 || k > kMaxPatternSize) {
    throw Error(ErrorKind::InvalidArgument, "k must be in 1.." + std::to_string(kMaxPatternSize));
  }
  if (n < k) throw Error(ErrorKind::InvalidArgument, "need n >= k");
  const int cap = options.long_run ? kLongRunMaxHostSize : kDefaultMaxHostSize;
  if (n > cap) {
    throw Error(ErrorKind::TooLarge, "enumerating S_" + std::to_string(n) + " exceeds the cap n <= " +
                                         std::to_string(cap) +
                                         (options.long_run ? "" : " (long runs allow up to 12)"));
  }
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int k, int n) {
  return dir / ("outer_k" + std::to_string(k) + "_n" + std::to_string(n) + ".json");
}

std::optional<OuterSum> read_cache(const std::filesystem::path& path, int k, int n, std::size_t size) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.at("k").get<int>() != k || doc.at("n").get<int>() != n) return std::nullopt;
    auto entries = doc.at("sum").get<std::vector<std::int64_t>>();
    if (entries.size() != size * size) return std::nullopt;
    return OuterSum{k, n, std::move(entries)};
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void write_cache(const std::filesystem::path& path, const OuterSum& sum) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << nlohmann::json{{"k", sum.k}, {"n", sum.n}, {"sum", sum.entries}}.dump();
  }
  std::filesystem::rename(tmp, path, ec);
}

// Sums N N^T (upper triangle) over permutations of 1..n whose first value is `first`.
void accumulate_prefix(int k, int n, int first, std::vector<std::int64_t>& upper) {
  const std::size_t size = static_cast<std::size_t>(factorial(k));
  std::vector<int> line(static_cast<std::size_t>(n));
  line[0] = first;
  for (int v = 1, pos = 1; v <= n; ++v) {
    if (v != first) line[static_cast<std::size_t>(pos++)] = v;
  }
  std::vector<std::uint64_t> counts(size);
  std::vector<std::size_t> nonzero;
  nonzero.reserve(size);
  do {
    count_patterns(line, k, counts);
    nonzero.clear();
    for (std::size_t i = 0; i < size; ++i) {
      if (counts[i] != 0) nonzero.push_back(i);
    }
    for (std::size_t a = 0; a < nonzero.size(); ++a) {
      const std::size_t i = nonzero[a];
      const auto ci = static_cast<std::int64_t>(counts[i]);
      std::int64_t* row = upper.data() + i * size;
      for (std::size_t b = a; b < nonzero.size(); ++b) {
        const std::size_t j = nonzero[b];
        row[j] += ci * static_cast<std::int64_t>(counts[j]);
      }
    }
  } while (std::next_permutation(line.begin() + 1, line.end()));
}

}  // namespace

std::int64_t OuterSum::at(std::size_t i, std::size_t j) const {
  const auto size = static_cast<std::size_t>(factorial(k));
  return entries.at(i * size + j);
}

OuterSum outer_sum(int k, int n, const MomentOptions& options) {
  check_sizes(k, n, options);
  const std::size_t size = static_cast<std::size_t>(factorial(k));
  if (options.cache_dir) {
    if (auto cached = read_cache(cache_file(*options.cache_dir, k, n), k, n, size)) return *cached;
  }

  const unsigned threads = std::clamp<unsigned>(options.threads, 1U, static_cast<unsigned>(n));
  std::vector<std::vector<std::int64_t>> partial(threads, std::vector<std::int64_t>(size * size, 0));
  auto work = [&](unsigned t) {
    for (int first = 1 + static_cast<int>(t); first <= n; first += static_cast<int>(threads)) {
      accumulate_prefix(k, n, first, partial[t]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  OuterSum out{k, n, std::vector<std::int64_t>(size * size, 0)};
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < p.size(); ++i) out.entries[i] += p[i];
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < i; ++j) out.entries[i * size + j] = out.entries[j * size + i];
  }
  if (options.cache_dir) write_cache(cache_file(*options.cache_dir, k, n), out);
  return out;
}

RMatrix exact_second_moment(int k, int n, const MomentOptions& options) {
  const OuterSum sum = outer_sum(k, n, options);
  const std::size_t size = static_cast<std::size_t>(factorial(k));
  const BigInt c = big_binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  const BigInt denom = big_factorial(n) * c * c;
  RMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      Rational q(BigInt(static_cast<long>(sum.at(i, j))), denom);
      q.canonicalize();
      m(i, j) = q;
    }
  }
  return m;
}

MomentMatrix::MomentMatrix(int k, std::vector<RatPoly> entries)
    : k_(k), size_(static_cast<std::size_t>(factorial(k))), entries_(std::move(entries)) {
  if (entries_.size() != size_ * size_) {
    throw Error(ErrorKind::InvalidArgument, "moment matrix needs k!^2 entries");
  }
}

RMatrix MomentMatrix::evaluate(const Rational& n) const {
  RMatrix m(size_, size_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) m(i, j) = at(i, j)(n);
  }
  return m;
}

RMatrix MomentMatrix::coefficient_matrix(int d) const {
  RMatrix m(size_, size_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) m(i, j) = at(i, j).coeff(d);
  }
  return m;
}

MomentMatrix interpolate_moments(int k, const MomentOptions& options) {
  std::vector<int> nodes;
  for (int n = k; n <= 2 * k; ++n) nodes.push_back(n);
  for (int n : options.extra_nodes) {
    if (std::find(nodes.begin(), nodes.end(), n) == nodes.end()) nodes.push_back(n);
  }
  const std::size_t size = static_cast<std::size_t>(factorial(k));

  std::vector<Rational> xs;
  std::vector<std::vector<Rational>> values;  // per node, row-major C(n,k) E[P P^T]
  for (int n : nodes) {
    xs.emplace_back(n);
    const OuterSum sum = outer_sum(k, n, options);
    const BigInt denom =
        big_factorial(n) * big_binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    std::vector<Rational> v(size * size);
    for (std::size_t e = 0; e < v.size(); ++e) {
      v[e] = Rational(BigInt(static_cast<long>(sum.entries[e])), denom);
      v[e].canonicalize();
    }
    values.push_back(std::move(v));
  }

  const auto basis = lagrange_basis(xs);
  std::vector<RatPoly> entries;
  entries.reserve(size * size);
  for (std::size_t e = 0; e < size * size; ++e) {
    RatPoly p;
    for (std::size_t t = 0; t < nodes.size(); ++t) {
      RatPoly term = basis[t];
      term.scale(values[t][e]);
      p += term;
    }
    if (p.degree() > k) {
      throw Error(ErrorKind::DegreeViolation,
                  "moment entry (" + std::to_string(e / size) + "," + std::to_string(e % size) +
                      ") interpolates to degree " + std::to_string(p.degree()) + " > k=" +
                      std::to_string(k));
    }
    entries.push_back(std::move(p));
  }
  return MomentMatrix(k, std::move(entries));
}

QPoly ConjugatedEntry::normalized() const {
  if ((r + s) % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "normalization by an odd power of sqrt(n)");
  }
  std::vector<QNum> coeffs(static_cast<std::size_t>((r + s) / 2), QNum());
  coeffs.insert(coeffs.end(), poly.coeffs().begin(), poly.coeffs().end());
  return QPoly(std::move(coeffs));
}

ConjugatedMoments::ConjugatedMoments(int k, std::vector<ColumnLabel> labels,
                                     std::vector<ConjugatedEntry> entries)
    : k_(k), labels_(std::move(labels)), entries_(std::move(entries)) {}

ConjugatedMoments conjugate_and_normalize(const MomentMatrix& m, const BasisMatrix& u) {
  if (m.k() != u.k()) throw Error(ErrorKind::InvalidArgument, "moment matrix and basis differ in k");
  const std::size_t size = m.size();
  const QMatrix ut = u.matrix().transpose();
  int degree = -1;
  for (const auto& p : m.entries()) degree = std::max(degree, p.degree());

  std::vector<std::vector<QNum>> coeffs(size * size);
  for (int d = 0; d <= degree; ++d) {
    const QMatrix c = ut * (to_qmatrix(m.coefficient_matrix(d)) * u.matrix());
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) coeffs[i * size + j].push_back(c(i, j));
    }
  }

  const auto& labels = u.labels();
  std::vector<ConjugatedEntry> entries;
  entries.reserve(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      entries.push_back({QPoly(std::move(coeffs[i * size + j])), labels[i].block, labels[j].block});
    }
  }
  return ConjugatedMoments(m.k(), labels, std::move(entries));
}

QNum normalized_limit(const QPoly& q, int r, int s, int k) {
  if (q.is_zero()) return QNum();
  // Compare 2 deg q + (r + s) with 2k to stay in integers.
  const int lhs = 2 * q.degree() + r + s;
  if (lhs > 2 * k) {
    throw Error(ErrorKind::Diverges, "degree " + std::to_string(q.degree()) + " in block (" +
                                         std::to_string(r) + "," + std::to_string(s) +
                                         ") exceeds k - (r+s)/2");
  }
  if (lhs < 2 * k) return QNum();
  QNum out = q.coeff(q.degree());
  out *= Rational(BigInt(static_cast<unsigned long>(factorial(k))));
  return out;
}

bool LimitReport::all_rational() const {
  return std::all_of(diagonal.begin(), diagonal.end(), [](const DiagonalLimit& d) { return d.rational; });
}

LimitReport limit_report(const ConjugatedMoments& conjugated) {
  LimitReport report;
  report.k = conjugated.k();
  const std::size_t size = conjugated.size();
  bool ok = true;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const auto& e = conjugated.at(i, j);
      if (i == j) {
        DiagonalLimit d{conjugated.labels()[i], QNum(), false, false};
        try {
          d.limit = normalized_limit(e.poly, e.r, e.s, report.k);
          d.positive = d.limit.sign() > 0;
          d.rational = d.limit.is_rational();
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::Diverges) throw;
          report.violations.push_back({i, j, e.r, e.s, err.what()});
        }
        ok = ok && d.positive;
        report.diagonal.push_back(std::move(d));
        continue;
      }
      ++report.offdiagonal_checked;
      try {
        const QNum limit = normalized_limit(e.poly, e.r, e.s, report.k);
        if (!limit.is_zero()) report.violations.push_back({i, j, e.r, e.s, "limit " + limit.to_string()});
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::Diverges) throw;
        report.violations.push_back({i, j, e.r, e.s, err.what()});
      }
    }
  }
  report.pass = ok && report.violations.empty();
  return report;
}

LimitReport verify_diagonalization(int k, const MomentOptions& options, const GeneratorLibrary& library) {
  if (k == 5 && !options.long_run) {
    throw Error(ErrorKind::TooLarge, "k=5 enumerates S_5..S_10 and takes hours; enable the long run");
  }
  const BasisMatrix u = build_U(k, library);
  const MomentMatrix m = interpolate_moments(k, options);
  return limit_report(conjugate_and_normalize(m, u));
}

RatPoly binomial_poly(int k) {
  RatPoly p(std::vector<Rational>{Rational(1)});
  for (int i = 0; i < k; ++i) p = p * RatPoly(std::vector<Rational>{Rational(-i), Rational(1)});
  p.scale(Rational(1, static_cast<unsigned long>(factorial(k))));
  return p;
}

RMatrix cov_limit(const MomentMatrix& m) {
  const int k = m.k();
  const std::size_t size = m.size();
  const Rational kfact(BigInt(static_cast<unsigned long>(factorial(k))));
  RatPoly mean_part = binomial_poly(k);
  mean_part.scale(1 / (kfact * kfact));
  RMatrix c(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const RatPoly centered = m.at(i, j) - mean_part;
      if (centered.degree() >= k) {
        throw Error(ErrorKind::Diverges, "n cov[P] does not converge at entry (" + std::to_string(i) +
                                             "," + std::to_string(j) + ")");
      }
      c(i, j) = kfact * centered.coeff(k - 1);
    }
  }
  return c;
}

RMatrix cov_limit(int k, const MomentOptions& options) { return cov_limit(interpolate_moments(k, options)); }

}  // namespace permpat
