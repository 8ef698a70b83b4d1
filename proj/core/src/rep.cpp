#include "permpat/rep.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>

#include "permpat/error.hpp"
#include "permpat/rational.hpp"

namespace permpat {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::label() const {
  std::string s;
  for (int p : parts) s += std::to_string(p);
  return s;
}

Partition make_partition(std::vector<int> parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "empty partition");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw Error(ErrorKind::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw Error(ErrorKind::InvalidArgument, "partition parts must be non-increasing");
    }
  }
  return Partition{std::move(parts)};
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  const bool listed = text.find(',') != std::string_view::npos ||
                      text.find(' ') != std::string_view::npos;
  if (listed) {
    int cur = -1;
    for (char c : text) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
      } else if (c == ',' || c == ' ') {
        if (cur >= 0) parts.push_back(cur);
        cur = -1;
      } else {
        throw Error(ErrorKind::ParseError, "bad partition '" + std::string(text) + "'");
      }
    }
    if (cur >= 0) parts.push_back(cur);
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorKind::ParseError, "bad partition '" + std::string(text) + "'");
      }
      parts.push_back(c - '0');
    }
  }
  return make_partition(std::move(parts));
}

std::vector<Partition> partitions(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "partitions need k >= 1");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(Partition{current});
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(k, k);
  return out;
}

std::int64_t dim(const Partition& lambda) {
  std::map<std::vector<int>, std::int64_t> memo;
  std::function<std::int64_t(const std::vector<int>&)> count = [&](const std::vector<int>& shape) {
    if (shape.empty()) return std::int64_t{1};
    if (auto it = memo.find(shape); it != memo.end()) return it->second;
    std::int64_t total = 0;
    for (std::size_t row = 0; row < shape.size(); ++row) {
      const bool corner = row + 1 == shape.size() || shape[row + 1] < shape[row];
      if (!corner) continue;
      std::vector<int> smaller = shape;
      if (--smaller[row] == 0) smaller.pop_back();
      total += count(smaller);
    }
    memo[shape] = total;
    return total;
  };
  return count(lambda.parts);
}

Permutation tau_k(int k) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "tau_k needs k >= 2");
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[0], v[1]);
  return Permutation::from_one_line(v);
}

Permutation rho_k(int k) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "rho_k needs k >= 2");
  std::vector<int> v(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) v[i] = (i + 1) % k + 1;
  return Permutation::from_one_line(v);
}

namespace {

bool is_trivial(const Partition& lambda) { return lambda.parts.size() == 1; }
bool is_alternating(const Partition& lambda) { return lambda.first() == 1; }

QMatrix scalar_matrix(long v) {
  QMatrix m(1, 1);
  m(0, 0) = QNum(v);
  return m;
}

}  // namespace

void GeneratorLibrary::add(int k, GeneratorPair pair) {
  if (pair.lambda.size() != k) {
    throw Error(ErrorKind::InvalidArgument, "partition " + pair.lambda.label() + " is not of k=" +
                                                std::to_string(k));
  }
  const auto d = static_cast<std::size_t>(dim(pair.lambda));
  auto square = [d](const QMatrix& m) { return m.rows() == d && m.cols() == d; };
  if (!square(pair.tau) || !square(pair.rho)) {
    throw Error(ErrorKind::InvalidArgument,
                "generators for " + pair.lambda.label() + " must be " + std::to_string(d) + "x" +
                    std::to_string(d));
  }
  auto key = std::make_pair(k, pair.lambda);
  pairs_.insert_or_assign(std::move(key), std::move(pair));
}

bool GeneratorLibrary::contains(int k, const Partition& lambda) const {
  return is_trivial(lambda) || is_alternating(lambda) || pairs_.count({k, lambda}) > 0;
}

GeneratorPair GeneratorLibrary::get(int k, const Partition& lambda) const {
  if (auto it = pairs_.find({k, lambda}); it != pairs_.end()) return it->second;
  if (is_trivial(lambda)) return {lambda, scalar_matrix(1), scalar_matrix(1)};
  if (is_alternating(lambda)) return {lambda, scalar_matrix(-1), scalar_matrix(k % 2 == 1 ? 1 : -1)};
  throw Error(ErrorKind::MissingGenerators,
              "no generator matrices for lambda=" + lambda.label() + " (k=" + std::to_string(k) +
                  "); supply a generator file");
}

bool GeneratorLibrary::covers(int k) const {
  const auto ps = partitions(k);
  return std::all_of(ps.begin(), ps.end(), [&](const Partition& p) { return contains(k, p); });
}

GeneratorPair load_generators(int k, const Partition& lambda, const GeneratorLibrary& library) {
  if (lambda.size() != k) {
    throw Error(ErrorKind::InvalidArgument, "partition " + lambda.label() + " is not of k=" +
                                                std::to_string(k));
  }
  return library.get(k, lambda);
}

RepTable::RepTable(int k, Partition lambda, std::vector<QMatrix> matrices)
    : k_(k), lambda_(std::move(lambda)), dim_(static_cast<int>(permpat::dim(lambda_))),
      matrices_(std::move(matrices)) {}

std::vector<QNum> RepTable::matrix_element(int i, int j) const {
  if (i < 1 || j < 1 || i > dim_ || j > dim_) {
    throw Error(ErrorKind::InvalidArgument, "matrix element index out of range for " +
                                                lambda_.label());
  }
  std::vector<QNum> out;
  out.reserve(matrices_.size());
  for (const auto& m : matrices_) out.push_back(m(i - 1, j - 1));
  return out;
}

namespace {

bool is_orthogonal(const QMatrix& m) {
  return m * m.transpose() == QMatrix::identity(m.rows());
}

// Left-to-right product on lexicographic indices.
std::int64_t then_index(const std::vector<Permutation>& all, std::int64_t a, const Permutation& g) {
  return lex_index(then(all[static_cast<std::size_t>(a)], g));
}

}  // namespace

RepTable expand_rep(int k, const GeneratorPair& generators) {
  const auto d = static_cast<std::size_t>(dim(generators.lambda));
  const auto order = static_cast<std::size_t>(factorial(k));
  const auto all = all_permutations(k);
  std::vector<QMatrix> mats(order);
  if (k == 1) {
    mats[0] = QMatrix::identity(1);
    return RepTable(k, generators.lambda, std::move(mats));
  }
  if (generators.tau.rows() != d || generators.rho.rows() != d) {
    throw Error(ErrorKind::HomomorphismViolation, "generator size does not match dim(" +
                                                      generators.lambda.label() + ")");
  }
  const Permutation tau = tau_k(k);
  const Permutation rho = rho_k(k);
  const std::array<std::pair<const Permutation*, const QMatrix*>, 2> gens = {
      std::make_pair(&tau, &generators.tau), std::make_pair(&rho, &generators.rho)};

  std::vector<bool> seen(order, false);
  std::deque<std::int64_t> queue;
  mats[0] = QMatrix::identity(d);
  seen[0] = true;
  queue.push_back(0);
  while (!queue.empty()) {
    const std::int64_t s = queue.front();
    queue.pop_front();
    for (const auto& [perm, mat] : gens) {
      const std::int64_t next = then_index(all, s, *perm);
      if (seen[static_cast<std::size_t>(next)]) continue;
      seen[static_cast<std::size_t>(next)] = true;
      mats[static_cast<std::size_t>(next)] = mats[static_cast<std::size_t>(s)] * *mat;
      queue.push_back(next);
    }
  }
  // Every edge of the Cayley graph, tree or not, must be respected.
  for (std::size_t s = 0; s < order; ++s) {
    for (const auto& [perm, mat] : gens) {
      const auto next = static_cast<std::size_t>(then_index(all, static_cast<std::int64_t>(s), *perm));
      if (mats[s] * *mat != mats[next]) {
        throw Error(ErrorKind::HomomorphismViolation,
                    "generators for " + generators.lambda.label() + " violate R(s)R(g) = R(sg) at s=" +
                        all[s].to_string());
      }
    }
  }
  for (std::size_t s = 0; s < order; ++s) {
    if (!is_orthogonal(mats[s])) {
      throw Error(ErrorKind::HomomorphismViolation, "R(" + all[s].to_string() + ") for " +
                                                        generators.lambda.label() +
                                                        " is not orthogonal");
    }
  }
  return RepTable(k, generators.lambda, std::move(mats));
}

BasisMatrix::BasisMatrix(int k, QMatrix matrix, std::vector<ColumnLabel> labels,
                         std::vector<RepTable> reps)
    : k_(k), matrix_(std::move(matrix)), labels_(std::move(labels)), reps_(std::move(reps)),
      blocks_(static_cast<std::size_t>(k)) {
  for (std::size_t c = 0; c < labels_.size(); ++c) {
    blocks_.at(static_cast<std::size_t>(labels_[c].block)).push_back(c);
  }
}

const RepTable& BasisMatrix::rep(const Partition& lambda) const {
  for (const auto& r : reps_) {
    if (r.lambda() == lambda) return r;
  }
  throw Error(ErrorKind::InvalidArgument, "no representation " + lambda.label());
}

std::vector<QNum> BasisMatrix::column(std::size_t c) const {
  std::vector<QNum> out(matrix_.rows());
  for (std::size_t r = 0; r < matrix_.rows(); ++r) out[r] = matrix_(r, c);
  return out;
}

std::size_t BasisMatrix::find_column(const Partition& lambda, int i, int j) const {
  for (std::size_t c = 0; c < labels_.size(); ++c) {
    if (labels_[c].lambda == lambda && labels_[c].i == i && labels_[c].j == j) return c;
  }
  throw Error(ErrorKind::InvalidArgument, "no column (" + lambda.label() + "," + std::to_string(i) +
                                              "," + std::to_string(j) + ")");
}

BasisMatrix build_U(int k, const GeneratorLibrary& library) {
  const auto order = static_cast<std::size_t>(factorial(k));
  const Rational k_fact(static_cast<unsigned long>(order));
  QMatrix u(order, order);
  std::vector<ColumnLabel> labels;
  std::vector<RepTable> reps;
  std::size_t col = 0;
  for (const auto& lambda : partitions(k)) {
    RepTable rep = expand_rep(k, load_generators(k, lambda, library));
    const int d = rep.dim();
    const QNum norm = sqrt_rational(Rational(d) / k_fact);
    for (int i = 1; i <= d; ++i) {
      for (int j = 1; j <= d; ++j) {
        for (std::size_t s = 0; s < order; ++s) u(s, col) = norm * rep.at(static_cast<std::int64_t>(s))(i - 1, j - 1);
        labels.push_back({lambda, i, j, k - lambda.first()});
        ++col;
      }
    }
    reps.push_back(std::move(rep));
  }
  return BasisMatrix(k, std::move(u), std::move(labels), std::move(reps));
}

QNum dot(std::span<const QNum> a, std::span<const QNum> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "dot: length mismatch");
  QNum acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc.add_product(a[i], b[i]);
  return acc;
}

std::vector<QNum> project(const BasisMatrix& basis, std::span<const QNum> v, int r) {
  if (r < 0 || r >= basis.k()) throw Error(ErrorKind::InvalidArgument, "block index out of range");
  if (v.size() != basis.size()) throw Error(ErrorKind::InvalidArgument, "vector length must be k!");
  std::vector<QNum> out(v.size());
  for (std::size_t c : basis.block(r)) {
    const auto col = basis.column(c);
    const QNum coeff = dot(col, v);
    if (coeff.is_zero()) continue;
    for (std::size_t s = 0; s < v.size(); ++s) out[s].add_product(coeff, col[s]);
  }
  return out;
}

std::vector<Permutation> fixing_subgroup(int k, int l) {
  if (l < 1 || l > k) throw Error(ErrorKind::InvalidArgument, "need 1 <= l <= k");
  std::vector<Permutation> out;
  for (const auto& p : all_permutations(l)) {
    std::vector<int> v(static_cast<std::size_t>(k));
    for (int i = 0; i < k - l; ++i) v[i] = i + 1;
    for (int i = 0; i < l; ++i) v[k - l + i] = k - l + p[i];
    out.push_back(Permutation::from_one_line(v));
  }
  return out;
}

QMatrix coset_sum(const RepTable& rep, int l, const Permutation& alpha, const Permutation& beta) {
  const int k = rep.k();
  if (alpha.size() != k || beta.size() != k) {
    throw Error(ErrorKind::InvalidArgument, "coset representatives must lie in S_k");
  }
  const auto d = static_cast<std::size_t>(rep.dim());
  QMatrix sum(d, d);
  for (const auto& t : fixing_subgroup(k, l)) sum += rep(compose(compose(alpha, t), beta));
  return sum;
}

}  // namespace permpat
