#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "permpat/linalg.hpp"
#include "permpat/perm.hpp"
#include "permpat/qfield.hpp"

namespace permpat {

/// Integer partition of k, parts non-increasing.
struct Partition {
  std::vector<int> parts;

  int size() const;  // k
  int first() const { return parts.empty() ? 0 : parts.front(); }
  /// "32", "221", "11111" (parts concatenated; k <= 9).
  std::string label() const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Validates: positive, non-increasing. Throws InvalidArgument.
Partition make_partition(std::vector<int> parts);
/// Parses a label such as "221" or a list "2,2,1".
Partition parse_partition(std::string_view text);

/// All partitions of k in reverse-lexicographic order: (k), (k-1,1), (k-2,2), ...
std::vector<Partition> partitions(int k);

/// Dimension of the irreducible representation: the number of standard
/// Young tableaux of the shape, counted by removing corners recursively.
std::int64_t dim(const Partition& lambda);

/// tau_k = 2134...k and rho_k = 234...k1.
Permutation tau_k(int k);
Permutation rho_k(int k);

struct GeneratorPair {
  Partition lambda;
  QMatrix tau;
  QMatrix rho;
};

/// Source of generator matrices R(tau_k), R(rho_k). The built-in library
/// covers every partition of k <= 5; larger k must be supplied by the caller
/// (see load_generator_file). The trivial and alternating representations
/// are always available.
class GeneratorLibrary {
 public:
  /// Empty library (trivial/alternating only).
  GeneratorLibrary() = default;
  static const GeneratorLibrary& builtin();

  void add(int k, GeneratorPair pair);
  bool contains(int k, const Partition& lambda) const;
  /// Throws MissingGenerators.
  GeneratorPair get(int k, const Partition& lambda) const;
  /// True when every partition of k is covered.
  bool covers(int k) const;

 private:
  std::map<std::pair<int, Partition>, GeneratorPair> pairs_;
};

/// Generator matrices for lambda |- k. Throws MissingGenerators.
GeneratorPair load_generators(int k, const Partition& lambda,
                              const GeneratorLibrary& library = GeneratorLibrary::builtin());

/// All matrices R(sigma), sigma in S_k, of one irreducible representation.
/// Multiplication follows the left-to-right product: R(a) R(b) = R(then(a, b)).
class RepTable {
 public:
  RepTable(int k, Partition lambda, std::vector<QMatrix> matrices);

  int k() const noexcept { return k_; }
  const Partition& lambda() const noexcept { return lambda_; }
  int dim() const noexcept { return dim_; }
  const QMatrix& at(std::int64_t lex) const { return matrices_.at(static_cast<std::size_t>(lex)); }
  const QMatrix& operator()(const Permutation& sigma) const { return at(lex_index(sigma)); }
  const std::vector<QMatrix>& matrices() const noexcept { return matrices_; }

  /// The k!-vector (R_ij(sigma))_sigma in lexicographic order; i, j are 1-based.
  std::vector<QNum> matrix_element(int i, int j) const;

 private:
  int k_;
  Partition lambda_;
  int dim_;
  std::vector<QMatrix> matrices_;
};

/// Breadth-first expansion over the Cayley graph of S_k for {tau_k, rho_k}.
/// Verifies R(sigma) R(g) = R(then(sigma, g)) on every edge (which certifies
/// the homomorphism) and orthogonality of every matrix.
/// Throws HomomorphismViolation.
RepTable expand_rep(int k, const GeneratorPair& generators);

struct ColumnLabel {
  Partition lambda;
  int i = 0;  // 1-based
  int j = 0;  // 1-based
  int block = 0;  // r = k - lambda_1
};

/// U_k: columns sqrt(d/k!) R^lambda_ij, partitions in canonical order and
/// (i, j) row-major inside each partition. Rows are S_k in lexicographic order.
class BasisMatrix {
 public:
  BasisMatrix(int k, QMatrix matrix, std::vector<ColumnLabel> labels, std::vector<RepTable> reps);

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const QMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<ColumnLabel>& labels() const noexcept { return labels_; }
  const std::vector<RepTable>& reps() const noexcept { return reps_; }
  const RepTable& rep(const Partition& lambda) const;
  /// Column indices belonging to V_r.
  const std::vector<std::size_t>& block(int r) const { return blocks_.at(static_cast<std::size_t>(r)); }
  std::vector<QNum> column(std::size_t c) const;
  /// Index of the column labelled (lambda, i, j); throws InvalidArgument.
  std::size_t find_column(const Partition& lambda, int i, int j) const;

 private:
  int k_;
  QMatrix matrix_;
  std::vector<ColumnLabel> labels_;
  std::vector<RepTable> reps_;
  std::vector<std::vector<std::size_t>> blocks_;
};

BasisMatrix build_U(int k, const GeneratorLibrary& library = GeneratorLibrary::builtin());

/// Orthogonal projection onto V_r.
std::vector<QNum> project(const BasisMatrix& basis, std::span<const QNum> v, int r);

/// Inner product over Q_k.
QNum dot(std::span<const QNum> a, std::span<const QNum> b);

/// The subgroup S_l of S_k fixing 1..k-l pointwise.
std::vector<Permutation> fixing_subgroup(int k, int l);

/// Sum of R(sigma) over the two-sided coset alpha S_l beta
/// (sigma = alpha o tau o beta, ordinary composition).
QMatrix coset_sum(const RepTable& rep, int l, const Permutation& alpha, const Permutation& beta);

}  // namespace permpat
