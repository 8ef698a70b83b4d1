#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "permpat/linalg.hpp"
#include "permpat/polynomial.hpp"
#include "permpat/qfield.hpp"
#include "permpat/rational.hpp"
#include "permpat/rep.hpp"

namespace permpat {

inline constexpr int kDefaultMaxHostSize = 10;
inline constexpr int kLongRunMaxHostSize = 12;

struct MomentOptions {
  bool long_run = false;  // admits n = 11, 12
  unsigned threads = 1;
  std::optional<std::filesystem::path> cache_dir;
  /// Additional interpolation nodes beyond k..2k; they make the degree bound checkable.
  std::vector<int> extra_nodes;
};

/// Sum over all pi in S_n of N(pi) N(pi)^T, N the vector of pattern counts.
/// Row-major k! x k!, exact in 64-bit integers for n <= 12.
struct OuterSum {
  int k = 0;
  int n = 0;
  std::vector<std::int64_t> entries;
  std::int64_t at(std::size_t i, std::size_t j) const;
};

/// Throws TooLarge outside the host-size cap.
OuterSum outer_sum(int k, int n, const MomentOptions& options = {});

/// E[P P^T] over uniform pi in S_n, exactly.
RMatrix exact_second_moment(int k, int n, const MomentOptions& options = {});

/// Entrywise polynomials C(n,k) E[P P^T], degree <= k.
class MomentMatrix {
 public:
  MomentMatrix(int k, std::vector<RatPoly> entries);

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return size_; }
  const RatPoly& at(std::size_t i, std::size_t j) const { return entries_.at(i * size_ + j); }
  const std::vector<RatPoly>& entries() const noexcept { return entries_; }
  /// C(n,k) E[P P^T] at a given host size.
  RMatrix evaluate(const Rational& n) const;
  /// RMatrix of the degree-d coefficients.
  RMatrix coefficient_matrix(int d) const;

 private:
  int k_;
  std::size_t size_;
  std::vector<RatPoly> entries_;
};

/// Lagrange interpolation through n = k..2k (plus any extra nodes).
/// Throws DegreeViolation.
MomentMatrix interpolate_moments(int k, const MomentOptions& options = {});

/// u^T (C(n,k) E[P P^T]) v for basis columns u in V_r and v in V_s. The
/// normalization by n^{(r+s)/2} is kept as an exponent, not multiplied in.
struct ConjugatedEntry {
  QPoly poly;
  int r = 0;
  int s = 0;
  /// poly * n^{(r+s)/2}; requires r + s even.
  QPoly normalized() const;
};

class ConjugatedMoments {
 public:
  ConjugatedMoments(int k, std::vector<ColumnLabel> labels, std::vector<ConjugatedEntry> entries);

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<ColumnLabel>& labels() const noexcept { return labels_; }
  const ConjugatedEntry& at(std::size_t i, std::size_t j) const {
    return entries_.at(i * labels_.size() + j);
  }

 private:
  int k_;
  std::vector<ColumnLabel> labels_;
  std::vector<ConjugatedEntry> entries_;
};

ConjugatedMoments conjugate_and_normalize(const MomentMatrix& m, const BasisMatrix& u);

/// lim n^{(r+s)/2} q(n) / C(n,k). Throws Diverges.
QNum normalized_limit(const QPoly& q, int r, int s, int k);

struct DiagonalLimit {
  ColumnLabel label;
  QNum limit;
  bool positive = false;
  bool rational = false;
};

struct OffDiagonalViolation {
  std::size_t row = 0;
  std::size_t col = 0;
  int r = 0;
  int s = 0;
  std::string detail;  // nonzero limit or divergence message
};

struct LimitReport {
  int k = 0;
  std::vector<DiagonalLimit> diagonal;
  std::size_t offdiagonal_checked = 0;
  std::vector<OffDiagonalViolation> violations;
  bool pass = false;
  bool all_rational() const;
};

LimitReport limit_report(const ConjugatedMoments& conjugated);
LimitReport verify_diagonalization(int k, const MomentOptions& options = {},
                                   const GeneratorLibrary& library = GeneratorLibrary::builtin());

/// C_k = lim n cov[P_kn], exact. Throws Diverges.
RMatrix cov_limit(const MomentMatrix& m);
RMatrix cov_limit(int k, const MomentOptions& options = {});

/// C(n,k) as a polynomial in n.
RatPoly binomial_poly(int k);

}  // namespace permpat
