#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "permpat/perm.hpp"
#include "permpat/rational.hpp"
#include "permpat/rep.hpp"

namespace permpat {

/// Element of the group algebra Q[S_k]. Products use ordinary composition,
/// (a . b)(i) = a(b(i)).
class GroupAlgebraElt {
 public:
  explicit GroupAlgebraElt(int k) : k_(k) {}
  static GroupAlgebraElt basis(const Permutation& sigma, const Rational& coeff = 1);

  int k() const noexcept { return k_; }
  /// Lexicographic index -> coefficient; zero coefficients are never stored.
  const std::map<std::int64_t, Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coefficient(const Permutation& sigma) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  void add(std::int64_t lex, const Rational& c);
  GroupAlgebraElt& operator+=(const GroupAlgebraElt& other);
  GroupAlgebraElt& operator*=(const Rational& scalar);
  friend GroupAlgebraElt operator*(const GroupAlgebraElt& a, const GroupAlgebraElt& b);
  friend GroupAlgebraElt operator+(GroupAlgebraElt a, const GroupAlgebraElt& b) { return a += b; }
  friend bool operator==(const GroupAlgebraElt&, const GroupAlgebraElt&) = default;

  /// Dense vector over S_k in lexicographic order.
  std::vector<Rational> dense() const;
  /// "123-132+213-231".
  std::string to_string() const;

 private:
  int k_;
  std::map<std::int64_t, Rational> coeffs_;
};

/// Young tableau: rows of distinct entries 1..k, row lengths non-increasing.
struct Tableau {
  std::vector<std::vector<int>> rows;
  Partition shape() const;
  std::vector<std::vector<int>> columns() const;
};

/// Throws InvalidTableau.
Tableau make_tableau(std::vector<std::vector<int>> rows);

/// P_T: permutations mapping every row into itself.
std::vector<Permutation> row_group(const Tableau& t);
/// Q_T: permutations mapping every column into itself.
std::vector<Permutation> column_group(const Tableau& t);

/// c_T = a_T . b_T with a_T = sum over P_T, b_T = signed sum over Q_T.
GroupAlgebraElt young_symmetrizer(const Tableau& t);

/// Character of the left regular action of S_k on the left ideal A.x,
/// indexed by S_k in lexicographic order. For x = c_T this is the
/// irreducible character of shape(T).
std::vector<Rational> left_ideal_character(const GroupAlgebraElt& x);

/// Dimension of the left ideal A.x.
std::size_t left_ideal_dimension(const GroupAlgebraElt& x);

}  // namespace permpat
