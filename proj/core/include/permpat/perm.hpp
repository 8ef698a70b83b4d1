#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permpat {

/// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  /// Validates that `values` is a bijection on {1..n}. Throws NotABijection.
  static Permutation from_one_line(std::span<const int> values);
  static Permutation from_one_line(std::initializer_list<int> values);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  /// Value at 0-based position `i` (a number in 1..n).
  int operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const int> one_line() const noexcept { return images_; }

  Permutation inverse() const;
  /// Positions reversed: i -> pi(n+1-i).
  Permutation reversed() const;
  /// Values complemented: i -> n+1-pi(i).
  Permutation complemented() const;
  /// +1 or -1.
  int sign() const;

  /// Compact form "41253" when n < 10, otherwise space separated.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Ordinary composition: compose(a, b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

/// Left-to-right product: `a` is applied first, then `b`,
/// i.e. then(a, b)(i) = b(a(i)). Representation matrices multiply in this
/// order: R(a) R(b) = R(then(a, b)).
Permutation then(const Permutation& a, const Permutation& b);

/// Whitespace- or comma-separated one-line notation, 1-based; "2143" also
/// works for sizes below 10.
Permutation parse_permutation(std::string_view text);

/// A pattern in S_k named by its lexicographic rank.
struct PatternId {
  int k = 0;
  std::int64_t index = 0;
  friend bool operator==(const PatternId&, const PatternId&) = default;
};

std::int64_t lex_index(const Permutation& sigma);
Permutation lex_perm(int k, std::int64_t index);

/// All of S_k in lexicographic order.
std::vector<Permutation> all_permutations(int k);

/// Pattern induced by pi at the 1-based, strictly increasing `positions`.
/// Throws BadPositions.
PatternId pattern_of(const Permutation& pi, std::span<const int> positions);

struct PlanePoint {
  double y = 0.0;
  double z = 0.0;
};

/// The permutation induced by a generic point set: the unique pi with point
/// set {(y_(i), z_(pi(i)))}. Independent of the input order.
/// Throws DegeneratePoints on tied y or tied z (or non-finite coordinates).
Permutation perm_of_points(std::span<const PlanePoint> points);

/// CSV rows "y,z". A non-numeric first row is treated as a header; blank,
/// NaN or malformed rows are rejected with ParseError.
std::vector<PlanePoint> read_points_csv(std::istream& in, char delimiter = ',');

}  // namespace permpat
