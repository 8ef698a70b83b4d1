#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "permpat/rational.hpp"

namespace permpat {

/// Element of Q(sqrt2, sqrt3, sqrt5, sqrt7), stored as a sum of rational
/// multiples of sqrt(d) for the 16 square-free radicands d | 210.
///
/// A radicand is encoded as a 4-bit mask over the primes {2, 3, 5, 7}
/// (bit 0 = 2, ..., bit 3 = 7). Terms are kept sorted by mask with no zero
/// coefficients, so two values are equal iff their term lists are equal.
class QNum {
 public:
  static constexpr std::array<int, 4> kPrimes = {2, 3, 5, 7};

  struct Term {
    std::uint8_t mask = 0;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  QNum() = default;
  QNum(const Rational& q);  // NOLINT(google-explicit-constructor)
  QNum(long value);         // NOLINT(google-explicit-constructor)

  /// coeff * sqrt(radicand), for any positive integer radicand whose
  /// square-free part divides 210. Throws NotRepresentable otherwise.
  static QNum term(const Rational& coeff, unsigned long radicand);
  /// coeff * sqrt(radicand_of_mask(mask)).
  static QNum radical(std::uint8_t mask, const Rational& coeff);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept;
  /// Coefficient of sqrt(radicand); radicand must be square-free and divide 210.
  Rational coefficient(unsigned long radicand) const;
  Rational rational_part() const { return coefficient(1); }

  /// Exact sign, certified by interval evaluation of the square roots.
  int sign() const;
  double to_double() const;
  /// "1/2+1/3√6"; "0" for zero.
  std::string to_string() const;

  /// Flip the sign of sqrt(prime) wherever it occurs.
  QNum conjugate(int prime) const;
  /// Throws ZeroDivision.
  QNum inverse() const;

  QNum operator-() const;
  QNum& operator+=(const QNum& other);
  QNum& operator-=(const QNum& other);
  QNum& operator*=(const QNum& other);
  QNum& operator/=(const QNum& other);
  QNum& operator*=(const Rational& scalar);

  friend QNum operator+(QNum a, const QNum& b) { return a += b; }
  friend QNum operator-(QNum a, const QNum& b) { return a -= b; }
  friend QNum operator*(const QNum& a, const QNum& b);
  friend QNum operator*(QNum a, const Rational& s) { return a *= s; }
  friend QNum operator*(const Rational& s, QNum a) { return a *= s; }
  friend QNum operator/(QNum a, const QNum& b) { return a /= b; }
  friend bool operator==(const QNum&, const QNum&) = default;

  /// this += a * b without temporaries for the common rational-times-QNum case.
  void add_product(const QNum& a, const QNum& b);

 private:
  void normalize();
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const QNum& q);

/// Product of the primes selected by a radicand mask.
unsigned long radicand_of_mask(std::uint8_t mask);

/// Positive square root of a positive rational. Throws NotRepresentable when
/// the square-free part of numerator*denominator has a prime factor >= 11,
/// InvalidArgument when q <= 0.
QNum sqrt_rational(const Rational& q);

/// Parses the text rendering produced by QNum::to_string (spaces allowed;
/// "sqrt(d)" accepted in place of "√d"). Throws ParseError.
QNum parse_qnum(std::string_view text);

}  // namespace permpat
