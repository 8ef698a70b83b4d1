#pragma once

#include <span>
#include <string>
#include <vector>

#include "permpat/qfield.hpp"
#include "permpat/rational.hpp"

namespace permpat {

/// Univariate polynomial in n with exact coefficients, lowest degree first.
/// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<T>& coeffs() const noexcept { return coeffs_; }
  T coeff(int d) const {
    return d >= 0 && d < static_cast<int>(coeffs_.size()) ? coeffs_[d] : T(0L);
  }

  T operator()(const Rational& x) const {
    T acc(0L);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0L));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0L));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  template <class S>
  Poly& scale(const S& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0L));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// "1/8n^2-5/72n+5/36".
  std::string to_string() const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0L)) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

using RatPoly = Poly<Rational>;
using QPoly = Poly<QNum>;

/// Interpolating polynomial through (xs[i], ys[i]) (distinct nodes).
/// Throws DegreeViolation if its degree exceeds max_degree.
RatPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys, int max_degree);

/// Lagrange basis polynomials for the given nodes.
std::vector<RatPoly> lagrange_basis(std::span<const Rational> xs);

}  // namespace permpat
