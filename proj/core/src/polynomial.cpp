#include "permpat/polynomial.hpp"

#include "permpat/error.hpp"

namespace permpat {

namespace {

std::string coeff_text(const Rational& c) { return c.get_str(); }

std::string coeff_text(const QNum& c) {
  const std::string s = c.to_string();
  if (c.terms().size() <= 1) return s;
  return "(" + s + ")";
}

bool is_one(const Rational& c) { return c == 1; }
bool is_one(const QNum& c) { return c == QNum(1L); }
bool is_minus_one(const Rational& c) { return c == -1; }
bool is_minus_one(const QNum& c) { return c == QNum(-1L); }

}  // namespace

template <class T>
std::string Poly<T>::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const T& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == T(0L)) continue;
    std::string piece;
    const std::string power = d == 0 ? "" : (d == 1 ? "n" : "n^" + std::to_string(d));
    if (d > 0 && is_one(c)) {
      piece = power;
    } else if (d > 0 && is_minus_one(c)) {
      piece = "-" + power;
    } else {
      piece = coeff_text(c) + power;
    }
    if (!out.empty() && piece.front() != '-') out.push_back('+');
    out += piece;
  }
  return out;
}

template class Poly<Rational>;
template class Poly<QNum>;

std::vector<RatPoly> lagrange_basis(std::span<const Rational> xs) {
  std::vector<RatPoly> basis;
  basis.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatPoly l(std::vector<Rational>{Rational(1)});
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      const Rational denom = xs[i] - xs[j];
      if (sgn(denom) == 0) throw Error(ErrorKind::InvalidArgument, "interpolation nodes must be distinct");
      const Rational inv = 1 / denom;
      l = l * RatPoly(std::vector<Rational>{Rational(-xs[j] * inv), inv});
    }
    basis.push_back(std::move(l));
  }
  return basis;
}

RatPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys, int max_degree) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw Error(ErrorKind::InvalidArgument, "interpolation needs matching, non-empty node lists");
  }
  const auto basis = lagrange_basis(xs);
  RatPoly p;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatPoly term = basis[i];
    term.scale(ys[i]);
    p += term;
  }
  if (p.degree() > max_degree) {
    throw Error(ErrorKind::DegreeViolation, "interpolant has degree " + std::to_string(p.degree()) +
                                                " > " + std::to_string(max_degree));
  }
  return p;
}

}  // namespace permpat
