#include "permpat/linalg.hpp"

#include <utility>

namespace permpat {

namespace {

template <class T, class Inverse>
std::size_t eliminate(Matrix<T>& m, Inverse inverse) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == T(0L)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
    }
    const T inv = inverse(m(rank, col));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == T(0L)) continue;
      const T factor = m(r, col) * inv;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(RMatrix m) {
  return eliminate(m, [](const Rational& x) { return Rational(1 / x); });
}

std::size_t rank(QMatrix m) {
  return eliminate(m, [](const QNum& x) { return x.inverse(); });
}

QMatrix to_qmatrix(const RMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = QNum(m(r, c));
  }
  return out;
}

}  // namespace permpat
