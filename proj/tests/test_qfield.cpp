#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "permpat/error.hpp"
#include "permpat/qfield.hpp"

using namespace permpat;

namespace {

QNum q(const char* s) { return parse_qnum(s); }

}  // namespace

TEST(QNum, RendersAndParses) {
  const QNum x = QNum(oracle::frac(1, 2)) + QNum::term(oracle::frac(1, 3), 6);
  EXPECT_EQ(x.to_string(), "1/2+1/3√6");
  EXPECT_EQ(q("1/2+1/3√6"), x);
  EXPECT_EQ(q("1/2 + 1/3*sqrt(6)"), x);
  EXPECT_EQ(q("-√2").to_string(), "-√2");
  EXPECT_EQ(QNum().to_string(), "0");
  EXPECT_THROW(q("1/2+"), Error);
}

TEST(QNum, SquareRootsReduce) {
  EXPECT_EQ(sqrt_rational(Rational(12)), QNum::term(Rational(2), 3));
  EXPECT_EQ(sqrt_rational(oracle::frac(3, 8)), QNum::term(oracle::frac(1, 4), 6));
  EXPECT_EQ(sqrt_rational(Rational(49)), QNum(7L));
  EXPECT_TRUE(sqrt_rational(Rational(0)).is_zero());
  try {
    sqrt_rational(Rational(11));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRepresentable);
  }
}

TEST(QNum, FieldArithmetic) {
  const QNum s2 = QNum::term(Rational(1), 2);
  const QNum s3 = QNum::term(Rational(1), 3);
  EXPECT_EQ(s2 * s2, QNum(2L));
  EXPECT_EQ(s2 * s3, QNum::term(Rational(1), 6));
  EXPECT_EQ(QNum::term(Rational(1), 6) * QNum::term(Rational(1), 10), QNum::term(Rational(2), 15));
  const QNum x = QNum(1L) + s2 + s3 + QNum::term(Rational(1), 35);
  const QNum inv = x.inverse();
  EXPECT_EQ(x * inv, QNum(1L));
  EXPECT_THROW(QNum().inverse(), Error);
  EXPECT_EQ((x / x), QNum(1L));
  EXPECT_EQ(x.conjugate(2), QNum(1L) - s2 + s3 + QNum::term(Rational(1), 35));
}

TEST(QNum, ArithmeticAgreesWithFloatingPoint) {
  // Deterministic pseudo-random elements with all 16 radicals.
  std::uint64_t state = 7;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 33) % 19) - 9;
  };
  for (int trial = 0; trial < 200; ++trial) {
    QNum a, b;
    for (unsigned long r : {1UL, 2UL, 3UL, 5UL, 6UL, 7UL, 10UL, 14UL, 15UL, 21UL, 35UL, 30UL, 42UL, 70UL, 105UL, 210UL}) {
      a += QNum::term(oracle::frac(next(), 1 + std::abs(next())), r);
      b += QNum::term(oracle::frac(next(), 1 + std::abs(next())), r);
    }
    const double da = a.to_double(), db = b.to_double();
    EXPECT_NEAR((a * b).to_double(), da * db, 1e-9 * (1 + std::abs(da * db)));
    EXPECT_NEAR((a - b).to_double(), da - db, 1e-9 * (1 + std::abs(da - db)));
    if (!b.is_zero()) EXPECT_NEAR((a / b).to_double(), da / db, 1e-7 * (1 + std::abs(da / db)));
    const int expected_sign = da > 0 ? 1 : (da < 0 ? -1 : 0);
    if (std::abs(da) > 1e-9) EXPECT_EQ(a.sign(), expected_sign);
  }
}

TEST(QNum, SignIsExactNearZero) {
  // 3√2 - √17.99.. style cancellations: 99/70 is a close rational approximation of √2.
  const QNum close = QNum::term(Rational(1), 2) - QNum(oracle::frac(99, 70));
  EXPECT_EQ(close.sign(), -1);
  const QNum closer = QNum::term(Rational(1), 2) - QNum(oracle::frac(665857, 470832));
  EXPECT_EQ(closer.sign(), -1);
  const QNum above = QNum::term(Rational(1), 2) - QNum(oracle::frac(1393, 985));
  EXPECT_EQ(above.sign(), 1);
  const QNum mixed = QNum::term(Rational(1), 2) + QNum::term(Rational(1), 3) - QNum::term(Rational(1), 10);
  EXPECT_EQ(mixed.sign(), (std::sqrt(2.0) + std::sqrt(3.0) - std::sqrt(10.0)) > 0 ? 1 : -1);
  EXPECT_EQ(QNum().sign(), 0);
}

TEST(QNum, CoefficientsAndRationality) {
  const QNum x = q("2/3-5/7√21");
  EXPECT_EQ(x.rational_part(), oracle::frac(2, 3));
  EXPECT_EQ(x.coefficient(21), oracle::frac(-5, 7));
  EXPECT_EQ(x.coefficient(2), 0);
  EXPECT_FALSE(x.is_rational());
  EXPECT_TRUE(QNum(oracle::frac(4, 9)).is_rational());
}
