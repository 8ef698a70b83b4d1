#include "permpat/qfield.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>

#include "permpat/error.hpp"

namespace permpat {

namespace {

constexpr std::array<unsigned long, 16> kRadicands = [] {
  std::array<unsigned long, 16> r{};
  for (unsigned m = 0; m < 16; ++m) {
    unsigned long v = 1;
    for (unsigned b = 0; b < 4; ++b) {
      if (m & (1u << b)) v *= static_cast<unsigned long>(QNum::kPrimes[b]);
    }
    r[m] = v;
  }
  return r;
}();

std::uint8_t mask_of_squarefree(unsigned long radicand) {
  std::uint8_t mask = 0;
  for (unsigned b = 0; b < 4; ++b) {
    const auto p = static_cast<unsigned long>(QNum::kPrimes[b]);
    if (radicand % p == 0) {
      mask |= static_cast<std::uint8_t>(1u << b);
      radicand /= p;
    }
  }
  if (radicand != 1) {
    throw Error(ErrorKind::NotRepresentable, "radicand is not a square-free divisor of 210");
  }
  return mask;
}

int prime_bit(int prime) {
  for (int b = 0; b < 4; ++b) {
    if (QNum::kPrimes[b] == prime) return b;
  }
  throw Error(ErrorKind::InvalidArgument, "prime must be one of 2, 3, 5, 7");
}

// Small accumulator keyed by radicand mask.
class TermAccumulator {
 public:
  TermAccumulator() { slot_.fill(-1); }

  void add(std::uint8_t mask, Rational value) {
    if (slot_[mask] < 0) {
      slot_[mask] = static_cast<std::int8_t>(terms_.size());
      terms_.push_back({mask, std::move(value)});
    } else {
      terms_[slot_[mask]].coeff += value;
    }
  }

  std::vector<QNum::Term> take() {
    std::erase_if(terms_, [](const QNum::Term& t) { return sgn(t.coeff) == 0; });
    std::sort(terms_.begin(), terms_.end(),
              [](const QNum::Term& a, const QNum::Term& b) { return a.mask < b.mask; });
    return std::move(terms_);
  }

 private:
  std::array<std::int8_t, 16> slot_{};
  std::vector<QNum::Term> terms_;
};

}  // namespace

unsigned long radicand_of_mask(std::uint8_t mask) { return kRadicands.at(mask); }

QNum::QNum(const Rational& q) {
  if (sgn(q) != 0) terms_.push_back({0, q});
}

QNum::QNum(long value) : QNum(Rational(value)) {}

QNum QNum::term(const Rational& coeff, unsigned long radicand) {
  if (radicand == 0) return QNum();
  return sqrt_rational(Rational(radicand)) * coeff;
}

bool QNum::is_rational() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mask == 0);
}

Rational QNum::coefficient(unsigned long radicand) const {
  const std::uint8_t mask = mask_of_squarefree(radicand);
  for (const auto& t : terms_) {
    if (t.mask == mask) return t.coeff;
  }
  return Rational(0);
}

void QNum::normalize() {
  std::erase_if(terms_, [](const Term& t) { return sgn(t.coeff) == 0; });
}

int QNum::sign() const {
  if (terms_.empty()) return 0;
  if (is_rational()) return sgn(terms_[0].coeff);
  // Bracket each sqrt(d) by [floor(sqrt(d) 2^b), floor(sqrt(d) 2^b) + 1] / 2^b and
  // double the precision until the interval sum excludes zero.
  for (unsigned long bits = 64;; bits *= 2) {
    Rational lo(0), hi(0);
    BigInt scale(1);
    scale <<= bits;
    for (const auto& t : terms_) {
      if (t.mask == 0) {
        lo += t.coeff;
        hi += t.coeff;
        continue;
      }
      BigInt scaled(radicand_of_mask(t.mask));
      scaled <<= 2 * bits;
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
      Rational lower(root, scale), upper(root + 1, scale);
      lower.canonicalize();
      upper.canonicalize();
      if (sgn(t.coeff) > 0) {
        lo += t.coeff * lower;
        hi += t.coeff * upper;
      } else {
        lo += t.coeff * upper;
        hi += t.coeff * lower;
      }
    }
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
}

double QNum::to_double() const {
  double v = 0.0;
  for (const auto& t : terms_) {
    v += t.coeff.get_d() * std::sqrt(static_cast<double>(radicand_of_mask(t.mask)));
  }
  return v;
}

std::string QNum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string piece;
    if (t.mask == 0) {
      piece = t.coeff.get_str();
    } else {
      const std::string root = "√" + std::to_string(radicand_of_mask(t.mask));
      if (t.coeff == 1) {
        piece = root;
      } else if (t.coeff == -1) {
        piece = "-" + root;
      } else {
        piece = t.coeff.get_str() + root;
      }
    }
    if (!out.empty() && piece.front() != '-') out.push_back('+');
    out += piece;
  }
  return out;
}

QNum QNum::conjugate(int prime) const {
  const auto bit = static_cast<std::uint8_t>(1u << prime_bit(prime));
  QNum out(*this);
  for (auto& t : out.terms_) {
    if (t.mask & bit) t.coeff = -t.coeff;
  }
  return out;
}

QNum QNum::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroDivision, "inverse of zero");
  QNum num(1L);
  QNum den(*this);
  for (int b = 0; b < 4; ++b) {
    const auto bit = static_cast<std::uint8_t>(1u << b);
    const bool involves = std::any_of(den.terms_.begin(), den.terms_.end(),
                                      [&](const Term& t) { return (t.mask & bit) != 0; });
    if (!involves) continue;
    const QNum c = den.conjugate(kPrimes[b]);
    num *= c;
    den *= c;
  }
  // den is now rational and nonzero.
  Rational scale = 1 / den.rational_part();
  return num * scale;
}

QNum QNum::operator-() const {
  QNum out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

QNum& QNum::operator+=(const QNum& other) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->mask < b->mask)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mask < a->mask) {
      merged.push_back(*b++);
    } else {
      Rational sum = a->coeff + b->coeff;
      if (sgn(sum) != 0) merged.push_back({a->mask, std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

QNum& QNum::operator-=(const QNum& other) { return *this += -other; }

QNum operator*(const QNum& a, const QNum& b) {
  QNum out;
  if (a.is_zero() || b.is_zero()) return out;
  if (a.is_rational()) return b * a.terms_[0].coeff;
  if (b.is_rational()) return a * b.terms_[0].coeff;
  TermAccumulator acc;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Rational c = ta.coeff * tb.coeff;
      const std::uint8_t common = ta.mask & tb.mask;
      if (common != 0) c *= radicand_of_mask(common);
      acc.add(static_cast<std::uint8_t>(ta.mask ^ tb.mask), std::move(c));
    }
  }
  out.terms_ = acc.take();
  return out;
}

QNum& QNum::operator*=(const QNum& other) {
  *this = *this * other;
  return *this;
}

QNum& QNum::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

QNum& QNum::operator/=(const QNum& other) {
  if (other.is_rational()) {
    if (other.is_zero()) throw Error(ErrorKind::ZeroDivision, "division by zero");
    Rational inv = 1 / other.terms_[0].coeff;
    return *this *= inv;
  }
  return *this *= other.inverse();
}

void QNum::add_product(const QNum& a, const QNum& b) {
  if (a.is_zero() || b.is_zero()) return;
  *this += a * b;
}

std::ostream& operator<<(std::ostream& os, const QNum& q) { return os << q.to_string(); }

QNum sqrt_rational(const Rational& q) {
  if (sgn(q) < 0) throw Error(ErrorKind::InvalidArgument, "sqrt of a negative rational");
  if (sgn(q) == 0) return QNum();
  // sqrt(a/b) = sqrt(a b) / b; split a b = s^2 f with f square-free.
  BigInt rest = q.get_num() * q.get_den();
  std::uint8_t mask = 0;
  BigInt square_root(1);
  for (unsigned b = 0; b < 4; ++b) {
    const auto p = static_cast<unsigned long>(QNum::kPrimes[b]);
    unsigned long exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++exponent;
    }
    if (exponent % 2 == 1) mask |= static_cast<std::uint8_t>(1u << b);
    for (unsigned long e = 0; e < exponent / 2; ++e) square_root *= p;
  }
  if (!mpz_perfect_square_p(rest.get_mpz_t())) {
    throw Error(ErrorKind::NotRepresentable,
                "sqrt(" + q.get_str() + ") needs a prime >= 11 under the root");
  }
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
  square_root *= r;
  Rational coeff(square_root, q.get_den());
  coeff.canonicalize();
  return QNum::radical(mask, coeff);
}

QNum QNum::radical(std::uint8_t mask, const Rational& coeff) {
  if (mask >= 16) throw Error(ErrorKind::InvalidArgument, "radicand mask out of range");
  QNum out;
  if (sgn(coeff) != 0) out.terms_.push_back({mask, coeff});
  return out;
}

QNum parse_qnum(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto fail = [&] { throw Error(ErrorKind::ParseError, "cannot parse '" + std::string(text) + "'"); };
  if (s.empty()) fail();
  static const std::string kRoot = "\u221a";
  auto read_digits = [&](std::size_t& i) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };
  QNum result;
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i > 0) {
      fail();
    }
    Rational coeff(1);
    bool have_coeff = false;
    const std::string num = read_digits(i);
    if (!num.empty()) {
      have_coeff = true;
      coeff = Rational(BigInt(num));
      if (i < s.size() && s[i] == '/') {
        ++i;
        const std::string den = read_digits(i);
        if (den.empty()) fail();
        BigInt d(den);
        if (d == 0) throw Error(ErrorKind::ZeroDivision, "zero denominator in '" + std::string(text) + "'");
        coeff = Rational(BigInt(num), d);
        coeff.canonicalize();
      }
    }
    if (i < s.size() && s[i] == '*') ++i;
    unsigned long radicand = 1;
    bool have_root = false;
    if (s.compare(i, kRoot.size(), kRoot) == 0) {
      i += kRoot.size();
      const std::string r = read_digits(i);
      if (r.empty()) fail();
      radicand = std::stoul(r);
      have_root = true;
    } else if (s.compare(i, 5, "sqrt(") == 0) {
      i += 5;
      const std::string r = read_digits(i);
      if (r.empty() || i >= s.size() || s[i] != ')') fail();
      ++i;
      radicand = std::stoul(r);
      have_root = true;
    }
    if (!have_coeff && !have_root) fail();
    if (negative) coeff = -coeff;
    result += QNum::term(coeff, radicand);
  }
  return result;
}

}  // namespace permpat
