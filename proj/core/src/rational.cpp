#include "permpat/rational.hpp"

#include <cctype>
#include <limits>

#include "permpat/error.hpp"

namespace permpat {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational");
  if (s.front() == '+') s.erase(s.begin());
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
    return Rational(BigInt(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
  }
  BigInt d(den);
  if (d == 0) throw Error(ErrorKind::ZeroDivision, "zero denominator in '" + std::string(text) + "'");
  Rational q(BigInt(num), d);
  q.canonicalize();
  return q;
}

std::uint64_t factorial(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative factorial");
  if (n > 20) throw Error(ErrorKind::TooLarge, std::to_string(n) + "! does not fit in 64 bits");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw Error(ErrorKind::TooLarge, "binomial coefficient overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

BigInt big_factorial(int n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

BigInt big_binomial(unsigned long n, unsigned long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace permpat
