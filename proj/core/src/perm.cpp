#include "permpat/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "permpat/error.hpp"
#include "permpat/profile.hpp"
#include "permpat/rational.hpp"

namespace permpat {

Permutation Permutation::from_one_line(std::span<const int> values) {
  if (values.empty()) throw Error(ErrorKind::NotABijection, "empty permutation");
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values) {
    if (v < 1 || v > n) {
      throw Error(ErrorKind::NotABijection,
                  "value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    }
    if (seen[v]) throw Error(ErrorKind::NotABijection, "duplicate value " + std::to_string(v));
    seen[v] = true;
  }
  return Permutation(std::vector<int>(values.begin(), values.end()));
}

Permutation Permutation::from_one_line(std::initializer_list<int> values) {
  return from_one_line(std::span<const int>(values.begin(), values.size()));
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "identity needs n >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::reversed() const {
  return Permutation(std::vector<int>(images_.rbegin(), images_.rend()));
}

Permutation Permutation::complemented() const {
  std::vector<int> c(images_);
  const int n = size();
  for (int& v : c) v = n + 1 - v;
  return Permutation(std::move(c));
}

int Permutation::sign() const {
  std::vector<bool> visited(images_.size(), false);
  int transpositions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (visited[i]) continue;
    std::size_t j = i;
    int len = 0;
    while (!visited[j]) {
      visited[j] = true;
      j = static_cast<std::size_t>(images_[j] - 1);
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

std::string Permutation::to_string() const {
  std::string s;
  const bool compact = size() < 10;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!compact && i > 0) s.push_back(' ');
    s += std::to_string(images_[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "size mismatch in compose");
  std::vector<int> c(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) c[i] = a[b[i] - 1];
  return Permutation::from_one_line(c);
}

Permutation then(const Permutation& a, const Permutation& b) { return compose(b, a); }

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + i) {
      throw Error(ErrorKind::ParseError, "cannot parse permutation '" + std::string(text) + "'");
    }
    values.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',') {
      throw Error(ErrorKind::ParseError, "cannot parse permutation '" + std::string(text) + "'");
    }
  }
  // A single multi-digit token is the compact form "2143" (sizes below 10).
  if (values.size() == 1 && values[0] > 9) {
    std::vector<int> digits;
    for (char c : text) {
      if (std::isdigit(static_cast<unsigned char>(c))) digits.push_back(c - '0');
    }
    return Permutation::from_one_line(digits);
  }
  return Permutation::from_one_line(values);
}

std::int64_t lex_index(const Permutation& sigma) {
  const int k = sigma.size();
  if (k > 20) throw Error(ErrorKind::TooLarge, "lex_index supports k <= 20");
  std::int64_t rank = 0;
  for (int i = 0; i < k; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < k; ++j) smaller_after += sigma[j] < sigma[i] ? 1 : 0;
    rank += smaller_after * static_cast<std::int64_t>(factorial(k - 1 - i));
  }
  return rank;
}

Permutation lex_perm(int k, std::int64_t index) {
  if (k < 1 || k > 20) throw Error(ErrorKind::InvalidArgument, "lex_perm supports 1 <= k <= 20");
  const auto total = static_cast<std::int64_t>(factorial(k));
  if (index < 0 || index >= total) throw Error(ErrorKind::InvalidArgument, "lex index out of range");
  std::vector<int> pool(static_cast<std::size_t>(k));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(pool.size());
  for (int i = k - 1; i >= 0; --i) {
    const auto f = static_cast<std::int64_t>(factorial(i));
    const auto digit = static_cast<std::size_t>(index / f);
    index %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation::from_one_line(out);
}

std::vector<Permutation> all_permutations(int k) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(Permutation::from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

PatternId pattern_of(const Permutation& pi, std::span<const int> positions) {
  const int k = static_cast<int>(positions.size());
  if (k == 0) throw Error(ErrorKind::BadPositions, "no positions given");
  std::vector<int> values;
  values.reserve(positions.size());
  int prev = 0;
  for (int a : positions) {
    if (a <= prev || a > pi.size()) {
      throw Error(ErrorKind::BadPositions, "positions must be strictly increasing in 1.." +
                                               std::to_string(pi.size()));
    }
    values.push_back(pi[a - 1]);
    prev = a;
  }
  // Relative order of the selected values.
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> pattern(values.size());
  for (int rank = 0; rank < k; ++rank) pattern[order[rank]] = rank + 1;
  return PatternId{k, lex_index(Permutation::from_one_line(pattern))};
}

Permutation perm_of_points(std::span<const PlanePoint> points) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(ErrorKind::DegeneratePoints, "empty point set");
  for (const auto& p : points) {
    if (!std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw Error(ErrorKind::DegeneratePoints, "non-finite coordinate");
    }
  }
  std::vector<std::size_t> by_y(n), by_z(n);
  std::iota(by_y.begin(), by_y.end(), 0);
  std::iota(by_z.begin(), by_z.end(), 0);
  std::sort(by_y.begin(), by_y.end(), [&](auto a, auto b) { return points[a].y < points[b].y; });
  std::sort(by_z.begin(), by_z.end(), [&](auto a, auto b) { return points[a].z < points[b].z; });
  for (std::size_t i = 1; i < n; ++i) {
    if (points[by_y[i]].y == points[by_y[i - 1]].y) {
      throw Error(ErrorKind::DegeneratePoints, "tied y coordinates");
    }
    if (points[by_z[i]].z == points[by_z[i - 1]].z) {
      throw Error(ErrorKind::DegeneratePoints, "tied z coordinates");
    }
  }
  std::vector<int> z_rank(n);
  for (std::size_t r = 0; r < n; ++r) z_rank[by_z[r]] = static_cast<int>(r) + 1;
  std::vector<int> one_line(n);
  for (std::size_t i = 0; i < n; ++i) one_line[i] = z_rank[by_y[i]];
  return Permutation::from_one_line(one_line);
}

namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

bool parse_double(const std::string& field, double& out) {
  const std::string t = trim(field);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size();
}

}  // namespace

std::vector<PlanePoint> read_points_csv(std::istream& in, char delimiter) {
  std::vector<PlanePoint> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string trimmed = trim(line);
    auto fail = [&](const std::string& why) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + why);
    };
    if (trimmed.empty()) fail("blank row");
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(trimmed);
    while (std::getline(ls, field, delimiter)) fields.push_back(field);
    if (!trimmed.empty() && trimmed.back() == delimiter) fields.emplace_back();
    double y = 0.0, z = 0.0;
    const bool numeric = fields.size() == 2 && parse_double(fields[0], y) && parse_double(fields[1], z);
    if (!numeric) {
      if (line_no == 1 && points.empty()) continue;  // header
      fail("expected two numeric columns");
    }
    if (std::isnan(y) || std::isnan(z)) fail("NaN value");
    points.push_back({y, z});
  }
  return points;
}

}  // namespace permpat
