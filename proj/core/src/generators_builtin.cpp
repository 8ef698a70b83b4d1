// Generator matrices R(tau_k), R(rho_k) for every non-trivial,
// non-alternating irreducible representation of S_3, S_4 and S_5.
// These particular (non-standard) orthogonal forms make the normalized
// matrix elements diagonalize the limiting second-moment matrix.

#include <cctype>
#include <initializer_list>
#include <string_view>

#include "permpat/error.hpp"
#include "permpat/rep.hpp"

namespace permpat {

namespace {

// Parses entries written in table form:
//   "0", "-1/2", "√3/2", "2/√5", "-3√5/14", "9/(2√35)", "-√3/(14√2)".
// Value = sign * (a/c) * sqrt(b/d) for numerator a√b and denominator c√d.
QNum entry(std::string_view text) {
  static constexpr std::string_view kRoot = "√";
  std::size_t i = 0;
  auto fail = [&] { throw Error(ErrorKind::ParseError, "bad table entry '" + std::string(text) + "'"); };
  auto integer = [&](long fallback) {
    const std::size_t start = i;
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i++] - '0');
    }
    return i == start ? fallback : v;
  };
  auto radical = [&]() -> long {
    if (text.substr(i, kRoot.size()) != kRoot) return 1;
    i += kRoot.size();
    const long r = integer(-1);
    if (r < 0) fail();
    return r;
  };
  bool negative = false;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  const std::size_t before = i;
  long a = integer(1);
  const long b = radical();
  if (i == before) fail();
  long c = 1, d = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    const bool paren = i < text.size() && text[i] == '(';
    if (paren) ++i;
    const std::size_t den_start = i;
    c = integer(1);
    d = radical();
    if (i == den_start) fail();
    if (paren) {
      if (i >= text.size() || text[i] != ')') fail();
      ++i;
    }
  }
  if (i != text.size()) fail();
  if (a == 0) return QNum();
  if (negative) a = -a;
  Rational scale(a, c);
  scale.canonicalize();
  Rational under(b, d);
  under.canonicalize();
  return sqrt_rational(under) * scale;
}

using Rows = std::initializer_list<std::initializer_list<std::string_view>>;

QMatrix table(Rows rows) {
  const std::size_t n = rows.size();
  QMatrix m(n, n);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "generator table is not square");
    std::size_t c = 0;
    for (auto e : row) m(r, c++) = entry(e);
    ++r;
  }
  return m;
}

void add(GeneratorLibrary& lib, int k, std::string_view lambda, Rows tau, Rows rho) {
  lib.add(k, GeneratorPair{parse_partition(lambda), table(tau), table(rho)});
}

GeneratorLibrary make_builtin() {
  GeneratorLibrary lib;

  add(lib, 3, "21",
      {{"-1/2", "√3/2"},
       {"√3/2", "1/2"}},
      {{"-1/2", "-√3/2"},
       {"√3/2", "-1/2"}});

  add(lib, 4, "31",
      {{"1/5", "2/√5", "-2/5"},
       {"2/√5", "0", "1/√5"},
       {"-2/5", "1/√5", "4/5"}},
      {{"-4/5", "-1/√5", "-2/5"},
       {"1/√5", "0", "-2/√5"},
       {"-2/5", "2/√5", "-1/5"}});
  add(lib, 4, "22",
      {{"-1", "0"},
       {"0", "1"}},
      {{"1/2", "√3/2"},
       {"√3/2", "-1/2"}});
  add(lib, 4, "211",
      {{"0", "0", "1"},
       {"0", "-1", "0"},
       {"1", "0", "0"}},
      {{"0", "1", "0"},
       {"-1", "0", "0"},
       {"0", "0", "1"}});

  add(lib, 5, "41",
      {{"1/10", "-3/10", "3/(2√7)", "9/(2√35)"},
       {"-3/10", "9/10", "1/(2√7)", "3/(2√35)"},
       {"3/(2√7)", "1/(2√7)", "9/14", "-3√5/14"},
       {"9/(2√35)", "3/(2√35)", "-3√5/14", "5/14"}},
      {{"-1/2", "-1/2", "3/(2√7)", "-√5/(2√7)"},
       {"-1/2", "0", "1/(2√7)", "√5/√7"},
       {"-3/(2√7)", "-1/(2√7)", "-11/14", "-√5/14"},
       {"√5/(2√7)", "-√5/√7", "-√5/14", "2/7"}});
  add(lib, 5, "32",
      {{"-6/7", "0", "-1/√7", "0", "-√6/7"},
       {"0", "1", "0", "0", "0"},
       {"-1/√7", "0", "0", "0", "√6/√7"},
       {"0", "0", "0", "1", "0"},
       {"-√6/7", "0", "√6/√7", "0", "-1/7"}},
      {{"2/7", "3/(2√7)", "-2/√7", "-1/(2√14)", "-√3/(14√2)"},
       {"-3/(2√7)", "-1/2", "-1/2", "-1/(2√2)", "-√3/(2√14)"},
       {"2/√7", "-1/2", "0", "-1/(2√2)", "-√3/(2√14)"},
       {"-1/(2√14)", "1/(2√2)", "1/(2√2)", "-1/4", "-5√3/(4√7)"},
       {"-√3/(14√2)", "√3/(2√14)", "√3/(2√14)", "-5√3/(4√7)", "13/28"}});
  add(lib, 5, "311",
      {{"2/5", "-√6/5", "√3/√5", "0", "0", "0"},
       {"-√6/5", "3/5", "√2/√5", "0", "0", "0"},
       {"√3/√5", "√2/√5", "0", "0", "0", "0"},
       {"0", "0", "0", "0", "1/√7", "-√6/√7"},
       {"0", "0", "0", "1/√7", "-6/7", "-√6/7"},
       {"0", "0", "0", "-√6/√7", "-√6/7", "-1/7"}},
      {{"1", "0", "0", "0", "0", "0"},
       {"0", "-1/4", "-√5/(6√2)", "-5/(6√2)", "5/(2√14)", "5/(4√21)"},
       {"0", "√5/(6√2)", "1/6", "√5/6", "√5/(6√7)", "5√5/(2√42)"},
       {"0", "5/(6√2)", "√5/6", "-2/3", "-2/(3√7)", "1/(2√42)"},
       {"0", "5/(2√14)", "-√5/(6√7)", "2/(3√7)", "4/7", "-13/(14√6)"},
       {"0", "5/(4√21)", "-5√5/(2√42)", "-1/(2√42)", "-13/(14√6)", "5/28"}});
  add(lib, 5, "221",
      {{"-1/5", "2/5", "0", "2/√15", "2√2/√15"},
       {"2/5", "-4/5", "0", "1/√15", "√2/√15"},
       {"0", "0", "1", "0", "0"},
       {"2/√15", "1/√15", "0", "-2/3", "√2/3"},
       {"2√2/√15", "√2/√15", "0", "√2/3", "-1/3"}},
      {{"3/10", "-1/10", "3√3/(2√10)", "√3/(2√5)", "√3/(2√10)"},
       {"-1/10", "-4/5", "-√3/(2√10)", "2/√15", "-1/(2√30)"},
       {"-3√3/(2√10)", "√3/(2√10)", "1/4", "1/(2√2)", "-1/4"},
       {"-√3/(2√5)", "-2/√15", "1/(2√2)", "-2/3", "1/(6√2)"},
       {"-√3/(2√10)", "1/(2√30)", "-1/4", "1/(6√2)", "11/12"}});
  add(lib, 5, "2111",
      {{"-1/6", "√5/(2√3)", "√5/6", "√5/(2√3)"},
       {"√5/(2√3)", "-1/2", "1/(2√3)", "1/2"},
       {"√5/6", "1/(2√3)", "-5/6", "1/(2√3)"},
       {"√5/(2√3)", "1/2", "1/(2√3)", "-1/2"}},
      {{"-2/3", "0", "√5/6", "√5/(2√3)"},
       {"0", "0", "√3/2", "-1/2"},
       {"√5/6", "-√3/2", "1/6", "1/(2√3)"},
       {"-√5/(2√3)", "-1/2", "-1/(2√3)", "-1/2"}});
  return lib;
}

}  // namespace

const GeneratorLibrary& GeneratorLibrary::builtin() {
  static const GeneratorLibrary lib = make_builtin();
  return lib;
}

}  // namespace permpat
