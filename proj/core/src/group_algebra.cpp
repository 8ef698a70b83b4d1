#include "permpat/group_algebra.hpp"

#include <algorithm>
#include <set>

#include "permpat/error.hpp"

namespace permpat {

GroupAlgebraElt GroupAlgebraElt::basis(const Permutation& sigma, const Rational& coeff) {
  GroupAlgebraElt e(sigma.size());
  e.add(lex_index(sigma), coeff);
  return e;
}

Rational GroupAlgebraElt::coefficient(const Permutation& sigma) const {
  if (auto it = coeffs_.find(lex_index(sigma)); it != coeffs_.end()) return it->second;
  return Rational(0);
}

void GroupAlgebraElt::add(std::int64_t lex, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = coeffs_.emplace(lex, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) coeffs_.erase(it);
  }
}

GroupAlgebraElt& GroupAlgebraElt::operator+=(const GroupAlgebraElt& other) {
  if (other.k_ != k_) throw Error(ErrorKind::InvalidArgument, "group algebra size mismatch");
  for (const auto& [s, c] : other.coeffs_) add(s, c);
  return *this;
}

GroupAlgebraElt& GroupAlgebraElt::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [s, c] : coeffs_) c *= scalar;
  return *this;
}

GroupAlgebraElt operator*(const GroupAlgebraElt& a, const GroupAlgebraElt& b) {
  if (a.k_ != b.k_) throw Error(ErrorKind::InvalidArgument, "group algebra size mismatch");
  GroupAlgebraElt out(a.k_);
  for (const auto& [sa, ca] : a.coeffs_) {
    const Permutation pa = lex_perm(a.k_, sa);
    for (const auto& [sb, cb] : b.coeffs_) {
      out.add(lex_index(compose(pa, lex_perm(b.k_, sb))), ca * cb);
    }
  }
  return out;
}

std::vector<Rational> GroupAlgebraElt::dense() const {
  std::vector<Rational> v(factorial(k_));
  for (const auto& [s, c] : coeffs_) v[static_cast<std::size_t>(s)] = c;
  return v;
}

std::string GroupAlgebraElt::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : coeffs_) {
    const std::string name = lex_perm(k_, s).to_string();
    std::string piece;
    if (c == 1) {
      piece = name;
    } else if (c == -1) {
      piece = "-" + name;
    } else {
      piece = c.get_str() + "*" + name;
    }
    if (!out.empty() && piece.front() != '-') out.push_back('+');
    out += piece;
  }
  return out;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition{parts};
}

std::vector<std::vector<int>> Tableau::columns() const {
  std::vector<std::vector<int>> cols;
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (cols.size() <= j) cols.emplace_back();
      cols[j].push_back(r[j]);
    }
  }
  return cols;
}

Tableau make_tableau(std::vector<std::vector<int>> rows) {
  if (rows.empty()) throw Error(ErrorKind::InvalidTableau, "empty tableau");
  std::set<int> entries;
  std::size_t total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) throw Error(ErrorKind::InvalidTableau, "empty row");
    if (i > 0 && rows[i].size() > rows[i - 1].size()) {
      throw Error(ErrorKind::InvalidTableau, "row lengths must be non-increasing");
    }
    total += rows[i].size();
    entries.insert(rows[i].begin(), rows[i].end());
  }
  const auto k = static_cast<int>(total);
  if (entries.size() != total || *entries.begin() != 1 || *entries.rbegin() != k) {
    throw Error(ErrorKind::InvalidTableau, "entries must be exactly 1.." + std::to_string(k));
  }
  return Tableau{std::move(rows)};
}

namespace {

std::vector<Permutation> stabilizer(int k, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> block_of(static_cast<std::size_t>(k) + 1, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) block_of[x] = static_cast<int>(b);
  }
  std::vector<Permutation> out;
  for (const auto& p : all_permutations(k)) {
    bool keeps = true;
    for (int x = 1; x <= k && keeps; ++x) keeps = block_of[p[x - 1]] == block_of[x];
    if (keeps) out.push_back(p);
  }
  return out;
}

int tableau_size(const Tableau& t) { return t.shape().size(); }

// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || sgn(rows[o][c]) == 0) continue;
      const Rational f = rows[o][c];
      for (std::size_t j = c; j < cols; ++j) rows[o][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<std::vector<Rational>> ideal_rows(const GroupAlgebraElt& x) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& s : all_permutations(x.k())) rows.push_back((GroupAlgebraElt::basis(s) * x).dense());
  return rows;
}

}  // namespace

std::vector<Permutation> row_group(const Tableau& t) { return stabilizer(tableau_size(t), t.rows); }

std::vector<Permutation> column_group(const Tableau& t) {
  return stabilizer(tableau_size(t), t.columns());
}

GroupAlgebraElt young_symmetrizer(const Tableau& t) {
  const int k = tableau_size(t);
  GroupAlgebraElt a(k), b(k);
  for (const auto& p : row_group(t)) a.add(lex_index(p), 1);
  for (const auto& q : column_group(t)) b.add(lex_index(q), q.sign());
  return a * b;
}

std::size_t left_ideal_dimension(const GroupAlgebraElt& x) {
  auto rows = ideal_rows(x);
  return rref(rows).size();
}

std::vector<Rational> left_ideal_character(const GroupAlgebraElt& x) {
  auto basis = ideal_rows(x);
  const auto pivots = rref(basis);
  std::vector<Rational> chi;
  for (const auto& s : all_permutations(x.k())) {
    Rational trace(0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      GroupAlgebraElt b(x.k());
      for (std::size_t j = 0; j < basis[i].size(); ++j) b.add(static_cast<std::int64_t>(j), basis[i][j]);
      // In reduced echelon form, the coordinate along basis[i] is the pivot entry.
      trace += (GroupAlgebraElt::basis(s) * b).coefficient(lex_perm(x.k(), static_cast<std::int64_t>(pivots[i])));
    }
    chi.push_back(trace);
  }
  return chi;
}

}  // namespace permpat
