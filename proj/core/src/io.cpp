#include "permpat/io.hpp"

#include <fstream>
#include <ostream>

#include "permpat/error.hpp"
#include "permpat/perm.hpp"

namespace permpat {

namespace {

QMatrix matrix_from_json(const Json& rows, std::size_t dim, const std::string& what) {
  if (!rows.is_array() || rows.size() != dim) {
    throw Error(ErrorKind::ParseError, what + " must be a " + std::to_string(dim) + "x" +
                                           std::to_string(dim) + " array");
  }
  QMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!rows[r].is_array() || rows[r].size() != dim) {
      throw Error(ErrorKind::ParseError, what + " row " + std::to_string(r + 1) + " has the wrong length");
    }
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = qnum_from_json(rows[r][c]);
  }
  return m;
}

Partition partition_from_json(const Json& j) {
  if (j.is_string()) return parse_partition(j.get<std::string>());
  if (j.is_array()) return make_partition(j.get<std::vector<int>>());
  throw Error(ErrorKind::ParseError, "lambda must be a list of parts or a label");
}

std::string column_name(const ColumnLabel& l) {
  return l.lambda.label() + "(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
}

}  // namespace

Json to_json(const QNum& q) { return q.to_string(); }
Json to_json(const Rational& q) { return to_string(q); }

QNum qnum_from_json(const Json& j) {
  if (j.is_string()) return parse_qnum(j.get<std::string>());
  if (j.is_number_integer()) return QNum(j.get<long>());
  throw Error(ErrorKind::ParseError, "exact numbers must be strings or integers, got " + j.dump());
}

Json to_json(const RatPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const QPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const ColumnLabel& label) {
  return {{"lambda", label.lambda.parts}, {"i", label.i}, {"j", label.j}, {"block", label.block}};
}

Json to_json(const LimitReport& report) {
  Json diagonal = Json::array();
  for (const auto& d : report.diagonal) {
    diagonal.push_back({{"label", to_json(d.label)},
                        {"limit", to_json(d.limit)},
                        {"approx", d.limit.to_double()},
                        {"positive", d.positive},
                        {"rational", d.rational}});
  }
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"row", v.row}, {"col", v.col}, {"r", v.r}, {"s", v.s}, {"detail", v.detail}});
  }
  return {{"k", report.k},
          {"result", report.pass ? "PASS" : "FAIL"},
          {"exact", true},
          {"diagonal", diagonal},
          {"offdiagonal_checked", report.offdiagonal_checked},
          {"offdiagonal_violations", violations},
          {"all_rational", report.all_rational()}};
}

Json to_json(const MomentMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return {{"k", m.k()}, {"scaled_by", "C(n,k)"}, {"exact", true}, {"entries", rows}};
}

Json to_json(const BasisMatrix& u) {
  Json labels = Json::array();
  for (const auto& l : u.labels()) labels.push_back(to_json(l));
  Json perms = Json::array();
  for (const auto& p : all_permutations(u.k())) perms.push_back(p.to_string());
  Json rows = Json::array();
  for (std::size_t r = 0; r < u.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < u.size(); ++c) row.push_back(to_json(u.matrix()(r, c)));
    rows.push_back(row);
  }
  return {{"k", u.k()}, {"rows", perms}, {"columns", labels}, {"matrix", rows}};
}

Json to_json(const ScalingReport& report) {
  Json points = Json::array();
  for (const auto& p : report.points) {
    points.push_back({{"n", p.n},
                      {"mean", p.mean},
                      {"second_moment", p.second_moment},
                      {"stderr", p.stderr},
                      {"usable", p.usable}});
  }
  Json out = {{"k", report.k}, {"samples", report.samples}, {"seed", report.seed},
              {"exact", false}, {"points", points}};
  if (report.block) out["target_exponent"] = -*report.block;
  if (report.fit) {
    out["fit"] = {{"slope", report.fit->slope},
                  {"stderr", report.fit->stderr},
                  {"ci95", {report.fit->ci_low, report.fit->ci_high}},
                  {"points", report.fit->points}};
  } else {
    out["fit"] = nullptr;
  }
  return out;
}

Json to_json(const TestResult& result) {
  Json out = {{"statistic", result.name},
              {"value", to_json(result.value)},
              {"approx", result.value.to_double()},
              {"exact", true},
              {"n", result.n},
              {"ties_broken", result.ties_broken}};
  if (result.p_value) {
    out["p_value"] = {{"p", result.p_value->p},
                      {"exact", false},
                      {"samples", result.p_value->samples},
                      {"seed", result.p_value->seed},
                      {"exceedances", result.p_value->exceedances}};
  }
  return out;
}

void write_basis_csv(std::ostream& out, const BasisMatrix& u) {
  out << "sigma";
  for (const auto& l : u.labels()) out << ',' << column_name(l);
  out << '\n';
  const auto perms = all_permutations(u.k());
  for (std::size_t r = 0; r < u.size(); ++r) {
    out << perms[r].to_string();
    for (std::size_t c = 0; c < u.size(); ++c) out << ',' << u.matrix()(r, c).to_string();
    out << '\n';
  }
}

void write_scaling_csv(std::ostream& out, const std::vector<ScalingReport>& reports) {
  out << "direction,n,mean,second_moment,stderr,usable\n";
  for (std::size_t d = 0; d < reports.size(); ++d) {
    for (const auto& p : reports[d].points) {
      out << d << ',' << p.n << ',' << p.mean << ',' << p.second_moment << ',' << p.stderr << ','
          << (p.usable ? 1 : 0) << '\n';
    }
  }
}

void load_generators_json(const Json& doc, GeneratorLibrary& library) {
  if (doc.is_array()) {
    for (const auto& entry : doc) load_generators_json(entry, library);
    return;
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "generator entry must be an object");
  try {
    const int k = doc.at("k").get<int>();
    Partition lambda = partition_from_json(doc.at("lambda"));
    const auto d = static_cast<std::size_t>(dim(lambda));
    const std::string name = lambda.label();
    QMatrix tau = matrix_from_json(doc.at("tau"), d, "tau for " + name);
    QMatrix rho = matrix_from_json(doc.at("rho"), d, "rho for " + name);
    library.add(k, GeneratorPair{std::move(lambda), std::move(tau), std::move(rho)});
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed generator entry: ") + e.what());
  }
}

void load_generator_file(const std::filesystem::path& path, GeneratorLibrary& library) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
  load_generators_json(doc, library);
}

}  // namespace permpat
