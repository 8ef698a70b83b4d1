#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "permpat/error.hpp"
#include "permpat/io.hpp"
#include "permpat/moments.hpp"
#include "permpat/montecarlo.hpp"
#include "permpat/profile.hpp"
#include "permpat/rep.hpp"
#include "permpat/stats.hpp"
#include "permpat/version.hpp"

namespace permpat::cli {

namespace {

enum class Format { Json, Csv, Text };

constexpr double kSlopeBand = 0.3;

struct Common {
  std::string format = "json";
  unsigned threads = 1;
  std::optional<std::uint64_t> seed;
  std::string generators;
  bool long_run = false;
  std::string cache_dir;
};

struct Output {
  std::ostream& out;
  Format format;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw Error(ErrorKind::InvalidArgument, "unknown format '" + s + "'");
}

Json envelope(const std::string& command) { return {{"version", kVersion}, {"command", command}}; }

void emit(Output& o, const Json& doc) { o.out << doc.dump(2) << '\n'; }

void require_format(const Output& o, std::initializer_list<Format> allowed, const std::string& command) {
  for (Format f : allowed) {
    if (f == o.format) return;
  }
  throw Error(ErrorKind::InvalidArgument, "output format not supported by " + command);
}

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed) return *c.seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

GeneratorLibrary library_for(const Common& c) {
  GeneratorLibrary lib = GeneratorLibrary::builtin();
  if (!c.generators.empty()) load_generator_file(c.generators, lib);
  return lib;
}

MomentOptions moment_options(const Common& c) {
  MomentOptions opts;
  opts.long_run = c.long_run;
  opts.threads = c.threads;
  if (!c.cache_dir.empty()) {
    opts.cache_dir = c.cache_dir;
  } else if (const char* env = std::getenv(kCacheEnv); env != nullptr && *env != '\0') {
    opts.cache_dir = env;
  }
  return opts;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "cannot parse integer list '" + text + "'");
    }
  }
  return out;
}

std::vector<PlanePoint> read_points(const std::string& path, char delimiter) {
  if (path == "-") return read_points_csv(std::cin, delimiter);
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  return read_points_csv(in, delimiter);
}

std::string label_text(const ColumnLabel& l) {
  return l.lambda.label() + "(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
}

// ---- profile ----

struct ProfileArgs {
  std::string perm;
  int k = 0;
  std::uint64_t sample = 0;
};

int cmd_profile(const ProfileArgs& a, const Common& c, Output& o) {
  const Permutation pi = parse_permutation(a.perm);
  const auto patterns = all_permutations(a.k);
  if (a.sample > 0) {
    const std::uint64_t seed = resolve_seed(c);
    Rng rng(seed);
    const ProfileEstimate est = profile_sampled(pi, a.k, a.sample, rng);
    if (o.format == Format::Json) {
      Json doc = envelope("profile");
      doc.update({{"n", pi.size()}, {"k", a.k}, {"exact", false}, {"seed", seed}, {"samples", a.sample},
                  {"densities", est.densities}, {"std_errors", est.std_errors}});
      Json names = Json::array();
      for (const auto& p : patterns) names.push_back(p.to_string());
      doc["patterns"] = names;
      emit(o, doc);
    } else {
      if (o.format == Format::Csv) o.out << "pattern,density,std_error\n";
      if (o.format == Format::Text) o.out << "seed " << seed << ", " << a.sample << " sampled subsets\n";
      for (std::size_t i = 0; i < patterns.size(); ++i) {
        const char sep = o.format == Format::Csv ? ',' : ' ';
        o.out << patterns[i].to_string() << sep << est.densities[i] << sep << est.std_errors[i] << '\n';
      }
    }
    return kOk;
  }

  const Profile prof = profile(pi, a.k);
  if (o.format == Format::Json) {
    Json doc = envelope("profile");
    Json names = Json::array(), dens = Json::array();
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      names.push_back(patterns[i].to_string());
      dens.push_back(to_json(prof.density(i)));
    }
    doc.update({{"n", pi.size()}, {"k", a.k}, {"exact", true}, {"total", prof.total()},
                {"patterns", names}, {"counts", prof.counts}, {"densities", dens}});
    emit(o, doc);
  } else {
    const char sep = o.format == Format::Csv ? ',' : ' ';
    if (o.format == Format::Csv) o.out << "pattern,count,density\n";
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      o.out << patterns[i].to_string() << sep << prof.counts[i] << sep << to_string(prof.density(i)) << '\n';
    }
  }
  return kOk;
}

// ---- decompose ----

struct DecomposeArgs {
  std::string perm;
  int k = 0;
  bool basis = false;
};

int cmd_decompose(const DecomposeArgs& a, const Common& c, Output& o) {
  const GeneratorLibrary lib = library_for(c);
  const BasisMatrix u = build_U(a.k, lib);
  if (a.basis) {
    require_format(o, {Format::Json, Format::Csv}, "decompose --basis");
    if (o.format == Format::Csv) {
      write_basis_csv(o.out, u);
    } else {
      Json doc = envelope("decompose");
      doc["basis"] = to_json(u);
      emit(o, doc);
    }
    return kOk;
  }
  if (a.perm.empty()) throw Error(ErrorKind::InvalidArgument, "decompose needs --perm (or --basis)");
  const Permutation pi = parse_permutation(a.perm);
  const Profile prof = profile(pi, a.k);
  std::vector<QNum> p;
  Rational norm2;
  for (const auto& d : prof.densities()) {
    p.emplace_back(d);
    norm2 += d * d;
  }
  const int n = pi.size();
  Json rows = Json::array();
  QNum check;
  for (std::size_t col = 0; col < u.size(); ++col) {
    const auto& label = u.labels()[col];
    const auto column = u.column(col);
    const QNum raw = dot(column, p);
    check += raw * raw;
    const double scale = std::pow(static_cast<double>(n), 0.5 * label.block);
    Json row = {{"label", to_json(label)}, {"name", label_text(label)}, {"block", label.block},
                {"raw", to_json(raw)}, {"normalized_approx", raw.to_double() * scale}};
    if (label.block % 2 == 0) {
      Rational factor(1);
      for (int e = 0; e < label.block / 2; ++e) factor *= n;
      row["normalized"] = to_json(raw * factor);
    } else {
      row["normalized"] = nullptr;
    }
    rows.push_back(row);
  }
  if (check != QNum(norm2)) {
    throw Error(ErrorKind::HomomorphismViolation, "basis is not orthonormal: Parseval check failed");
  }
  if (o.format == Format::Json) {
    Json doc = envelope("decompose");
    doc.update({{"n", n}, {"k", a.k}, {"exact", true}, {"normalization", "n^(r/2)"},
                {"components", rows}, {"norm_squared", to_json(norm2)}});
    emit(o, doc);
  } else {
    const char sep = o.format == Format::Csv ? ',' : ' ';
    if (o.format == Format::Csv) o.out << "column,block,raw,normalized_approx\n";
    for (const auto& r : rows) {
      o.out << r["name"].get<std::string>() << sep << r["block"].get<int>() << sep
            << r["raw"].get<std::string>() << sep << r["normalized_approx"].get<double>() << '\n';
    }
    if (o.format == Format::Text) o.out << "norm^2 " << to_string(norm2) << '\n';
  }
  return kOk;
}

// ---- moments ----

struct MomentsArgs {
  int k = 0;
  int n = 0;
  bool cov = false;
};

int cmd_moments(const MomentsArgs& a, const Common& c, Output& o) {
  require_format(o, {Format::Json, Format::Text}, "moments");
  const MomentOptions opts = moment_options(c);
  Json doc = envelope("moments");
  doc["k"] = a.k;
  doc["exact"] = true;
  if (a.n > 0) {
    const RMatrix m = exact_second_moment(a.k, a.n, opts);
    if (o.format == Format::Text) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) o.out << (j ? " " : "") << to_string(m(i, j));
        o.out << '\n';
      }
      return kOk;
    }
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
      rows.push_back(row);
    }
    doc.update({{"n", a.n}, {"second_moment", rows}});
    emit(o, doc);
    return kOk;
  }
  const MomentMatrix m = interpolate_moments(a.k, opts);
  if (o.format == Format::Text) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) o.out << (j ? " | " : "") << m.at(i, j).to_string();
      o.out << '\n';
    }
  } else {
    doc["polynomials"] = to_json(m);
  }
  if (a.cov) {
    const RMatrix cov = cov_limit(m);
    Json rows = Json::array();
    for (std::size_t i = 0; i < cov.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < cov.cols(); ++j) {
        row.push_back(to_json(cov(i, j)));
        if (o.format == Format::Text) o.out << (j ? " " : "cov ") << to_string(cov(i, j));
      }
      if (o.format == Format::Text) o.out << '\n';
      rows.push_back(row);
    }
    doc["cov_limit"] = rows;
  }
  if (o.format == Format::Json) emit(o, doc);
  return kOk;
}

// ---- verify ----

int cmd_verify(int k, const Common& c, Output& o, std::ostream& err) {
  require_format(o, {Format::Json, Format::Text}, "verify");
  if (k >= 5 && !c.long_run) {
    throw Error(ErrorKind::TooLarge, "verify --k " + std::to_string(k) +
                                         " enumerates S_n up to n=" + std::to_string(2 * k) +
                                         " and needs --long");
  }
  if (k >= 6) {
    if (c.generators.empty()) {
      throw Error(ErrorKind::MissingGenerators, "verify --k " + std::to_string(k) +
                                                    " needs a generator file (--generators)");
    }
    err << "warning: k=" << k << " needs exact moments up to n=" << 2 * k
        << "; expect days of CPU time (about 36 h of enumeration plus 36 h of conjugation on a cluster)\n";
  }
  const GeneratorLibrary lib = library_for(c);
  MomentOptions opts = moment_options(c);
  const LimitReport report = verify_diagonalization(k, opts, lib);
  if (o.format == Format::Json) {
    Json doc = envelope("verify");
    doc.update(to_json(report));
    emit(o, doc);
  } else {
    o.out << (report.pass ? "PASS" : "FAIL") << " k=" << k << ": " << report.diagonal.size()
          << " diagonal limits, " << report.offdiagonal_checked << " off-diagonal checked, "
          << report.violations.size() << " violations\n";
    for (const auto& d : report.diagonal) {
      o.out << "  " << label_text(d.label) << " r=" << d.label.block << " " << d.limit.to_string()
            << (d.positive ? "" : " (not positive)") << (d.rational ? "" : " (irrational)") << '\n';
    }
    for (const auto& v : report.violations) {
      o.out << "  violation (" << v.row << "," << v.col << ") blocks " << v.r << "," << v.s << ": "
            << v.detail << '\n';
    }
  }
  return report.pass ? kOk : kVerifyFailed;
}

// ---- mc ----

struct McArgs {
  int k = 0;
  std::vector<int> blocks;
  std::vector<std::string> elements;  // "21:2,2"
  std::string n_grid;
  std::uint64_t samples = 20000;
  std::uint64_t budget = kDefaultPerSampleBudget;
};

struct Direction {
  std::string name;
  std::optional<int> block;
  std::vector<double> values;
};

// Default direction for V_r: the last diagonal matrix element (d,d) of the
// first partition with lambda_1 = k - r.
Direction block_direction(const BasisMatrix& u, int r) {
  for (const auto& lambda : partitions(u.k())) {
    if (u.k() - lambda.first() != r) continue;
    const int d = static_cast<int>(dim(lambda));
    const auto col = u.find_column(lambda, d, d);
    Direction dir{label_text(u.labels()[col]), r, {}};
    for (const auto& q : u.column(col)) dir.values.push_back(q.to_double());
    return dir;
  }
  throw Error(ErrorKind::InvalidArgument, "no block " + std::to_string(r) + " for k=" + std::to_string(u.k()));
}

Direction element_direction(const BasisMatrix& u, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorKind::ParseError, "matrix element must look like 21:2,2, got '" + text + "'");
  }
  const Partition lambda = parse_partition(text.substr(0, colon));
  const auto ij = parse_int_list(text.substr(colon + 1));
  if (ij.size() != 2) throw Error(ErrorKind::ParseError, "matrix element needs i,j in '" + text + "'");
  const auto col = u.find_column(lambda, ij[0], ij[1]);
  Direction dir{label_text(u.labels()[col]), u.labels()[col].block, {}};
  for (const auto& q : u.column(col)) dir.values.push_back(q.to_double());
  return dir;
}

int cmd_mc(const McArgs& a, const Common& c, Output& o) {
  const std::uint64_t seed = resolve_seed(c);
  const GeneratorLibrary lib = library_for(c);
  const BasisMatrix u = build_U(a.k, lib);
  std::vector<Direction> dirs;
  for (int r : a.blocks) dirs.push_back(block_direction(u, r));
  for (const auto& e : a.elements) dirs.push_back(element_direction(u, e));
  if (dirs.empty()) throw Error(ErrorKind::InvalidArgument, "mc needs --block or --element");

  McConfig cfg;
  cfg.k = a.k;
  for (const auto& d : dirs) cfg.directions.push_back(d.values);
  cfg.n_grid = parse_int_list(a.n_grid);
  cfg.samples = a.samples;
  cfg.seed = seed;
  cfg.options.threads = c.threads;
  cfg.options.per_sample_budget = a.budget;
  auto reports = run_scaling(cfg);

  bool ok = true;
  Json list = Json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    reports[i].block = dirs[i].block;
    Json r = to_json(reports[i]);
    r["direction"] = dirs[i].name;
    if (dirs[i].block) {
      const bool in_band =
          reports[i].fit && std::abs(reports[i].fit->slope + *dirs[i].block) <= kSlopeBand;
      r["within_band"] = in_band;
      ok = ok && in_band;
    }
    list.push_back(r);
  }
  if (o.format == Format::Json) {
    Json doc = envelope("mc");
    doc.update({{"seed", seed}, {"band", kSlopeBand}, {"reports", list}});
    emit(o, doc);
  } else if (o.format == Format::Csv) {
    write_scaling_csv(o.out, reports);
  } else {
    o.out << "seed " << seed << '\n';
    for (std::size_t i = 0; i < reports.size(); ++i) {
      o.out << dirs[i].name << ":";
      for (const auto& p : reports[i].points) o.out << " n=" << p.n << " m2=" << p.second_moment;
      if (reports[i].fit) {
        o.out << " slope=" << reports[i].fit->slope << " ci=[" << reports[i].fit->ci_low << ","
              << reports[i].fit->ci_high << "]";
      } else {
        o.out << " slope=n/a";
      }
      o.out << '\n';
    }
  }
  return ok ? kOk : kVerifyFailed;
}

// ---- test ----

struct TestArgs {
  std::string csv;
  std::string perm;
  std::string statistic = "tau";
  std::string delimiter = ",";
  std::string ties = "error";
  std::uint64_t null_samples = 0;
};

Permutation permutation_input(const std::string& perm, const std::string& csv, char delimiter,
                              TiePolicy ties, std::uint64_t seed, bool* ties_broken) {
  if (!perm.empty() && !csv.empty()) throw Error(ErrorKind::InvalidArgument, "give --perm or --csv, not both");
  if (!perm.empty()) return parse_permutation(perm);
  if (csv.empty()) throw Error(ErrorKind::InvalidArgument, "input required: --perm or --csv");
  const auto points = read_points(csv, delimiter);
  RankedSample ranked = ranks_to_perm(points, ties, seed);
  if (ties_broken != nullptr) *ties_broken = ranked.ties_broken;
  return ranked.perm;
}

int cmd_test(const TestArgs& a, const Common& c, Output& o) {
  require_format(o, {Format::Json, Format::Text}, "test");
  if (a.delimiter.size() != 1) throw Error(ErrorKind::InvalidArgument, "delimiter must be one character");
  TiePolicy policy;
  if (a.ties == "error") {
    policy = TiePolicy::Error;
  } else if (a.ties == "random") {
    policy = TiePolicy::RandomBreak;
  } else {
    throw Error(ErrorKind::InvalidArgument, "ties must be 'error' or 'random'");
  }
  const Statistic stat = parse_statistic(a.statistic);
  const bool randomized = a.null_samples > 0 || policy == TiePolicy::RandomBreak;
  const std::uint64_t seed = randomized ? resolve_seed(c) : c.seed.value_or(0);

  TestResult result;
  bool ties_broken = false;
  const Permutation pi = permutation_input(a.perm, a.csv, a.delimiter[0], policy, seed, &ties_broken);
  result.name = to_string(stat);
  result.n = pi.size();
  result.ties_broken = ties_broken;
  result.value = statistic_value(stat, pi);
  if (a.null_samples > 0) {
    result.p_value = null_pvalue(stat, result.value, result.n, a.null_samples, split_seed(seed, 1), c.threads);
  }
  if (o.format == Format::Json) {
    Json doc = envelope("test");
    doc.update(to_json(result));
    if (randomized) doc["seed"] = seed;
    emit(o, doc);
  } else {
    o.out << result.name << " = " << result.value.to_string() << " (" << result.value.to_double()
          << "), n = " << result.n << '\n';
    if (result.ties_broken) o.out << "ties broken at random, seed " << seed << '\n';
    if (result.p_value) {
      o.out << "p = " << result.p_value->p << " (" << result.p_value->samples << " null samples, seed "
            << seed << ")\n";
    }
  }
  return kOk;
}

// ---- quasirandom ----

int cmd_quasirandom(const std::string& perm, const std::string& csv, const std::string& delimiter,
                    const Common& c, Output& o) {
  require_format(o, {Format::Json, Format::Text}, "quasirandom");
  if (delimiter.size() != 1) throw Error(ErrorKind::InvalidArgument, "delimiter must be one character");
  const Permutation pi =
      permutation_input(perm, csv, delimiter[0], TiePolicy::Error, c.seed.value_or(0), nullptr);
  const QNum score = quasirandom_score(pi);
  const double magnitude = std::abs(score.to_double());
  if (o.format == Format::Json) {
    Json doc = envelope("quasirandom");
    doc.update({{"n", pi.size()}, {"exact", true}, {"score", to_json(score)}, {"abs_score", magnitude},
                {"abs_score_times_n", magnitude * pi.size()}});
    emit(o, doc);
  } else {
    o.out << "score " << score.to_string() << " |score| " << magnitude << " n|score| " << magnitude * pi.size()
          << '\n';
  }
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge:
      return kBudgetExceeded;
    case ErrorKind::HomomorphismViolation:
    case ErrorKind::DegreeViolation:
    case ErrorKind::Diverges:
      return kVerifyFailed;
    default:
      return kInputError;
  }
}

void add_common(CLI::App* sub, Common& c, bool generators, bool moments) {
  sub->add_option("--format", c.format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1U, 1024U));
  if (generators) sub->add_option("--generators", c.generators, "Generator plug-in file (JSON)");
  if (moments) {
    sub->add_flag("--long", c.long_run, "Allow multi-hour enumerations (n up to 12)");
    sub->add_option("--cache-dir", c.cache_dir, std::string("Cache for exact moments (default $") + kCacheEnv + ")");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern profiles of permutations and their spectral decomposition", "permpat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;
  std::uint64_t seed_value = 0;

  ProfileArgs profile_args;
  auto* profile_cmd = app.add_subcommand("profile", "Pattern counts and densities of a permutation");
  profile_cmd->add_option("--perm", profile_args.perm, "Permutation in one-line notation")->required();
  profile_cmd->add_option("--k", profile_args.k, "Pattern size")->required();
  profile_cmd->add_option("--sample", profile_args.sample, "Estimate from this many random k-subsets");
  profile_cmd->add_option("--seed", seed_value, "Random seed");
  add_common(profile_cmd, common, false, false);

  DecomposeArgs decompose_args;
  auto* decompose_cmd = app.add_subcommand("decompose", "Projections of the k-profile onto the U_k basis");
  decompose_cmd->add_option("--perm", decompose_args.perm, "Permutation in one-line notation");
  decompose_cmd->add_option("--k", decompose_args.k, "Pattern size")->required();
  decompose_cmd->add_flag("--basis", decompose_args.basis, "Export U_k itself");
  add_common(decompose_cmd, common, true, false);

  MomentsArgs moments_args;
  auto* moments_cmd = app.add_subcommand("moments", "Exact second moments of the k-profile");
  moments_cmd->add_option("--k", moments_args.k, "Pattern size")->required();
  moments_cmd->add_option("--n", moments_args.n, "Host size; omit for the polynomial in n");
  moments_cmd->add_flag("--cov", moments_args.cov, "Also print lim n cov[P]");
  add_common(moments_cmd, common, false, true);

  int verify_k = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Check that U_k diagonalizes the normalized moments");
  verify_cmd->add_option("--k", verify_k, "Pattern size")->required();
  add_common(verify_cmd, common, true, true);

  McArgs mc_args;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo scaling of projection second moments");
  mc_cmd->add_option("--k", mc_args.k, "Pattern size")->required();
  mc_cmd->add_option("--block", mc_args.blocks, "Direction from block V_r (repeatable)");
  mc_cmd->add_option("--element", mc_args.elements, "Matrix element such as 21:2,2 (repeatable)");
  mc_cmd->add_option("--n", mc_args.n_grid, "Comma-separated host sizes")->required();
  mc_cmd->add_option("--samples", mc_args.samples, "Permutations per host size");
  mc_cmd->add_option("--budget", mc_args.budget, "Maximum k-subsets per sample");
  mc_cmd->add_option("--seed", seed_value, "Random seed");
  add_common(mc_cmd, common, true, false);

  TestArgs test_args;
  auto* test_cmd = app.add_subcommand("test", "Rank statistic of paired data, with a null p-value");
  test_cmd->add_option("--csv", test_args.csv, "Two-column CSV file ('-' for stdin)");
  test_cmd->add_option("--perm", test_args.perm, "Use this permutation instead of data");
  test_cmd->add_option("--statistic", test_args.statistic, "tau, rho, delta, D, B or BD");
  test_cmd->add_option("--delimiter", test_args.delimiter, "CSV delimiter");
  test_cmd->add_option("--ties", test_args.ties, "error (default) or random");
  test_cmd->add_option("--null-samples", test_args.null_samples, "Null permutations for the p-value");
  test_cmd->add_option("--seed", seed_value, "Random seed");
  add_common(test_cmd, common, false, false);

  std::string q_perm, q_csv, q_delim = ",";
  auto* quasi_cmd = app.add_subcommand("quasirandom", "Quasirandomness score <R^22_22, P_4>");
  quasi_cmd->add_option("--perm", q_perm, "Permutation in one-line notation");
  quasi_cmd->add_option("--csv", q_csv, "Two-column CSV file ('-' for stdin)");
  quasi_cmd->add_option("--delimiter", q_delim, "CSV delimiter");
  add_common(quasi_cmd, common, false, false);

  std::vector<const char*> argv{"permpat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  for (auto* sub : {profile_cmd, mc_cmd, test_cmd}) {
    if (sub->parsed() && sub->count("--seed") > 0) common.seed = seed_value;
  }

  try {
    Output o{out, parse_format(common.format)};
    if (*profile_cmd) return cmd_profile(profile_args, common, o);
    if (*decompose_cmd) return cmd_decompose(decompose_args, common, o);
    if (*moments_cmd) return cmd_moments(moments_args, common, o);
    if (*verify_cmd) return cmd_verify(verify_k, common, o, err);
    if (*mc_cmd) return cmd_mc(mc_args, common, o);
    if (*test_cmd) return cmd_test(test_args, common, o);
    if (*quasi_cmd) return cmd_quasirandom(q_perm, q_csv, q_delim, common, o);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace permpat::cli
