#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "permpat/moments.hpp"
#include "permpat/montecarlo.hpp"
#include "permpat/polynomial.hpp"
#include "permpat/qfield.hpp"
#include "permpat/rep.hpp"
#include "permpat/stats.hpp"

namespace permpat {

using Json = nlohmann::json;

/// Exact numbers travel as strings: "19/54", "1/2+1/3√6".
Json to_json(const QNum& q);
Json to_json(const Rational& q);
/// Accepts a string (QNum syntax) or an integer.
QNum qnum_from_json(const Json& j);

/// Coefficient arrays, lowest degree first.
Json to_json(const RatPoly& p);
Json to_json(const QPoly& p);

Json to_json(const ColumnLabel& label);
Json to_json(const LimitReport& report);
Json to_json(const MomentMatrix& m);
Json to_json(const BasisMatrix& u);
Json to_json(const ScalingReport& report);
Json to_json(const TestResult& result);

/// Rows are S_k in lexicographic order, columns labelled lambda(i,j).
void write_basis_csv(std::ostream& out, const BasisMatrix& u);
/// One row per (direction, n).
void write_scaling_csv(std::ostream& out, const std::vector<ScalingReport>& reports);

/// Generator plug-in files: a JSON object or array of objects
///   {"k": 6, "lambda": [3,2,1], "tau": [["1/2", ...], ...], "rho": [[...]]}
/// Entries use the QNum string syntax. Pairs are added to `library`.
/// Throws ParseError / IoError; the homomorphism is checked on expansion.
void load_generator_file(const std::filesystem::path& path, GeneratorLibrary& library);
void load_generators_json(const Json& doc, GeneratorLibrary& library);

}  // namespace permpat
