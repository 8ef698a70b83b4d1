#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "permpat/error.hpp"
#include "permpat/io.hpp"

using namespace permpat;

namespace {

Json generators_as_json(int k) {
  Json list = Json::array();
  for (const auto& lambda : partitions(k)) {
    const GeneratorPair g = load_generators(k, lambda);
    auto matrix = [](const QMatrix& m) {
      Json rows = Json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(row);
      }
      return rows;
    };
    list.push_back({{"k", k}, {"lambda", lambda.parts}, {"tau", matrix(g.tau)}, {"rho", matrix(g.rho)}});
  }
  return list;
}

}  // namespace

TEST(Json, ExactNumbersAreStrings) {
  EXPECT_EQ(to_json(parse_qnum("1/2+1/3√6")), "1/2+1/3√6");
  EXPECT_EQ(qnum_from_json(Json("19/54")), QNum(Rational(19, 54)));
  EXPECT_EQ(qnum_from_json(Json(3)), QNum(3L));
  EXPECT_THROW(qnum_from_json(Json(0.5)), Error);
  const RatPoly p(std::vector<Rational>{Rational(5, 36), Rational(-5, 72), Rational(1, 8)});
  EXPECT_EQ(to_json(p), Json::parse(R"(["5/36","-5/72","1/8"])"));
}

TEST(Json, LimitReportShape) {
  const Json j = to_json(verify_diagonalization(2));
  EXPECT_EQ(j["result"], "PASS");
  EXPECT_EQ(j["diagonal"][1]["limit"], "2/9");
  EXPECT_TRUE(j["offdiagonal_violations"].empty());
}

TEST(GeneratorFiles, RoundTripReproducesBasis) {
  const auto path = std::filesystem::temp_directory_path() / "permpat_generators_k4.json";
  {
    std::ofstream out(path);
    out << generators_as_json(4).dump();
  }
  GeneratorLibrary lib;
  load_generator_file(path, lib);
  EXPECT_TRUE(lib.covers(4));
  EXPECT_EQ(build_U(4, lib).matrix(), build_U(4).matrix());
  std::filesystem::remove(path);
}

TEST(GeneratorFiles, RejectsMalformedInput) {
  GeneratorLibrary lib;
  EXPECT_THROW(load_generators_json(Json::parse(R"({"k":3,"lambda":[2,1],"tau":[["1"]],"rho":[["1"]]})"), lib),
               Error);
  EXPECT_THROW(load_generator_file("/nonexistent/generators.json", lib), Error);
  Json bad = generators_as_json(3);
  bad[1]["rho"] = bad[1]["tau"];
  load_generators_json(bad, lib);
  try {
    build_U(3, lib);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HomomorphismViolation);
  }
}

TEST(Csv, BasisExport) {
  std::ostringstream out;
  write_basis_csv(out, build_U(2));
  EXPECT_EQ(out.str(), "sigma,2(1,1),11(1,1)\n12,1/2√2,1/2√2\n21,1/2√2,-1/2√2\n");
}
