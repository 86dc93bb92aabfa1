#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "r2r/io.hpp"
#include "r2r/oracle/transition_matrix.hpp"
#include "r2r/spectrum.hpp"

using namespace r2r;
using namespace r2r::io;

TEST_CASE("format_double round-trips") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3) == "0.3333333333333333");
  CHECK(format_double(1e-300) == "1e-300");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 10000; ++i) {
    const double x = u(gen) * std::pow(10.0, static_cast<double>(i % 40) - 20);
    CHECK(std::stod(format_double(x)) == x);
  }
}

TEST_CASE("partition parsing and JSON") {
  CHECK(parse_partition("2,1,1") == Partition{2, 1, 1});
  CHECK(parse_partition("[3, 2]") == Partition{3, 2});
  CHECK(parse_partition("[]").empty());
  CHECK_THROWS_AS(parse_partition("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2,,1"), std::invalid_argument);
  CHECK(to_json(Partition{3, 2}).dump() == "[3,2]");
  CHECK(to_json(Partition{}).dump() == "[]");
  CHECK(partition_from_json(Json::parse("[4,1]")) == Partition{4, 1});
}

TEST_CASE("tableau JSON") {
  const StandardTableau t({{1, 3}, {2}});
  CHECK(to_json(t).dump() == "[[1,3],[2]]");
  CHECK(tableau_from_json(to_json(t)) == t);
  CHECK_THROWS_AS(tableau_from_json(Json::parse("[[2,1]]")), std::invalid_argument);
  const SkewTableau s(Partition{4, 3}, Partition{2}, {{0, 0, 2, 5}, {1, 3, 4}});
  CHECK(to_json(s).dump() == R"({"rows":[[null,null,2,5],[1,3,4]],"inner":[2]})");
}

TEST_CASE("spectrum serialization") {
  const RunMetadata meta{"spectrum", {{"n", "2"}}};
  const Json doc = Json::parse(spectrum_json(full_spectrum(2), meta));
  CHECK(doc["metadata"]["command"] == "spectrum");
  CHECK(doc["metadata"]["tool"] == "r2r");
  CHECK(doc["metadata"]["parameters"]["n"] == "2");
  CHECK(doc["n"] == 2);
  CHECK(doc["evaluation"].dump() == "[1,1]");
  REQUIRE(doc["entries"].size() == 2);
  CHECK(doc["entries"][0]["value"] == "1/1");
  CHECK(doc["entries"][0]["multiplicity"] == "1");
  CHECK(doc["entries"][1]["num"] == 0);
  CHECK(doc["entries"][1]["den"] == 1);

  const Spectrum three = full_spectrum(3);
  CHECK(Json::parse(spectrum_json(three, meta))["entries"].size() == 4);
  CHECK(Json::parse(spectrum_json(three, meta, true))["entries"].size() == three.entries.size());

  const std::string csv = spectrum_csv(three, meta);
  CHECK(csv.rfind("# tool=r2r\n# version=", 0) == 0);
  CHECK(csv.find("lambda,mu,num,den,multiplicity\n") != std::string::npos);
  CHECK(csv.find("\"[2,1]\",\"[1,1]\",4,9,2\n") != std::string::npos);
  CHECK(spectrum_csv(full_spectrum(8), meta) == spectrum_csv(full_spectrum(8), meta));
  // Big multiplicities survive as exact decimal strings.
  const Json big = Json::parse(spectrum_json(full_spectrum(20), meta));
  bool has_long = false;
  for (const auto& e : big["entries"]) has_long = has_long || e["multiplicity"].get<std::string>().size() > 12;
  CHECK(has_long);
}

TEST_CASE("tables and matrices") {
  Table table{{"t", "value", "note"}, {{std::int64_t{0}, 0.25, std::string("a")}, {std::int64_t{1}, 1e-20, std::string("b")}}};
  const RunMetadata meta{"bounds", {{"n", "5"}}};
  const std::string csv = table_csv(table, meta, Json{{"t_star", 1.5}, {"n", 5}});
  CHECK(csv == "# tool=r2r\n# version=" R2R_VERSION "\n# command=bounds\n# n=5\n# t_star=1.5\n# n=5\nt,value,note\n0,0.25,a\n1,1e-20,b\n");
  const Json doc = Json::parse(table_json(table, meta, Json{{"t_star", 1.5}}));
  CHECK(doc["t_star"] == 1.5);
  CHECK(doc["rows"][1]["value"] == 1e-20);
  CHECK(doc["rows"][0]["note"] == "a");

  Table inf{{"v"}, {{std::numeric_limits<double>::infinity()}}};
  CHECK(Json::parse(table_json(inf, meta))["rows"][0]["v"] == "inf");

  const auto m = oracle::build_r2r_matrix(2);
  CHECK(matrix_csv(m) == "0.5,0.5\n0.5,0.5\n");
  const Json mj = Json::parse(matrix_json(m));
  CHECK(mj["denominator"] == 4);
  CHECK(mj["numerators"].dump() == "[[2,2],[2,2]]");
}
