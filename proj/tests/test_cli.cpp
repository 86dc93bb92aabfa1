#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "r2r/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const fs::path capture = fs::temp_directory_path() / ("r2r_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  const std::string cmd = env + " " + R2R_CLI_PATH + " " + args + " > " + capture.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(capture);
  std::ostringstream ss;
  ss << in.rdbuf();
  fs::remove(capture);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, ss.str()};
}

}  // namespace

TEST_CASE("spectrum command") {
  const Run r = run("spectrum --n 2");
  REQUIRE(r.status == 0);
  const auto doc = r2r::io::Json::parse(r.out);
  CHECK(doc["metadata"]["command"] == "spectrum");
  REQUIRE(doc["entries"].size() == 2);
  CHECK(doc["entries"][0]["value"] == "1/1");
  CHECK(doc["entries"][0]["multiplicity"] == "1");
  CHECK(doc["entries"][1]["value"] == "0/1");
  CHECK(doc["entries"][1]["multiplicity"] == "1");

  const Run csv = run("spectrum --evaluation 2,1 --format csv");
  CHECK(csv.status == 0);
  CHECK(csv.out.find("# evaluation=[2,1]") != std::string::npos);
  CHECK(csv.out.find("\"[2,1]\",\"[1,1]\",4,9,1") != std::string::npos);
}

TEST_CASE("bounds command reports the cutoff time") {
  const Run r = run("bounds --n 1000 --c 2 --t-max 0 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.find("# t_star=6697.655275757586") != std::string::npos);
  const Run small = run("bounds --n 4 --c 1 --t-max 3");
  const auto doc = r2r::io::Json::parse(small.out);
  CHECK(doc["rows"].size() == 4);
  CHECK(doc["rows"][0]["l2_exact"] == 23.0);
  CHECK(doc["rows"][0]["tv_exact"].get<double>() == doctest::Approx(23.0 / 24));
}

TEST_CASE("verify, profile and simulate commands") {
  const Run v = run("verify --suite spectra --n-max 5");
  CHECK(v.status == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(v.out.find("checks passed") != std::string::npos);

  const Run p = run("profile --n 3 --t-max 2 --format csv");
  CHECK(p.status == 0);
  CHECK(p.out.find("t,tv,chi2\n0,0.8333333333333334,5\n") != std::string::npos);

  const Run a = run("simulate --n 4 --t 3 --trials 5000 --seed 9");
  const Run b = run("simulate --n 4 --t 3 --trials 5000 --seed 9");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto doc = r2r::io::Json::parse(a.out);
  CHECK(doc["metadata"]["parameters"]["seed"] == "9");
  CHECK(doc["rows"].size() == 24);
}

TEST_CASE("exit codes") {
  CHECK(run("spectrum --n 0").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("verify --suite nope").status == 2);
  CHECK(run("spectrum --evaluation 3").status == 2);
  CHECK(run("profile --n 8 --t-max 1").status == 2);
  CHECK(run("bounds --n 2 --c 1").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("output directory from the environment") {
  const fs::path dir = fs::temp_directory_path() / ("r2r_outdir_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  const std::string env = "R2R_OUTPUT_DIR=" + dir.string();
  CHECK(run("spectrum --n 3", env).status == 0);
  CHECK(fs::exists(dir / "spectrum_n3.json"));
  CHECK(run("spectrum --n 3 --format csv --output sub/s.csv", env).status == 0);
  CHECK(fs::exists(dir / "sub" / "s.csv"));
  fs::remove_all(dir);
}
