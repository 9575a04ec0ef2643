#include <doctest.h>

#include "einsu/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace einsu;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "einsu");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("einsu_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("solve (3,2,3)") {
    const Run r = run({"solve", "--k1", "3", "--k", "2", "--p", "3"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["schema"] == "einsu/1");
    CHECK(j["expectation"]["met"] == true);
    CHECK(j["case2_non_isometric"] == true);
    int case2 = 0;
    for (const auto& s : j["solutions"]) {
      if (s["case"] != "Case2") continue;
      ++case2;
      CHECK(s["classification"] == "NonNaturallyReductive");
      CHECK(s["positivity_certified"] == true);
      CHECK(s["x2_below_one"] == true);
      CHECK(s["x12"]["exact"].is_null());
      const BigRational lo = parse_rational(s["x12"]["interval"][0].get<std::string>());
      const BigRational hi = parse_rational(s["x12"]["interval"][1].get<std::string>());
      CHECK(lo < hi);
      CHECK(hi - lo < make_rational(1, 1000000));
    }
    CHECK(case2 == 2);
    CHECK(run({"solve", "--k1", "3", "--k", "2", "--p", "3"}).out == r.out);
  }

  TEST_CASE("solve (2,2,3) as CSV") {
    const Run r = run({"solve", "--k1", "2", "--k", "2", "--p", "3", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("NaturallyReductive(i)") != std::string::npos);
    CHECK(r.out.find("NonNaturallyReductive") != std::string::npos);
    CHECK(r.out.rfind("k1,k,p,N,case,", 0) == 0);
  }

  TEST_CASE("solve tables and explore") {
    const Run r = run({"solve", "--k1", "3", "--k", "2", "--p", "3", "--tables", "--explore", "5"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["f3"]["degree"] == 16);
    CHECK(j["q1"]["coefficients"] == Json::array({"108", "-168", "52"}));
    CHECK(j.contains("explore"));
  }

  TEST_CASE("usage errors") {
    CHECK(run({"solve", "--k1", "3", "--k", "2", "--p", "2"}).code == 2);
    CHECK(run({"solve", "--k1", "3", "--k", "2"}).code == 2);
    CHECK(run({"solve", "--k1", "3", "--k", "2", "--p", "3", "--precision", "32"}).code == 2);
    CHECK(run({"solve", "--k1", "3", "--k", "2", "--p", "3", "--format", "xml"}).code == 2);
    CHECK(run({"sweep", "--k1", "5..2", "--k", "2", "--p", "3"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
  }

  TEST_CASE("verify") {
    for (const std::string part : {"2,2,2", "3,2,2", "2,2,2,2"}) {
      const Run r = run({"verify", "--partition", part, "--trials", "3"});
      CHECK_MESSAGE(r.code == 0, r.out);
      const Json j = Json::parse(r.out);
      for (const auto& c : j["checks"]) CHECK_MESSAGE(c["status"] == "PASS", c.dump());
    }
    CHECK(run({"verify", "--partition", "4,4,4"}).code == 2);
    CHECK(run({"verify", "--partition", "3"}).code == 2);
    CHECK(run({"verify", "--partition", "2,x"}).code == 2);
  }

  TEST_CASE("certify") {
    Run r = run({"certify", "--k1", "48", "--k", "2", "--p", "3"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["large_k1"]["status"] == "PASS");
    CHECK(j["large_k1"]["beta"] == "660/73");
    CHECK(j["monotonicity"]["status"] == "PASS");
    r = run({"certify", "--k1", "4", "--k", "2", "--p", "3"});
    REQUIRE(r.code == 0);
    j = Json::parse(r.out);
    CHECK(j["large_k1"]["status"] == "not-applicable");
  }

  TEST_CASE("sweep CSV and JSON agree, and resume") {
    const Run js = run({"sweep", "--k1", "2..6", "--k", "2..3", "--p", "3..4", "--format", "json"});
    const Run cs = run({"sweep", "--k1", "2..6", "--k", "2..3", "--p", "3..4", "--format", "csv"});
    REQUIRE(js.code == 0);
    REQUIRE(cs.code == 0);
    const Json j = Json::parse(js.out);
    REQUIRE(j["rows"].size() == 20);
    std::istringstream lines(cs.out);
    std::string header, line;
    std::getline(lines, header);
    int n = 0;
    while (std::getline(lines, line)) {
      const auto& row = j["rows"][static_cast<std::size_t>(n++)];
      CHECK(line.rfind(row["k1"].get<std::string>() + "," + row["k"].get<std::string>() + "," +
                           row["p"].get<std::string>() + ",",
                       0) == 0);
      CHECK(line.find(row["case2_x12"].get<std::string>()) != std::string::npos);
    }
    CHECK(n == 20);

    const auto path = temp_path("sweep.csv");
    std::filesystem::remove(path);
    const Run first = run({"sweep", "--k1", "2..3", "--k", "2", "--p", "3", "--format", "csv", "-o", path.string()});
    REQUIRE(first.code == 0);
    const std::string text = read_file(path);
    const Run again =
        run({"sweep", "--k1", "2..4", "--k", "2", "--p", "3", "--format", "csv", "-o", path.string()});
    REQUIRE(again.code == 0);
    CHECK(again.err.find("resumed 2 row(s)") != std::string::npos);
    const std::string extended = read_file(path);
    CHECK(extended.rfind(text, 0) == 0);
    CHECK(extended.size() > text.size());
    std::filesystem::remove(path);
  }

  TEST_CASE("markdown output") {
    const Run r = run({"solve", "--k1", "3", "--k", "2", "--p", "3", "--format", "md"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("# solve (3,2,3)\n", 0) == 0);
    CHECK(r.out.find("\n| k1 | k | p |") != std::string::npos);
  }

  TEST_CASE("EINSU_PRECISION overrides the flag") {
    ::setenv("EINSU_PRECISION", "128", 1);
    const Run r = run({"solve", "--k1", "3", "--k", "2", "--p", "3", "--precision", "512"});
    ::setenv("EINSU_PRECISION", "16", 1);
    const Run bad = run({"solve", "--k1", "3", "--k", "2", "--p", "3"});
    ::unsetenv("EINSU_PRECISION");
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["precision_bits"] == 128);
    CHECK(bad.code == 2);
  }

  TEST_CASE("ranges") {
    CHECK(parse_range("3").lo == 3);
    CHECK(parse_range("3").hi == 3);
    CHECK(parse_range("2..7").hi == 7);
    CHECK_THROWS_AS(parse_range("a..b"), ParameterError);
  }
}
