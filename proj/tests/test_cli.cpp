#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using rootbias::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("bias command") {
  auto r = run({"bias", "--field", "Q", "--weights", "2", "--level", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "B = 1\n"));
  CHECK(contains(r.out, "MATCH"));

  r = run({"bias", "--field", "Qsqrt2", "--weights", "1,1", "--level", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "B = 13\n"));
  CHECK(contains(r.out, "closed = 13\n"));
}

TEST_CASE("bias command exit codes") {
  CHECK(run({"bias", "--field", "Q", "--weights", "1", "--level", "1"}).code == 2);
  CHECK(run({"bias", "--field", "Q", "--weights", "1", "--level", "12"}).code == 2);
  CHECK(run({"bias", "--field", "Qsqrt2", "--weights", "1", "--level", "3"}).code == 2);
  CHECK(run({"bias", "--field", "Qsqrt3", "--weights", "1,1", "--level", "3"}).code == 2);
  CHECK(run({"bias", "--field", "Q", "--weights", "1", "--level", "abc"}).code == 2);
  CHECK(run({"bias", "--field", "Qsqrt2", "--weights", "1,1", "--level", "3+sqrt2"}).code == 3);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  // Over Q(sqrt 5) at N = 3 mod 8 the closed form disagrees with the general formula.
  const auto r = run({"bias", "--field", "Qsqrt5", "--weights", "1,1", "--level", "11"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "MISMATCH"));
}

TEST_CASE("table reproduces the small-level patterns over Q") {
  const auto r = run({"table", "--field", "Q", "--weights", "1..8", "--levels", "2..3"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 17);
  CHECK(ls[0] == "field,level,weights,B,closed,verdict,terms,status");
  const int expected2[] = {0, 1, 1, 0, 0, 1, 1, 0};
  const int expected3[] = {1, 2, 1, 1, 2, 1, 1, 2};
  for (int k = 1; k <= 8; ++k) {
    CHECK(ls[k] == "Q,2," + std::to_string(k) + "," + std::to_string(expected2[k - 1]) + "," +
                       std::to_string(expected2[k - 1]) + ",MATCH,2,ok");
    CHECK(ls[8 + k] == "Q,3," + std::to_string(k) + "," + std::to_string(expected3[k - 1]) + "," +
                           std::to_string(expected3[k - 1]) + ",MATCH,2,ok");
  }
}

TEST_CASE("table over Q(sqrt 5) at level 2") {
  const auto r = run({"table", "--field", "Qsqrt5", "--weights", "(1,1)..(3,3)", "--levels", "2"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 10);
  for (size_t i = 1; i < ls.size(); ++i) CHECK(contains(ls[i], ",MATCH,"));
  CHECK(contains(ls[1], "Qsqrt5,2,1;1,1,1,"));
  CHECK(contains(ls[2], "Qsqrt5,2,1;2,2,2,"));
}

TEST_CASE("table limits and ordering") {
  const auto empty = run({"table", "--field", "Q", "--weights", "1", "--levels", "5..3"});
  CHECK(empty.code == 0);
  CHECK(lines(empty.out).size() == 1);
  CHECK(run({"table", "--field", "Q", "--weights", "1", "--levels", "2..201"}).code == 0);
  CHECK(run({"table", "--field", "Q", "--weights", "1", "--levels", "2..202"}).code == 2);
  CHECK(run({"table", "--field", "Q", "--weights", "1", "--levels", "2..30", "--format", "xml"}).code == 2);
  const auto a = run({"table", "--field", "Q", "--weights", "1..3", "--levels", "2..40"});
  const auto b = run({"table", "--field", "Q", "--weights", "1..3", "--levels", "2..40", "--threads", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("classnumber command") {
  auto r = run({"classnumber", "--disc", "-20"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  CHECK(run({"classnumber", "--disc", "-12"}).code == 2);
  CHECK(run({"classnumber", "--disc", "-1000004"}).code == 2);
  CHECK(run({"classnumber", "--disc", "1"}).code == 2);
}

TEST_CASE("zagier command") {
  const auto r = run({"zagier", "--delta", "5", "--s", "2", "--truncate", "100000", "--compare-factored", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["relative_error"].get<double>() < 1e-3);
  CHECK(j["result"]["verdict"] == "MATCH");
  CHECK(run({"zagier", "--delta", "7", "--s", "2"}).code == 2);
  CHECK(run({"zagier", "--delta", "-20", "--s", "1", "--field", "Qsqrt5"}).code == 0);
}

TEST_CASE("weights and dn-series commands") {
  auto r = run({"weights", "--q", "2", "--r", "1", "--eta", "-1", "--s", "0.5", "--a", "1", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["unram_local_factor"]["re"].get<double>() == doctest::Approx(2.0));
  CHECK(run({"weights", "--q", "2", "--r", "1", "--eta", "5", "--s", "0.5"}).code == 2);
  r = run({"dn-series", "--level", "3", "--s", "2", "--terms", "50", "--json"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["summands"].get<int>() + j["result"]["skipped"].get<int>() == 50);
  CHECK(run({"dn-series", "--level", "4", "--s", "2"}).code == 2);
}

TEST_CASE("verify-supercuspidal command") {
  const auto r = run({"verify-supercuspidal", "--q", "3,5,7"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls.back() == "ALL PASS");
  for (size_t i = 0; i + 1 < ls.size(); ++i) CHECK(contains(ls[i], " PASS ("));
  CHECK(run({"verify-supercuspidal", "--q", "4"}).code == 2);
}

TEST_CASE("JSON records round-trip and are deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"bias", "--field", "Q", "--weights", "3", "--level", "3", "--json"},
      {"bias", "--field", "Qsqrt2", "--weights", "2,4", "--level", "3", "--json"},
      {"table", "--field", "Q", "--weights", "1,2", "--levels", "2..12", "--format", "json"},
      {"classnumber", "--disc", "229", "--json"},
      {"zagier", "--delta", "-48", "--s", "1.5", "--truncate", "1000", "--json"},
      {"weights", "--q", "9", "--r", "1", "--eta", "0", "--s", "0.5", "--json"},
  };
  for (const auto& c : commands) {
    const auto a = run(c), b = run(c);
    CHECK(a.out == b.out);
    const auto j = nlohmann::ordered_json::parse(a.out);
    CHECK(j.dump(2) + "\n" == a.out);
    CHECK(j.contains("command"));
    CHECK(j.contains("inputs"));
    CHECK(j.contains("result"));
    CHECK(j["provenance"]["library"] == "rootbias");
    CHECK(j["provenance"]["precision"]["significant_digits"] == 15);
  }
}
