#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "dtriple/cli.hpp"
#include "dtriple/records.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dtriple::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

dtriple::Record parse(const std::string& line) { return dtriple::Record::parse(line); }

}  // namespace

TEST_CASE("verify golden record") {
  const auto r = run({"verify", "--triple", "1,3,8", "--n", "1"});
  CHECK(r.code == dtriple::cli::kExitOk);
  CHECK(r.out ==
        "{\"ring\":\"z\",\"provenance\":\"manual\",\"elements\":[\"1\",\"3\",\"8\"],\"certificates\":[{\"n\":\"1\","
        "\"roots\":[{\"pair\":[0,1],\"root\":\"2\"},{\"pair\":[0,2],\"root\":\"3\"},{\"pair\":[1,2],\"root\":\"5\"}]}]}"
        "\n");
  CHECK(r.err.empty());
}

TEST_CASE("verify text format") {
  const auto r = run({"--format", "text", "verify", "--triple", "1,3,8", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "{1, 3, 8} over Z [manual]\n  D(1): a1a2+n = (2)^2, a1a3+n = (3)^2, a2a3+n = (5)^2\n");
  // Global option after the subcommand.
  CHECK(run({"verify", "--triple", "1,3,8", "--n", "1", "--format", "text"}).out == r.out);
}

TEST_CASE("Gaussian verify") {
  const auto r = run({"verify", "--ring", "zi", "--triple", "8-4i,2-2i,-40+180i", "--n", "-1"});
  REQUIRE(r.code == 0);
  const auto j = parse(r.out);
  CHECK(j["ring"] == "zi");
  CHECK(j["elements"][2]["im"] == "180");
  CHECK(j["certificates"][0]["roots"][0]["root"]["re"] == "4");
  CHECK(j["certificates"][0]["roots"][0]["root"]["im"] == "-3");
}

TEST_CASE("output is byte-stable across runs") {
  const std::vector<std::vector<std::string>> cmds = {
      {"theorem1", "--n", "4", "--x", "3", "--count", "2"},
      {"spectrum", "--triple", "4,12,420", "--bound", "1000", "--workers", "3"},
      {"corollary", "--m", "3"},
      {"gaussian-example", "--m", "-2"},
      {"pell", "--d", "13", "--n", "-36", "--base", "17,5", "--step", "2", "--count", "3"},
  };
  for (const auto& c : cmds) {
    const auto a = run(c);
    const auto b = run(c);
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);
  }
  // Worker count does not change the result.
  CHECK(run({"spectrum", "--triple", "4,12,420", "--bound", "1000", "--workers", "1"}).out ==
        run({"spectrum", "--triple", "4,12,420", "--bound", "1000", "--workers", "7"}).out);
}

TEST_CASE("theorem1 emits the Pell step") {
  const auto r = run({"theorem1", "--n", "3", "--x", "4"});
  REQUIRE(r.code == 0);
  const auto j = parse(r.out);
  CHECK(j["elements"][2] == "66975973693222");
  CHECK(j["certificates"][1]["n"] == "1121445263038322515826332803");
  CHECK(j["pell"]["z"] == "29507417");
  CHECK(j["provenance"] == "theorem1");
}

TEST_CASE("pell") {
  auto r = run({"pell", "--d", "13"});
  REQUIRE(r.code == 0);
  CHECK(parse(r.out)["x1"] == "649");
  r = run({"--format", "text", "pell", "--d", "5"});
  CHECK(r.out == "x1 = 9, y1 = 4 (D = 5)\n");
  CHECK(run({"pell", "--d", "9"}).code == dtriple::cli::kExitUsage);
  CHECK(run({"pell", "--d", "5", "--n", "-15", "--base", "8,4"}).code == dtriple::cli::kExitUsage);
}

TEST_CASE("extend and equiv") {
  auto r = run({"extend", "--triple", "4,12,420", "--n", "1"});
  REQUIRE(r.code == 0);
  const auto j = parse(r.out);
  std::vector<std::string> got;
  for (const auto& c : j["certificates"]) got.push_back(c["n"]);
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"1", "3796", "40756", "436"});

  r = run({"equiv", "--ring", "zi", "--a", "4i,12i,420i", "--na", "-1", "--b", "4,12,420", "--nb", "1"});
  REQUIRE(r.code == 0);
  CHECK(parse(r.out)["u"]["im"] == "1");
  r = run({"equiv", "--ring", "zi", "--a", "5,13,-480", "--na", "-1", "--b", "4,12,420", "--nb", "1"});
  CHECK(r.code == dtriple::cli::kExitFailed);
}

TEST_CASE("exit codes") {
  using namespace dtriple::cli;
  auto r = run({"verify", "--triple", "1,3,8", "--n", "2"});
  CHECK(r.code == kExitFailed);
  CHECK(r.out.empty());
  CHECK(r.err.find("not a square") != std::string::npos);

  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"verify", "--triple", "1,3,x", "--n", "1"}).code == kExitUsage);
  CHECK(run({"verify", "--triple", "1,1,8", "--n", "1"}).code == kExitUsage);
  CHECK(run({"verify", "--ring", "q", "--triple", "1,3,8", "--n", "1"}).code == kExitUsage);
  CHECK(run({"corollary", "--m", "-1"}).code == kExitUsage);
  CHECK(run({"gaussian-example", "--m", "-1-i"}).code == kExitUsage);
  CHECK(run({"second", "--triple", "1,5,12", "--n", "4"}).code == kExitFailed);
  CHECK(run({"second", "--triple", "1,5,4620", "--n", "4"}).code == kExitOk);
  CHECK(run({"--help"}).code == kExitOk);
}
