#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "quadrep/cli.hpp"

using namespace quadrep;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve") {
  auto ex1 = run({"solve", "435629", "--d", "5", "--verbose"});
  CHECK(ex1.status == kExitFound);
  CHECK(has(ex1.out, "roots: 231183 386057"));
  CHECK(has(ex1.out, "w=231183 t_nu=1385 t=228 D=277"));
  CHECK(has(ex1.out, "w=386057 t_nu=1450 t=123 D=290"));
  CHECK(has(ex1.out, "435629 = 228^2 + 5*277^2 (proper)"));
  CHECK(has(ex1.out, "435629 = 123^2 + 5*290^2 (proper)"));

  auto ex2 = run({"solve", "36964", "--d", "7", "--proper-only"});
  CHECK(ex2.status == kExitNone);
  CHECK(has(ex2.out, "no proper solution"));

  auto ex2v = run({"solve", "36964", "--d", "7", "--verbose"});
  CHECK(has(ex2v.out, "w=24899 t_nu="));
  CHECK(has(ex2v.out, "t=52 D=144"));
  CHECK(has(ex2v.out, "reject"));

  auto improper = run({"solve", "36964", "--d", "7", "--improper"});
  CHECK(improper.status == kExitFound);
  CHECK(has(improper.out, "36964 = 26^2 + 7*72^2 (improper)"));

  auto small = run({"solve", "3", "--d", "2"});
  CHECK(small.status == kExitFound);
  CHECK(has(small.out, "3 = 1^2 + 2*1^2 (proper)"));

  auto d1 = run({"solve", "13", "--verbose"});
  CHECK(d1.status == kExitFound);
  CHECK(has(d1.out, "w=8 t_mu=3 t=2 D=3 mu=3"));
  CHECK(has(d1.out, "13 = 3^2 + 1*2^2 (proper)"));
}

TEST_CASE("solve --brute") {
  auto r = run({"solve", "435629", "--d", "5", "--brute"});
  CHECK(r.status == kExitFound);
  CHECK(has(r.out, "brute force: 2 solution(s), agrees with solver"));

  auto all = run({"solve", "58674434381", "--d", "5", "--improper", "--brute"});
  CHECK(all.status == kExitFound);
  CHECK(has(all.out, "58674434381 = 119931^2 + 5*94118^2 (proper)"));
  CHECK(has(all.out, "agrees with solver"));
}

TEST_CASE("solve --json round-trips the printed integers") {
  auto text = run({"solve", "435629", "--d", "5"});
  auto js = run({"solve", "435629", "--d", "5", "--json"});
  REQUIRE(js.status == kExitFound);
  auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["m"] == "435629");
  CHECK(doc["d"] == "5");
  CHECK(doc["roots"] == nlohmann::json::array({"231183", "386057"}));
  REQUIRE(doc["solutions"].size() == 2);
  for (const auto& s : doc["solutions"]) {
    REQUIRE(s["x"].is_string());
    REQUIRE(s["y"].is_string());
    CHECK(s["proper"] == true);
    std::string line = "435629 = " + s["x"].get<std::string>() + "^2 + 5*" +
                       s["y"].get<std::string>() + "^2 (proper)";
    CHECK(has(text.out, line));
  }
  CHECK(doc["solutions"][0]["x"] == "123");
  CHECK(doc["solutions"][0]["w"] == "386057");
  CHECK(doc["solutions"][1]["w"] == "231183");

  auto improper = nlohmann::json::parse(run({"solve", "36964", "--d", "7", "--improper", "--json"}).out);
  REQUIRE(improper["solutions"].size() == 1);
  CHECK(improper["solutions"][0]["proper"] == false);
  CHECK(improper["solutions"][0]["w"].is_null());
}

TEST_CASE("invalid input exits with 2") {
  CHECK(run({"solve", "10", "--d", "5"}).status == kExitInvalid);
  CHECK(run({"solve", "1", "--d", "5"}).status == kExitInvalid);
  CHECK(run({"solve", "abc"}).status == kExitInvalid);
  CHECK(run({"solve", "13", "--d", "0"}).status == kExitInvalid);
  CHECK(run({"solve", "13", "--improper", "--proper-only"}).status == kExitInvalid);
  CHECK(run({}).status == kExitInvalid);
  CHECK(run({"bogus"}).status == kExitInvalid);
  CHECK(run({"smith", "7"}).status == kExitInvalid);
  CHECK(run({"cf", "3", "1"}).status == kExitInvalid);
}

TEST_CASE("sqrtmod, factor, cf, smith") {
  auto sq = run({"sqrtmod", "-7", "9241"});
  CHECK(sq.status == kExitFound);
  CHECK(sq.out == "6417\n");
  CHECK(run({"sqrtmod", "-5", "435629"}).out == "231183 386057\n");
  CHECK(run({"sqrtmod", "3", "7"}).status == kExitNone);

  CHECK(run({"factor", "435629"}).out == "367 * 1187\n");
  CHECK(run({"factor", "36964"}).out == "2^2 * 9241\n");
  CHECK(run({"factor", "58674434381"}).out == "367^3 * 1187\n");

  auto cf = run({"cf", "367", "1187"});
  CHECK(cf.status == kExitFound);
  CHECK(has(cf.out, "367/1187 = [0; 3, 4, 3, 1, 2, 1, 5]"));
  CHECK(has(cf.out, "quotients: 0 3 4 3 1 2 1 5"));
  CHECK(has(cf.out, "bezout: 207*367 - 64*1187 = 1"));

  auto smith = run({"smith", "13"});
  CHECK(smith.status == kExitFound);
  CHECK(has(smith.out, "h=5 x=3 y=2"));
}

TEST_CASE("factor effort bound from the environment") {
  setenv("QUADREP_FACTOR_EFFORT", "10", 1);
  auto r = run({"factor", "1000000016000000063"});
  unsetenv("QUADREP_FACTOR_EFFORT");
  CHECK(r.status == kExitInvalid);
  CHECK(has(r.err, "unfactored part 1000000016000000063"));

  setenv("QUADREP_FACTOR_EFFORT", "zero", 1);
  CHECK(run({"factor", "15"}).status == kExitInvalid);
  unsetenv("QUADREP_FACTOR_EFFORT");
}
