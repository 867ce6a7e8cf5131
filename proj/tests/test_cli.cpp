#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "golden.hpp"
#include "unbias/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args, const std::string& input = {}) {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = unbias::run_cli(args, out, err, in);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("golden CLI cases") {
  const auto cases = golden::load(GOLDEN_DIR);
  CHECK(cases.size() >= 10);
  for (const auto& c : cases) {
    INFO("case " << c.name);
    CHECK(golden::run(c) == c.expected);
  }
}

TEST_CASE("records round trip through the CLI") {
  const std::string s = R"({"schema":"unbias/1","kind":"span","apex":3,"source":2,"target":2,"left":[0,1,0],"right":[0,0,1]})";
  const Run composed = run({"--format", "record", "span-compose", s, "-"},
                           R"({"schema":"unbias/1","kind":"span","apex":2,"source":2,"target":1,"left":[0,1],"right":[0,0]})");
  REQUIRE(composed.code == 0);
  const Run ev = run({"--format", "record", "unbias", "-", R"({"schema":"unbias/1","kind":"family","objects":["A","B"]})"},
                     composed.out);
  CHECK(ev.code == 0);
  CHECK(ev.out.find(R"x("object":"(A * (B * (A * I)))")x") != std::string::npos);
  // results carry their span, so they can be fed back as span input
  const Run again = run({"unbias", "-", R"({"schema":"unbias/1","kind":"family","objects":["C","D"]})"}, ev.out);
  CHECK(again.code == 0);
  CHECK(again.out == "k=0: [x0,x1,x0] = (C * (D * (C * I)))\n");
  const Run missing = run({"unbias", "-", R"({"schema":"unbias/1","kind":"family","objects":["C"]})"}, ev.out);
  CHECK(missing.code == 2);
  CHECK(missing.err == "error: UnassignedLabel: no object for index 1\n");
}

TEST_CASE("outputs are byte-stable") {
  const std::vector<std::string> args{"check-laws", "--suite", "braiding", "--max-size", "4", "--seed", "5"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("suite braiding: ", 0) == 0);
}

TEST_CASE("seed defaults to the environment") {
  const std::vector<std::string> args{"--format", "record", "check-laws", "--suite", "span", "--max-size", "1"};
  setenv("UNBIAS_SEED", "11", 1);
  const Run a = run(args);
  unsetenv("UNBIAS_SEED");
  const Run b = run(args);
  CHECK(a.out.find("\"seed\":11") != std::string::npos);
  CHECK(b.out.find("\"seed\":1,") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check-laws", "--suite", "nope"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"equal", "b x y", "id x"}).code == 2);
}
