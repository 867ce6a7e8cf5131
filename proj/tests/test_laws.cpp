#include <doctest.h>

#include <stdexcept>

#include "unbias/laws.hpp"

using namespace unbias;

TEST_CASE("every suite passes at small sizes") {
  for (const std::string& name : suite_names()) {
    INFO("suite " << name);
    const LawReport r = run_suite(name, 2, 42);
    CHECK(r.cases > 0);
    CHECK(r.violations.empty());
    CHECK(r.ok());
  }
}

TEST_CASE("unknown suites are rejected") { CHECK_THROWS_AS(run_suite("nope", 2, 1), std::invalid_argument); }

TEST_CASE("LawReport keeps a bounded list of violations") {
  LawReport r("x");
  for (int i = 0; i < 50; ++i) {
    ++r.cases;
    r.record("v" + std::to_string(i));
  }
  CHECK(r.failed == 50);
  CHECK(r.violations.size() == 20);
  LawReport s("y");
  s.merge(r);
  CHECK(s.failed == 50);
  CHECK(s.cases == 50);
  CHECK_FALSE(s.ok());
}
