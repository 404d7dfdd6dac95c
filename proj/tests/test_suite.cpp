#include <doctest.h>

#include "vpq/suite.hpp"

using namespace vpq;

namespace {

SuiteConfig parse(const char* text) { return parse_suite_config(Json::parse(text)); }

}  // namespace

TEST_CASE("empty suite") {
  const SuiteResult r = run_suite(parse(R"({"checks": []})"));
  CHECK(r.failed == 0);
  CHECK(r.report["checks"].empty());
  CHECK(r.report["totals"]["checks"] == 0);
}

TEST_CASE("module sweep from a config") {
  const SuiteResult r = run_suite(parse(R"({
    "context": {"p": "2", "q": "3"},
    "checks": [{"check": "verify-module", "family": "mab:a=1/3,b=-2", "nmax": 4, "kmax": 8}]
  })"));
  CHECK(r.failed == 0);
  CHECK(r.report["checks"][0]["counts"]["checked"].get<long>() > 0);
}

TEST_CASE("reducibility grid adjudicates the exponent") {
  const SuiteResult r = run_suite(parse(R"({"checks": [{"check": "reducibility-grid", "mmax": 4}]})"));
  CHECK(r.failed == 0);
  CHECK(r.report["checks"][0]["findings"].size() == 8);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(parse(R"({"checks": [{"check": "nope"}]})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"checks": [{"check": "iso", "a": "0", "b": "1"}]})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"checks": [{"check": "verify-algebra", "window": "8"}]})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"checks": [{"check": "verify-algebra", "extra": 1}]})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"checks": [{"check": "classify", "a": "1/0", "b": "0"}]})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"checks": [{"check": "submodules", "family": "mab:a=1"}]})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"context": {"p": "2", "q": "2"}, "checks": []})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"context": {"r": "2"}, "checks": []})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"checks": [], "verbose": true})"), ConfigError);
  CHECK_THROWS_AS(parse(R"([1, 2])"), ConfigError);
}

TEST_CASE("domain errors become failures") {
  const SuiteResult r = run_suite(parse(R"({"checks": [{"check": "quadratic-in-x", "family": "mab:a=0,b=0", "window": 2}]})"));
  CHECK(r.failed == 1);
  CHECK(r.report["checks"][0]["failures"][0]["identity"] == "domain-error");
}

TEST_CASE("seeds are recorded and reproducible") {
  const char* text = R"({"seed": 11, "checks": [
    {"check": "iso-sweep", "samples": 3, "mmax": 2, "window": 6},
    {"check": "mab-sweep", "samples": 2, "nmax": 3, "kmax": 4, "symbolic": false, "seed": 99}
  ]})";
  SuiteConfig cfg = parse(text);
  cfg.jobs = 1;
  const SuiteResult one = run_suite(cfg);
  cfg.jobs = 4;
  const SuiteResult four = run_suite(cfg);
  CHECK(one.report.dump() == four.report.dump());
  CHECK(one.report["checks"][0]["parameters"]["seed"] == 11);
  CHECK(one.report["checks"][1]["parameters"]["seed"] == 99);
}

TEST_CASE("every registered check runs with defaults where it can") {
  for (const auto& name : check_names()) {
    CheckSpec spec{name, Json::object()};
    bool needs_args = false;
    try {
      validate_check(spec);
    } catch (const ConfigError&) {
      needs_args = true;
    }
    if (!needs_args && name != "case-audit" && name != "families" && name != "mab-sweep") {
      const auto ctx = ScalarContext::numeric(2, 3);
      CHECK_MESSAGE(run_check(ctx, spec, 1).checked() >= 0, name);
    }
  }
  CHECK(check_names().size() == 19);
}
