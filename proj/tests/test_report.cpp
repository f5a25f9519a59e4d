#include "prym/report.hpp"

#include "prym/suites.hpp"

#include "doctest.h"

#include <sstream>
#include <string>

TEST_CASE("suite reports aggregate checks and render stable digests") {
  prym::SuiteReport r;
  r.suite = "demo";
  r.parameters["genus"] = 2;
  r.add("first", true, "ok");
  CHECK(r.pass());
  r.add("second", false, "broken");
  CHECK_FALSE(r.pass());

  prym::SuiteReport child;
  child.suite = "inner";
  child.add("leaf", true, "");
  r.absorb(child);
  CHECK(r.checks.back().name == "inner.leaf");

  const std::string d1 = r.digest();
  CHECK(d1.size() == 16);
  prym::SuiteReport other = r;
  other.parameters["genus"] = 3;
  CHECK(other.digest() != d1);
  CHECK(prym::SuiteReport(r).digest() == d1);
}

TEST_CASE("json reports carry schema fields and zeroed timings by default") {
  prym::SuiteReport r;
  r.suite = "demo";
  r.parameters["seed"] = 7;
  r.add("alpha", true, "fine", 12.5);

  const auto j = r.to_json();
  CHECK(j["suite"] == "demo");
  CHECK(j["schema_version"] == prym::kSchemaVersion);
  CHECK(j["tool_version"] == prym::kToolVersion);
  CHECK(j["overall"] == "pass");
  CHECK(j["parameters"]["seed"] == 7);
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["name"] == "alpha");
  CHECK(j["checks"][0]["verdict"] == "pass");
  CHECK(j["checks"][0]["elapsed_ms"] == 0.0);

  r.timings = true;
  CHECK(r.to_json()["checks"][0]["elapsed_ms"] == 12.5);

  const std::string text = r.to_text();
  CHECK(text.find("[pass] alpha: fine") != std::string::npos);
  CHECK(text.find("overall: pass") != std::string::npos);
}

TEST_CASE("suite runners fill parameters and named checks") {
  prym::SuiteOptions o;
  o.genus = 2;
  const auto r = prym::run_orbits(o);
  CHECK(r.suite == "orbits");
  CHECK(r.pass());
  CHECK(r.parameters.at("genus") == 2);
  CHECK(!r.checks.empty());

  bool found = false;
  for (const auto& c : r.checks) found = found || c.name == "orbit_sizes";
  CHECK(found);
}

TEST_CASE("graph and cover exports expose the documented fields") {
  prym::SuiteOptions o;
  o.genus = 2;

  const auto g = prym::shadow_graph_json(o);
  CHECK(g["genus"] == 2);
  CHECK(g["vertices"].size() == 8);
  CHECK(g["beta"] == "0100");
  for (const auto& e : g["edges"]) REQUIRE(e.size() == 2);

  o.genus = 3;
  const auto c = prym::cover_description_json(o);
  CHECK(c["genus"] == 3);
  CHECK(c["vertices"] == 2);
  CHECK(c["faces"].size() == 2);
  CHECK(c["euler_characteristic"] == -8);
  REQUIRE(c["edges"].size() == 12);
  for (const auto& e : c["edges"]) {
    CHECK(e.contains("base"));
    CHECK(e.contains("sheet"));
    CHECK(e.contains("tail"));
    CHECK(e.contains("head"));
    CHECK(e.contains("monodromy"));
  }
  CHECK(c.contains("gram"));
  CHECK(c.contains("sigma"));
  CHECK(c.contains("minus_basis"));
}

TEST_CASE("siegel sweeps emit deterministic csv rows") {
  prym::SuiteOptions o;
  o.genus = 3;
  o.trials = 5;
  const std::string csv = prym::siegel_sweep_csv(o);
  CHECK(csv == prym::siegel_sweep_csv(o));

  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  CHECK(line == "seed,genus,word_length,residual");
  int rows = 0;
  while (std::getline(is, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 5);
}
