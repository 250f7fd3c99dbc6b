#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fpcalc/checks.hpp"
#include "fpcalc/errors.hpp"
#include "fpcalc/spec.hpp"
#include "helpers.hpp"

using namespace fpcalc;
using nlohmann::json;

TEST_CASE("shorthand arguments") {
  CHECK(spec_from_argument("delta_2.5") == json{{"type", "named"}, {"name", "delta"}, {"params", {{"a", 2.5}}}});
  const json atoms = spec_from_argument("atoms:-1@0.5,1@0.5");
  CHECK(atoms["type"] == "atomic");
  CHECK(atoms["atoms"][1][0] == 1.0);
  const json law = spec_from_argument("cauchy:a=1,b=2");
  CHECK(law["params"]["b"] == 2.0);
  CHECK(spec_from_argument(R"({"type":"named","name":"free_poisson"})")["name"] == "free_poisson");
}

TEST_CASE("spec files") {
  const char* path = "spec_test_tmp.json";
  {
    std::ofstream out(path);
    out << R"({"type":"atomic","atoms":[[0,0.25],[1,0.75]]})";
  }
  const Measure m = measure_from_spec(spec_from_argument(path));
  CHECK(std::abs(m.cauchy({0, 1}) - (0.25 / cplx{0, 1} + 0.75 / cplx{-1, 1})) < 1e-15);
  std::remove(path);
}

TEST_CASE("malformed specs") {
  CHECK_THROWS_AS(spec_from_argument("{\"type\":"), SpecError);
  CHECK_THROWS_AS(spec_from_argument("atoms:1"), SpecError);
  CHECK_THROWS_AS(spec_from_argument("cauchy:a=x"), SpecError);
  CHECK_THROWS_AS(measure_from_spec(json{{"name", "delta"}}), SpecError);
  CHECK_THROWS_AS(measure_from_spec(json{{"type", "expr"}, {"op", "add-free"}, {"args", json::array()}}),
                  SpecError);
  CHECK_THROWS_AS(measure_from_spec(json{{"type", "expr"}, {"op", "explode"}, {"args", json::array()}}),
                  SpecError);
  CHECK_THROWS_AS(measure_from_spec(spec_from_argument("atoms:1@-0.5,2@1.5")), ParameterError);
}

TEST_CASE("expression trees") {
  const json spec = {{"type", "expr"},
                     {"op", "free-power"},
                     {"args", {spec_from_argument("semicircle")}},
                     {"params", {{"t", 2.0}}}};
  const Measure m = measure_from_spec(spec);
  const Measure s2 = measure_from_spec(spec_from_argument("semicircle:t=2"));
  CHECK(std::abs(m.reciprocal({0.5, 2}) - s2.reciprocal({0.5, 2})) < 1e-10);
}

TEST_CASE("combined specs simplify") {
  const json c = combine_specs("add-monotone", spec_from_argument("cauchy:a=1,b=2"),
                               spec_from_argument("cauchy:a=0.5,b=1"));
  CHECK(c["name"] == "cauchy");
  CHECK(c["params"]["a"] == 1.5);
  CHECK(c["params"]["b"] == 3.0);
  const json d = combine_specs("mul-free", spec_from_argument("delta_2"), spec_from_argument("delta_3"));
  CHECK(d["params"]["a"] == 6.0);
  const json e = combine_specs("add-free", spec_from_argument("semicircle"), spec_from_argument("semicircle"));
  CHECK(e["type"] == "expr");
}

TEST_CASE("identity manifest is well formed") {
  const json& manifest = identity_manifest();
  const auto suites = known_suites();
  std::size_t total = 0;
  for (const auto& rec : manifest.at("identities")) {
    CHECK(std::find(suites.begin(), suites.end(), rec.at("suite").get<std::string>()) != suites.end());
    ++total;
  }
  CHECK(total > 50);
  CHECK_THROWS_AS(run_suite("nope"), SpecError);
}

TEST_CASE("check reports") {
  const CheckReport r = run_suite("cauchy");
  CHECK(r.pass());
  CHECK(std::is_sorted(r.results.begin(), r.results.end(),
                       [](const auto& a, const auto& b) { return a.id < b.id; }));
  const json j = r.to_json();
  CHECK(j["suite"] == "cauchy");
  CHECK(j["identities"].size() == r.results.size());
  const CheckReport strict = run_suite("cauchy", 0.0);
  CHECK_FALSE(strict.pass());
}
