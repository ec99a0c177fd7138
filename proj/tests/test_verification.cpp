#include <catch2/catch.hpp>

#include "movlab/fixtures.hpp"
#include "movlab/verification.hpp"

using namespace movlab;

TEST_CASE("artificial solution s1", "[verification]") {
  CHECK(s1_winners(regular_plus_sink(3)).size() == 8);

  const Tournament chain = transitive_tournament(4);
  // Alternative 2 has outdegree 1 and beats alternative 3, which is excluded.
  const WinnerSet w = s1_winners(chain);
  CHECK(w.members == std::vector<AltId>{0, 1, 2});

  CHECK(s1_winners(cyclone(3)).size() == 3);
  CHECK(s1_winners(transitive_tournament(3)).size() == 3);
}

TEST_CASE("artificial solution s2", "[verification]") {
  const Tournament chain4 = transitive_tournament(4);
  CHECK(s2_winners(chain4).members == std::vector<AltId>{0, 1, 3});
  CHECK(s2_winners(cyclone(5)).size() == 5);
  const Tournament chain3 = transitive_tournament(3);
  const WinnerSet w = s2_winners(chain3);
  CHECK_FALSE(w.contains(1));
  CHECK(w.contains(2));
}

TEST_CASE("unknown properties are rejected", "[verification]") {
  CHECK_THROWS_AS(run_property("does_not_exist", {}), ValidationError);
  CHECK(property_catalog().size() == 15);
}

TEST_CASE("every catalog property passes a reduced run", "[verification]") {
  for (const auto& [name, fn] : property_catalog()) {
    PropertyOptions opts;
    opts.trials = name == "tc_formula_agreement" ? 10 : 40;
    opts.seed = 7;
    opts.max_n = 15;
    const PropertyReport report = fn(opts);
    INFO(name);
    for (const auto& violation : report.violations) INFO(violation.description);
    CHECK(report.passed());
    CHECK(report.name == name);
  }
}

TEST_CASE("agreement report carries fractions", "[verification]") {
  PropertyOptions opts;
  opts.trials = 10;
  opts.seed = 3;
  const PropertyReport report = run_property("tc_formula_agreement", opts);
  CHECK(report.note.find("agreement fractions:") != std::string::npos);
  CHECK(report.note.find("n=40") != std::string::npos);
  CHECK(report.passed());
}

TEST_CASE("counterexample suites hold", "[verification]") {
  CHECK(run_property("prop8_counterexample", {}).passed());
  CHECK(run_property("prop9_counterexample", {}).passed());
}

TEST_CASE("reports serialize violations for replay", "[verification]") {
  // Force a violation by checking a deliberately false property through the
  // context helper: s2 margins break cover-consistency on transitive(3).
  const Tournament t = transitive_tournament(3);
  const auto member = [](const Adjacency& adj, int v) { return membership::s2(adj, v); };
  const MovResult r1 = brute_force_mov(t, member, 1, 3);
  const MovResult r2 = brute_force_mov(t, member, 2, 3);
  CHECK(r1.value < r2.value);
  CHECK(t.covers(1, 2));
}
