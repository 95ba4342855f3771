#include "doctest.h"
#include "support.hpp"

using namespace deontic;
using oracle::soa;

namespace {

std::size_t layer_size(const std::string& layer) { return builtin_ruleset({layer}).size(); }

// Runs the given layers over vocabulary plus a Turtle snippet.
RunResult run_layers(const std::set<std::string>& layers, const std::string& data) {
  Graph g = vocabulary();
  g.insert_all(parse_turtle(data));
  return run_fixpoint(g, builtin_ruleset(layers));
}

const char* kDecl = R"(soa:Pay a :Eventuality. soa:has-agent a :ThematicRole. soa:has-instrument a :ThematicRole.
)";

}  // namespace

TEST_CASE("layers and catalog sizes") {
  CHECK(layer_names().size() == 6);
  CHECK(layer_size("core") == 11);
  CHECK(layer_size("pragmatics") == 1);
  CHECK(layer_size("dts") == 10);
  CHECK(layer_size("deontic-bool") == 11);
  CHECK(layer_size("compliance") == 3);
  CHECK(layer_size("modal") == 2);
  CHECK(builtin_ruleset_all().size() == catalog().size());
  CHECK(catalog().size() == 38);
  CHECK_THROWS_AS(builtin_ruleset({"core", "nope"}), UnknownLayer);
  CHECK(builtin_ruleset({}).empty());
}

TEST_CASE("catalog entries are unique and documented") {
  std::set<std::string> ids;
  for (const auto& e : catalog()) {
    CHECK_MESSAGE(ids.insert(e.rule_id).second, e.rule_id);
    CHECK(is_layer(e.layer));
    CHECK_FALSE(e.anchor.empty());
  }
}

TEST_CASE("vocabulary alone infers nothing") {
  Graph v = vocabulary();
  CHECK(run_fixpoint(v, builtin_ruleset({"core"})).graph == v);
  CHECK(run_fixpoint(v, builtin_ruleset_all()).graph == v);
}

TEST_CASE("really existing conjunction splits and recombines") {
  auto r = run_layers({"core"}, "soa:c a :Rexist; :and1 soa:a; :and2 soa:b.");
  CHECK(r.graph.contains(Triple(soa("a"), vocab::type, vocab::Rexist)));
  CHECK(r.graph.contains(Triple(soa("b"), vocab::type, vocab::Rexist)));
  auto up = run_layers({"core"}, "soa:c :and1 soa:a; :and2 soa:b. soa:a a :Rexist. soa:b a :Rexist.");
  CHECK(up.graph.contains(Triple(soa("c"), vocab::type, vocab::Rexist)));
}

TEST_CASE("negation of a real eventuality is held false") {
  auto r = run_layers({"core"}, "soa:e a :Rexist; :not soa:ne.");
  CHECK(oracle::has_reification(r.graph, vocab::false_, soa("ne"), vocab::type, vocab::Rexist));
  CHECK_FALSE(r.graph.contains(Triple(soa("ne"), vocab::type, vocab::Rexist)));
  CHECK(extract_findings(r.graph).findings.empty());
}

TEST_CASE("deontic hexagon closes for random obligations") {
  auto r = oracle::hexagon_suite(20, 17);
  CHECK(r.cases == 20);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("optional expands to two held-false obligations") {
  auto r = run_layers({"core", "dts"}, "soa:e a :Optional; :not soa:ne.");
  CHECK(oracle::has_reification(r.graph, vocab::false_, soa("e"), vocab::type, vocab::Obligatory));
  CHECK(oracle::has_reification(r.graph, vocab::false_, soa("ne"), vocab::type, vocab::Obligatory));
  CHECK(r.graph.contains(Triple(soa("e"), vocab::type, vocab::Permitted)));
  CHECK(r.graph.contains(Triple(soa("ne"), vocab::type, vocab::Permitted)));
}

TEST_CASE("compliance needs every obligation role matched") {
  std::string base = std::string(kDecl) + "soa:o a :Obligatory, soa:Pay; soa:has-agent soa:John.\n";
  auto sub = run_layers({"core", "compliance"},
                        base + "soa:e a :Rexist, soa:Pay; soa:has-agent soa:John; soa:has-instrument soa:cash.");
  CHECK(extract_findings(sub.graph).count(FindingKind::Compliance) == 1);
  auto other = run_layers({"core", "compliance"}, base + "soa:e a :Rexist, soa:Pay; soa:has-agent soa:Mary.");
  CHECK(extract_findings(other.graph).findings.empty());
  auto missing = run_layers({"core", "compliance"}, base + "soa:e a :Rexist, soa:Pay.");
  CHECK(extract_findings(missing.graph).findings.empty());
  auto unreal = run_layers({"core", "compliance"}, base + "soa:e a soa:Pay; soa:has-agent soa:John.");
  CHECK(extract_findings(unreal.graph).findings.empty());
}

TEST_CASE("compliance links are not duplicated across iterations") {
  std::string data = std::string(kDecl) +
                     "soa:o a :Obligatory, soa:Pay; soa:has-agent soa:John.\n"
                     "soa:e a :Rexist, soa:Pay; soa:has-agent soa:John.";
  auto r = run_layers({"core", "compliance"}, data);
  CHECK(r.graph.match(std::nullopt, vocab::is_complied_with_by, std::nullopt).size() == 1);
}

TEST_CASE("every fixture contains its expected graph and avoids its absent graph") {
  for (const auto& name : oracle::terminating_fixtures()) {
    auto r = oracle::run_named(name);
    CHECK_MESSAGE(contains_pattern(r.result.graph, r.fixture.expected), name);
    for (const auto& t : r.fixture.absent) {
      Graph one;
      one.insert(t);
      CHECK_MESSAGE(!contains_pattern(r.result.graph, one), name);
    }
  }
}

TEST_CASE("every catalog rule fires somewhere in the corpus") {
  std::set<std::string> fired;
  for (const auto& name : oracle::terminating_fixtures()) {
    auto r = oracle::run_named(name);
    for (const auto& it : r.result.trace)
      for (const auto& f : it.firings)
        if (f.solutions > 0) fired.insert(f.rule_id);
  }
  for (const auto& e : catalog()) CHECK_MESSAGE(fired.count(e.rule_id), e.rule_id);
}

TEST_CASE("conflicts always point at a true permission") {
  std::size_t seen = 0;
  for (const auto& name : oracle::terminating_fixtures()) {
    auto r = oracle::run_named(name);
    const Graph& g = r.result.graph;
    for (const auto& t : g.match(std::nullopt, vocab::is_in_conflict_with, std::nullopt)) {
      ++seen;
      CHECK(g.contains(Triple(t.o, vocab::type, vocab::true_)));
      CHECK(g.contains(Triple(t.o, vocab::type, vocab::hold)));
      CHECK(g.object(t.o, vocab::object) == vocab::Permitted);
      CHECK(g.object(t.s, vocab::object) == vocab::Permitted);
      CHECK(g.contains(Triple(t.s, vocab::type, vocab::false_)));
    }
  }
  CHECK(seen >= 8);
}

TEST_CASE("derived obligations of the textbook puzzles") {
  auto smith = oracle::run_named("smith");
  CHECK(smith.result.graph.contains(Triple(soa("esd"), vocab::type, vocab::Obligatory)));
  auto permitted = oracle::run_named("permitted-smith-non-inference");
  CHECK_FALSE(permitted.result.graph.contains(Triple(soa("esd"), vocab::type, vocab::Permitted)));
  for (const char* name : {"jones", "roberts", "thomas"}) {
    auto r = oracle::run_named(name);
    CHECK_MESSAGE(contains_pattern(r.result.graph, r.fixture.expected), std::string(name));
    CHECK_MESSAGE(r.report.findings.empty(), std::string(name));
  }
}

TEST_CASE("fixture index is consistent with the corpus") {
  CHECK(fixture_index().size() == 24);
  CHECK_THROWS_AS(fixture_info("missing"), UnknownFixture);
  for (const auto& f : fixture_index()) CHECK_NOTHROW(load_fixture(oracle::fixtures_dir(), f.name));
}
