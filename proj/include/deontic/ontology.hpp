#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "deontic/engine.hpp"
#include "deontic/errors.hpp"
#include "deontic/graph.hpp"
#include "deontic/rule.hpp"
#include "deontic/turtle.hpp"

namespace deontic {

inline const std::vector<std::string>& layer_names() {
  static const std::vector<std::string> names{"core", "pragmatics", "dts", "deontic-bool", "compliance", "modal"};
  return names;
}

inline bool is_layer(const std::string& name) {
  const auto& n = layer_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

// Class and property declarations of the ontology.
inline const char* vocabulary_turtle() {
  return R"TTL(
:Eventuality a rdfs:Class. :ThematicRole a rdfs:Class.
:Modality a rdfs:Class. :Rexist a rdfs:Class, :Modality.
:not a rdf:Property; rdfs:domain :Eventuality; rdfs:range :Eventuality.
:and1 a rdf:Property; rdfs:domain :Eventuality; rdfs:range :Eventuality.
:and2 a rdf:Property; rdfs:domain :Eventuality; rdfs:range :Eventuality.
:or1 a rdf:Property; rdfs:domain :Eventuality; rdfs:range :Eventuality.
:or2 a rdf:Property; rdfs:domain :Eventuality; rdfs:range :Eventuality.
:statement a rdfs:Class; rdfs:subClassOf rdf:Statement.
:true a rdfs:Class; rdfs:subClassOf :statement.
:false a rdfs:Class; rdfs:subClassOf :statement.
:hold a rdfs:Class; rdfs:subClassOf :statement.
:necessary a rdfs:Class; rdfs:subClassOf :statement.
:possible a rdfs:Class; rdfs:subClassOf :statement.
:disjunction a rdf:Property; rdfs:domain :statement; rdfs:range :statement.
:is-in-contradiction-with a rdf:Property; rdfs:domain :statement; rdfs:range :statement.
:is-in-conflict-with a rdf:Property; rdfs:domain :statement; rdfs:range :statement.
:is-complied-with-by a rdf:Property; rdfs:domain :statement; rdfs:range :statement.
:is-violated-by a rdf:Property; rdfs:domain :statement; rdfs:range :statement.
:is-necessarily-violated-by a rdf:Property; rdfs:domain :statement; rdfs:range :statement.
:DeonticModality a rdfs:Class; rdfs:subClassOf :Modality.
:Obligatory a rdfs:Class, :DeonticModality.
:Permitted a rdfs:Class, :DeonticModality.
:Optional a rdfs:Class, :DeonticModality.
:InferenceRule a rdfs:Class.
:has-sparql-code a rdf:Property; rdfs:domain :InferenceRule.
)TTL";
}

inline Graph vocabulary() { return parse_turtle(vocabulary_turtle()); }

struct CatalogEntry {
  std::string rule_id;
  std::string layer;
  std::string anchor;  // what the rule encodes, in words
  std::string text;    // rule body in the CONSTRUCT-WHERE dialect
};

namespace detail {

inline std::string and_down(const std::string& m) {
  return "CONSTRUCT{?e1 a " + m + ". ?e2 a " + m + ".}\nWHERE{?ea :and1 ?e1. ?ea :and2 ?e2. ?ea a " + m + "}";
}

inline std::string and_up(const std::string& m) {
  return "CONSTRUCT{?ea a " + m + ".}\nWHERE{?ea :and1 ?e1. ?ea :and2 ?e2.\n  ?e1 a " + m + ". ?e2 a " + m + "}";
}

inline std::string or_forward(const std::string& m) {
  return "CONSTRUCT{[a :true; rdf:subject ?e1; rdf:predicate rdf:type;\n"
         "  rdf:object " + m + "] :disjunction [a :true; rdf:subject ?e2;\n"
         "  rdf:predicate rdf:type; rdf:object " + m + "]}\n"
         "WHERE{?eo :or1 ?e1. ?eo :or2 ?e2. ?eo a " + m + ".\n"
         "  NOT EXISTS{?r1 a :true; rdf:predicate rdf:type; rdf:object " + m + ".\n"
         "    ?r2 a :true; rdf:predicate rdf:type; rdf:object " + m + ".\n"
         "    {?r1 rdf:subject ?e1. ?r2 rdf:subject ?e2.}UNION\n"
         "    {?r1 rdf:subject ?e2. ?r2 rdf:subject ?e1.}}}";
}

inline std::string or_backward(const std::string& m) {
  return "CONSTRUCT{?eo a " + m + "}\n"
         "WHERE{{?eo :or1 ?e1. ?eo :or2 ?e2}UNION{?eo :or1 ?e2. ?eo :or2 ?e1}\n"
         "  {?e1 rdf:type " + m + "}UNION{?e2 rdf:type " + m + "}}";
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](const char* id, const char* layer, const char* anchor, std::string text) {
    c.push_back({id, layer, anchor, std::move(text)});
  };

  // core
  add("not-false", "core", "the negation of a really existing eventuality holds false as really existing",
      R"R(CONSTRUCT{[a :false,:hold;
    rdf:subject ?ne; rdf:predicate rdf:type; rdf:object :Rexist]}
WHERE{{?e :not ?ne}UNION{?ne :not ?e}
  ?e rdf:type :Rexist.
  NOT EXISTS{?f a :false,:hold; rdf:subject ?ne;
    rdf:predicate rdf:type; rdf:object :Rexist}})R");
  add("not-rexist", "core", "if an eventuality holds false as really existing, its negation really exists",
      R"R(CONSTRUCT{?ne a :Rexist}
WHERE{{?e :not ?ne}UNION{?ne :not ?e} ?r a :false,:hold;
  rdf:subject ?e; rdf:predicate rdf:type; rdf:object :Rexist})R");
  add("hold-true", "core", "a reification held true materializes the reified triple",
      R"R(CONSTRUCT{?s ?p ?o}
WHERE{?r a :true,:hold; rdf:subject ?s;
  rdf:predicate ?p; rdf:object ?o})R");
  add("and-down", "core", "a really existing conjunction makes both conjuncts really exist", and_down(":Rexist"));
  add("and-up", "core", "two really existing conjuncts make their conjunction really exist", and_up(":Rexist"));
  add("or-to-disjunction", "core", "a really existing disjunction becomes a disjunction of true statements",
      or_forward(":Rexist"));
  add("or-up", "core", "a really existing disjunct makes the disjunction really exist", or_backward(":Rexist"));
  add("ds-rexist", "core", "disjunctive syllogism at the level of the eventualities",
      R"R(CONSTRUCT{?e2 a :Rexist}
WHERE{?eo a :Rexist. ?en1 a :Rexist.
  {?eo :or1 ?e1; :or2 ?e2}UNION{?eo :or1 ?e2; :or2 ?e1}
  {?e1 :not ?en1}UNION{?en1 :not ?e1}})R");
  add("ds-statement", "core", "disjunctive syllogism at the level of the statements",
      R"R(CONSTRUCT{?r2 a :hold}
WHERE{{?r1 :disjunction ?r2}UNION{?r2 :disjunction ?r1}
  ?r1 a ?tvr1; rdf:subject ?s; rdf:predicate ?p; rdf:object ?o.
  ?rn1 a :hold,?tvrn1; rdf:subject ?s; rdf:predicate ?p; rdf:object ?o.
  FILTER(((?tvr1=:true)&&(?tvrn1=:false))||
    ((?tvr1=:false)&&(?tvrn1=:true)))})R");
  add("contradiction-rexist", "core",
      "really existing and not really existing is inconsistent: the two statements are in contradiction",
      R"R(CONSTRUCT{[a :true,:hold;
    rdf:subject ?e; rdf:predicate rdf:type; rdf:object :Rexist]
  :is-in-contradiction-with ?r}
WHERE{?e a :Rexist. ?r a :false,:hold;
  rdf:subject ?e; rdf:predicate rdf:type; rdf:object :Rexist.
  NOT EXISTS{{?t :is-in-contradiction-with ?r} UNION
    {?r :is-in-contradiction-with ?t} ?t a :true,:hold;
    rdf:subject ?e; rdf:predicate rdf:type; rdf:object :Rexist}})R");
  add("contradiction-thematic", "core",
      "a thematic role value asserted and held false is in contradiction",
      R"R(CONSTRUCT{[a :true,:hold;
    rdf:subject ?e; rdf:predicate ?tr; rdf:object ?tv]
  :is-in-contradiction-with ?r}
WHERE{?e ?tr ?tv. ?tr a :ThematicRole. ?r a :false,:hold;
  rdf:subject ?e; rdf:predicate ?tr; rdf:object ?tv.
  NOT EXISTS{{?t :is-in-contradiction-with ?r} UNION
    {?r :is-in-contradiction-with ?t} ?t a :true,:hold;
    rdf:subject ?e; rdf:predicate ?tr; rdf:object ?tv}})R");

  // pragmatics
  add("not-from-thematic-divergence", "pragmatics",
      "two eventualities of one class differing only in a role value held false are each other's negation",
      R"R(CONSTRUCT{?e1 :not ?e2}
WHERE{?e1 a ?c. ?e2 a ?c. ?c a :Eventuality. FILTER(?e1!=?e2)
  ?trn a :ThematicRole. ?e1 ?trn ?tv. ?r a :false,:hold;
  rdf:subject ?e2; rdf:predicate ?trn; rdf:object ?vn.
  NOT EXISTS{?tr a :ThematicRole. FILTER(?tr!=?trn) ?e1 ?tr ?tv1.
    NOT EXISTS{?e2 ?tr ?tv2}} NOT EXISTS{?tr a :ThematicRole.
    FILTER(?tr!=?trn) ?e2 ?tr ?tv2. NOT EXISTS{?e1 ?tr ?tv1}}
  NOT EXISTS{?tr a :ThematicRole. FILTER(?tr!=?trn)
    ?e1 ?tr ?tv1. ?e2 ?tr ?tv2. FILTER(?tv1!=?tv2)}})R");

  // dts
  add("ob-pe-dual-fwd", "dts", "PE(p) entails not OB(not p); OB(not p) entails not PE(p)",
      R"R(CONSTRUCT{[a :false,:hold;
    rdf:subject ?ne; rdf:predicate rdf:type; rdf:object ?ddm]}
WHERE{{?e :not ?ne}UNION{?ne :not ?e}
  {?e a :Obligatory. BIND(:Permitted AS ?ddm)}UNION
  {?e a :Permitted. BIND(:Obligatory AS ?ddm)}
  NOT EXISTS{?f a :false,:hold; rdf:subject ?ne;
    rdf:predicate rdf:type; rdf:object ?ddm}})R");
  add("ob-pe-dual-bwd", "dts", "not OB(not p) entails PE(p); not PE(p) entails OB(not p)",
      R"R(CONSTRUCT{?ne a ?ddm}
WHERE{{?e :not ?ne}UNION{?ne :not ?e}
  ?r a :false,:hold; rdf:subject ?e; rdf:predicate rdf:type.
  {?r rdf:object :Obligatory. BIND(:Permitted AS ?ddm)}UNION
  {?r rdf:object :Permitted. BIND(:Obligatory AS ?ddm)}})R");
  add("op-to-not-ob-subject", "dts", "OP(p) entails not OB(p)",
      R"R(CONSTRUCT{[a :false,:hold; rdf:subject ?e;
    rdf:predicate rdf:type; rdf:object :Obligatory]}
WHERE{?e a :Optional. {?e :not ?ne}UNION{?ne :not ?e}
  NOT EXISTS{?f a :false,:hold; rdf:subject ?e;
    rdf:predicate rdf:type; rdf:object :Obligatory}})R");
  add("op-to-not-ob-negation", "dts", "OP(p) entails not OB(not p)",
      R"R(CONSTRUCT{[a :false,:hold; rdf:subject ?ne;
    rdf:predicate rdf:type; rdf:object :Obligatory]}
WHERE{?e a :Optional. {?e :not ?ne}UNION{?ne :not ?e}
  NOT EXISTS{?f a :false,:hold; rdf:subject ?ne;
    rdf:predicate rdf:type; rdf:object :Obligatory}})R");
  add("not-ob-pair-to-op", "dts", "not OB(p) and not OB(not p) entail OP(p)",
      R"R(CONSTRUCT{?e a :Optional. ?ne a :Optional}
WHERE{{?e :not ?ne}UNION{?ne :not ?e}
  ?r1 a :false,:hold; rdf:subject ?e;
    rdf:predicate rdf:type; rdf:object :Obligatory.
  ?r2 a :false,:hold; rdf:subject ?ne;
    rdf:predicate rdf:type; rdf:object :Obligatory})R");
  add("ob-to-not-op-subject", "dts", "OB(p) entails not OP(p)",
      R"R(CONSTRUCT{[a :false,:hold; rdf:subject ?e;
    rdf:predicate rdf:type; rdf:object :Optional]}
WHERE{?e a :Obligatory. {?e :not ?ne}UNION{?ne :not ?e}
  NOT EXISTS{?f a :false,:hold; rdf:subject ?e;
    rdf:predicate rdf:type; rdf:object :Optional}})R");
  add("ob-to-not-op-negation", "dts", "OB(not p) entails not OP(p)",
      R"R(CONSTRUCT{[a :false,:hold; rdf:subject ?ne;
    rdf:predicate rdf:type; rdf:object :Optional]}
WHERE{?e a :Obligatory. {?e :not ?ne}UNION{?ne :not ?e}
  NOT EXISTS{?f a :false,:hold; rdf:subject ?ne;
    rdf:predicate rdf:type; rdf:object :Optional}})R");
  add("not-op-to-ob-disjunction", "dts", "not OP(p) entails OB(p) or OB(not p)",
      R"R(CONSTRUCT{[a :true; rdf:subject ?e; rdf:predicate rdf:type;
    rdf:object :Obligatory] :disjunction [a :true; rdf:subject ?ne;
    rdf:predicate rdf:type; rdf:object :Obligatory]}
WHERE{{?e :not ?ne}UNION{?ne :not ?e} ?r a :false,:hold;
  rdf:subject ?e; rdf:predicate rdf:type; rdf:object :Optional.
  NOT EXISTS{?e a :Obligatory} NOT EXISTS{?ne a :Obligatory}
  NOT EXISTS{{?r1 :disjunction ?r2}UNION{?r2 :disjunction ?r1}
    ?r1 a :true; rdf:subject ?e; rdf:predicate rdf:type;
    rdf:object :Obligatory. ?r2 a :true; rdf:subject ?ne;
    rdf:predicate rdf:type; rdf:object :Obligatory.}})R");
  add("ob-to-pe", "dts", "OB(p) entails PE(p)",
      R"R(CONSTRUCT{?e a :Permitted} WHERE{?e a :Obligatory})R");
  add("not-pe-to-not-ob", "dts", "not PE(p) entails not OB(p)",
      R"R(CONSTRUCT{[a :false,:hold; rdf:subject ?e;
    rdf:predicate rdf:type; rdf:object :Obligatory]}
WHERE{?r a :false, :hold;
  rdf:subject ?e; rdf:predicate rdf:type; rdf:object :Permitted.
  NOT EXISTS{?f a :false,:hold; rdf:subject ?e;
    rdf:predicate rdf:type; rdf:object :Obligatory}})R");

  // deontic-bool
  const std::pair<const char*, const char*> modalities[] = {
      {"obligatory", ":Obligatory"}, {"permitted", ":Permitted"}, {"optional", ":Optional"}};
  for (const auto& [name, cls] : modalities) {
    c.push_back({std::string("and-down-") + name, "deontic-bool",
                 std::string("a ") + name + " conjunction makes both conjuncts " + name, and_down(cls)});
    c.push_back({std::string("and-up-") + name, "deontic-bool",
                 std::string("two ") + name + " conjuncts make their conjunction " + name, and_up(cls)});
  }
  add("ds-obligatory", "deontic-bool", "disjunctive syllogism inside obligations",
      R"R(CONSTRUCT{?e2 a :Obligatory}
WHERE{?eo a :Obligatory. ?en1 a :Obligatory.
  {?eo :or1 ?e1; :or2 ?e2}UNION{?eo :or1 ?e2; :or2 ?e1}
  {?e1 :not ?en1}UNION{?en1 :not ?e1}})R");
  add("or-distribution-permitted-fwd", "deontic-bool",
      "a permitted disjunction becomes a disjunction of permissions", or_forward(":Permitted"));
  add("or-distribution-permitted-bwd", "deontic-bool", "a permitted disjunct makes the disjunction permitted",
      or_backward(":Permitted"));
  add("or-distribution-optional-fwd", "deontic-bool",
      "an optional disjunction becomes a disjunction of optionalities", or_forward(":Optional"));
  add("or-distribution-optional-bwd", "deontic-bool", "an optional disjunct makes the disjunction optional",
      or_backward(":Optional"));

  // compliance
  add("complied-with", "compliance",
      "an obligation is complied with by a really existing instantiation of it",
      R"R(CONSTRUCT{[a :true,:hold; rdf:subject ?eo; rdf:predicate rdf:type;
    rdf:object :Obligatory] :is-complied-with-by [a :true,:hold;
    rdf:subject ?e; rdf:predicate rdf:type; rdf:object :Rexist]}
WHERE{?eo a :Obligatory, ?c. ?e a :Rexist, ?c. ?c a :Eventuality.
  NOT EXISTS{?tr a :ThematicRole. ?eo ?tr ?vo. NOT EXISTS{?e ?tr ?ve}}
  NOT EXISTS{?tr a :ThematicRole. ?eo ?tr ?vo. ?e ?tr ?ve. FILTER(?vo!=?ve)}
  NOT EXISTS{?eor :is-complied-with-by ?er. ?eor a :true,:hold;
    rdf:subject ?eo; rdf:predicate rdf:type; rdf:object :Obligatory.
    ?er a :true,:hold; rdf:subject ?e;
    rdf:predicate rdf:type; rdf:object :Rexist}})R");
  add("violated-by", "compliance", "a prohibition is violated by a really existing instantiation of it",
      R"R(CONSTRUCT{?epr :is-violated-by [a :true,:hold;
    rdf:subject ?e; rdf:predicate rdf:type; rdf:object :Rexist]}
WHERE{?epr a :false,:hold;
  rdf:subject ?ep; rdf:predicate rdf:type; rdf:object :Permitted.
  ?ep a ?c. ?e a :Rexist, ?c. ?c a :Eventuality.
  NOT EXISTS{?tr a :ThematicRole. ?ep ?tr ?vp. NOT EXISTS{?e ?tr ?ve}}
  NOT EXISTS{?tr a :ThematicRole. ?ep ?tr ?vp. ?e ?tr ?ve. FILTER(?vp!=?ve)}
  NOT EXISTS{?epr :is-violated-by ?te. ?te rdf:type :true,:hold;
    rdf:subject ?e; rdf:predicate rdf:type; rdf:object :Rexist}})R");
  add("conflict", "compliance",
      "a prohibition is in conflict with a permission of a more specific eventuality",
      R"R(CONSTRUCT{?enr :is-in-conflict-with [a :true,:hold;
    rdf:subject ?e; rdf:predicate rdf:type; rdf:object :Permitted]}
WHERE{?enr a :false,:hold;
  rdf:subject ?en; rdf:predicate rdf:type; rdf:object :Permitted.
  ?en a ?c. ?e a :Permitted, ?c. ?c a :Eventuality.
  NOT EXISTS{?tr a :ThematicRole. ?en ?tr ?vn. NOT EXISTS{?e ?tr ?vp}}
  NOT EXISTS{?tr a :ThematicRole. ?en ?tr ?vn. ?e ?tr ?vp. FILTER(?vn!=?vp)}
  NOT EXISTS{?enr :is-in-conflict-with ?te. ?te rdf:type :true,:hold;
    rdf:subject ?e; rdf:predicate rdf:type; rdf:object :Permitted}})R");

  // modal
  add("necessary-materialize", "modal", "every statement that is necessary is true",
      R"R(CONSTRUCT{?s ?p ?o}
WHERE{?r a :necessary, :hold; rdf:subject ?s;
  rdf:predicate ?p; rdf:object ?o})R");
  add("necessarily-violated", "modal",
      "a prohibition is necessarily violated by a necessary role value of a more specific eventuality",
      R"R(CONSTRUCT{?rep :is-necessarily-violated-by ?ren}
WHERE{?trn a :ThematicRole. ?en ?trn ?vn. ?ren a :necessary,:hold;
  rdf:subject ?en; rdf:predicate ?trn; rdf:object ?vn.
  ?rep a :false,:hold; rdf:subject ?ep; rdf:predicate rdf:type;
  rdf:object :Permitted. ?en a ?c. ?ep a ?c. ?c a :Eventuality.
  NOT EXISTS{?tr a :ThematicRole. ?en ?tr ?vn. NOT EXISTS{?ep ?tr ?vp}}
  NOT EXISTS{?tr a :ThematicRole. ?en ?tr ?vn. ?ep ?tr ?vp.
  FILTER(?vn!=?vp)}})R");
  return c;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = detail::build_catalog();
  return c;
}

// Union of the requested layers, in catalog order.
inline RuleSet builtin_ruleset(const std::set<std::string>& layers) {
  for (const auto& l : layers)
    if (!is_layer(l)) throw UnknownLayer(l);
  RuleSet rs;
  for (const auto& e : catalog())
    if (layers.count(e.layer)) rs.add({e.rule_id, parse_rule(e.rule_id, e.text), e.layer});
  return rs;
}

inline RuleSet builtin_ruleset_all() {
  const auto& n = layer_names();
  return builtin_ruleset(std::set<std::string>(n.begin(), n.end()));
}

// Fixture corpus.

struct FixtureInfo {
  std::string name;
  std::vector<std::string> layers;
  SkolemMode skolem = SkolemMode::Deterministic;
  bool expect_nontermination = false;
};

inline const std::vector<FixtureInfo>& fixture_index() {
  static const std::vector<FixtureInfo> idx{
      {"john-leaves-contradiction", {"core"}},
      {"not-leaving-inferred", {"core"}},
      {"cash-card-contradiction", {"core", "pragmatics"}},
      {"or-and-ds", {"core"}},
      {"prohibited-not-pay-compliance", {"core", "dts", "compliance"}},
      {"optional-vs-prohibited-conflict", {"core", "dts", "compliance"}},
      {"partial-conflict-obligations", {"core", "pragmatics", "dts", "compliance"}},
      {"building-norms", {"core", "dts", "compliance"}},
      {"building-norms-no-john", {"core", "dts", "compliance"}},
      {"parking-norms", {"core", "dts", "compliance"}},
      {"cash-card-norms", {"core", "pragmatics", "dts", "compliance"}},
      {"smith", {"core", "deontic-bool"}},
      {"permitted-smith-non-inference", {"core", "deontic-bool"}},
      {"jones", {"core", "deontic-bool"}},
      {"roberts", {"core", "deontic-bool"}},
      {"thomas", {"core", "deontic-bool"}},
      {"deontic-connectives", {"deontic-bool"}},
      {"non-optional-disjunction", {"core", "dts"}},
      {"sketty-necessity", {"core", "dts", "compliance", "modal"}},
      {"sketty-necessity-obligatory", {"core", "dts", "compliance", "modal"}},
      {"sketty-card-contradiction", {"core", "modal"}},
      {"lie-or-error", {"core", "modal"}},
      {"wife-guard", {}},
      {"wife-unguarded", {}, SkolemMode::Fresh, true},
  };
  return idx;
}

inline const FixtureInfo& fixture_info(const std::string& name) {
  for (const auto& f : fixture_index())
    if (f.name == name) return f;
  throw UnknownFixture(name);
}

struct Fixture {
  FixtureInfo info;
  Graph data;        // states of affairs
  Graph user_rules;  // rule individuals, empty when the fixture has none
  Graph expected;    // triples the run must contain, up to blank renaming
  Graph absent;      // triples the run must not contain
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Fixture load_fixture(const std::filesystem::path& root, const std::string& name) {
  Fixture f{fixture_info(name), {}, {}, {}, {}};
  auto dir = root / name;
  auto load = [&](const char* file, const char* scope, bool required) {
    auto p = dir / file;
    if (!std::filesystem::exists(p)) {
      if (required) throw Error("fixture " + name + " lacks " + file);
      return Graph();
    }
    return parse_turtle(read_file(p), {scope});
  };
  f.data = load("data.ttl", "data", true);
  f.user_rules = load("rules.ttl", "rules", false);
  f.expected = load("expected.ttl", "expected", true);
  f.absent = load("absent.ttl", "absent", false);
  return f;
}

// Input graph of a fixture run: vocabulary plus data.
inline Graph fixture_input(const Fixture& f) {
  Graph g = vocabulary();
  g.insert_all(f.data);
  return g;
}

inline RuleSet fixture_rules(const Fixture& f) {
  RuleSet rs = builtin_ruleset(std::set<std::string>(f.info.layers.begin(), f.info.layers.end()));
  rs.append(load_rules(f.user_rules));
  return rs;
}

inline RunResult run_fixture(const Fixture& f, std::size_t max_iterations = 100) {
  EngineConfig cfg;
  cfg.max_iterations = max_iterations;
  cfg.skolem = f.info.skolem;
  return run_fixpoint(fixture_input(f), fixture_rules(f), cfg);
}

}  // namespace deontic
