#pragma once
// Independent oracles and generators shared by unit tests and the acceptance binary.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "deontic/findings.hpp"
#include "deontic/ontology.hpp"
#include "deontic/pipeline.hpp"

#ifndef DEONTIC_FIXTURES_DIR
#define DEONTIC_FIXTURES_DIR "fixtures"
#endif

namespace oracle {

using namespace deontic;

inline const char* fixtures_dir() { return DEONTIC_FIXTURES_DIR; }

inline Term soa(const std::string& local) { return Term::iri(vocab::kSoa + local); }
inline Term ont(const std::string& local) { return Term::iri(vocab::kOnt + local); }

// Turtle snippet parsed with the built-in prefixes.
inline Graph ttl(const std::string& text) { return parse_turtle(text); }

// ---------- match oracle: linear scan ----------

inline std::vector<Triple> scan(const Graph& g, const std::optional<Term>& s, const std::optional<Term>& p,
                                const std::optional<Term>& o) {
  std::vector<Triple> out;
  for (const auto& t : g.triples())
    if ((!s || t.s == *s) && (!p || t.p == *p) && (!o || t.o == *o)) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------- isomorphism oracle: exhaustive bijection search ----------

inline std::vector<Term> blanks_of(const Graph& g) {
  std::set<Term> b;
  for (const auto& t : g) {
    if (t.s.is_blank()) b.insert(t.s);
    if (t.o.is_blank()) b.insert(t.o);
  }
  return {b.begin(), b.end()};
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  auto ba = blanks_of(a), bb = blanks_of(b);
  if (ba.size() != bb.size()) return false;
  std::vector<std::size_t> perm(bb.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::map<Term, Term> m;
    for (std::size_t i = 0; i < ba.size(); ++i) m[ba[i]] = bb[perm[i]];
    auto map = [&](const Term& t) { return t.is_blank() ? m.at(t) : t; };
    bool ok = true;
    for (const auto& t : a)
      if (!b.contains(Triple(map(t.s), t.p, map(t.o)))) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// ---------- random graphs ----------

struct GraphGen {
  std::mt19937 rng;
  explicit GraphGen(unsigned seed) : rng(seed) {}
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

  // Small term pools keep joins dense.
  Term node(std::size_t n_iri, std::size_t n_blank) {
    std::size_t k = pick(n_iri + n_blank);
    return k < n_iri ? soa("n" + std::to_string(k)) : Term::blank("gen:b" + std::to_string(k - n_iri));
  }
  Term pred(std::size_t n) { return soa("p" + std::to_string(pick(n))); }
  Term literal() {
    static const char* pool[] = {"plain", "with \"quotes\"", "multi\nline", "back\\slash", "tab\there", ""};
    return Term::literal(pool[pick(6)]);
  }

  Graph graph(std::size_t max_triples, std::size_t n_iri, std::size_t n_blank, std::size_t n_pred,
              bool literals) {
    Graph g;
    std::size_t target = 1 + pick(max_triples);
    for (std::size_t tries = 0; g.size() < target && tries < 20 * target; ++tries) {
      Term o = literals && coin(0.2) ? literal() : node(n_iri, n_blank);
      g.insert(node(n_iri, n_blank), pred(n_pred), o);
    }
    return g;
  }
};

// Same graph with every blank node renamed.
inline Graph relabel(const Graph& g, const std::string& tag) {
  Graph out;
  auto map = [&](const Term& t) { return t.is_blank() ? Term::blank(tag + t.value()) : t; };
  for (const auto& t : g) out.insert(map(t.s), t.p, map(t.o));
  return out;
}

// ---------- WHERE oracle: exhaustive assignment enumeration ----------
// Declarative reading of a group: an assignment satisfies it when every
// element holds. It agrees with the engine on rules whose filters and
// NOT EXISTS blocks come after the triples binding their outer variables and
// whose UNION branches mention the same variables; the generator below only
// produces such rules.

namespace detail {

using Assignment = std::vector<Term>;  // slot -> value, Term() when unassigned

inline void collect_vars(const GroupPattern& gp, bool outer_only, std::set<int>& out) {
  auto pt = [&](const PatternTerm& t) {
    if (t.is_var()) out.insert(t.index);
  };
  for (const auto& e : gp.elements) {
    switch (e.kind) {
      case Element::Kind::Triple: pt(e.triple.s), pt(e.triple.p), pt(e.triple.o); break;
      case Element::Kind::Union:
        collect_vars(*e.left, outer_only, out);
        collect_vars(*e.right, outer_only, out);
        break;
      case Element::Kind::Bind: out.insert(e.var); break;
      case Element::Kind::NotExists:
        if (!outer_only) collect_vars(*e.left, false, out);
        break;
      case Element::Kind::Filter: break;
    }
  }
}

inline const Term& value(const PatternTerm& t, const Assignment& a) {
  return t.is_const() ? t.term : a[static_cast<std::size_t>(t.index)];
}

inline bool expr_holds(const Expr& e, const Assignment& a) {
  switch (e.op) {
    case Expr::Op::Or:
      return std::any_of(e.kids.begin(), e.kids.end(), [&](const Expr& k) { return expr_holds(k, a); });
    case Expr::Op::And:
      return std::all_of(e.kids.begin(), e.kids.end(), [&](const Expr& k) { return expr_holds(k, a); });
    case Expr::Op::Eq:
    case Expr::Op::Neq: {
      const Term& l = value(e.lhs, a);
      const Term& r = value(e.rhs, a);
      if (l.is_none() || r.is_none()) return false;
      return (e.op == Expr::Op::Eq) == (l == r);
    }
  }
  return false;
}

struct Enumerator {
  const Graph& g;
  const std::vector<Term>& universe;

  bool holds(const GroupPattern& gp, Assignment& a) const {
    for (const auto& e : gp.elements) {
      switch (e.kind) {
        case Element::Kind::Triple: {
          Triple t(value(e.triple.s, a), value(e.triple.p, a), value(e.triple.o, a));
          if (!g.contains(t)) return false;
          break;
        }
        case Element::Kind::Union:
          if (!holds(*e.left, a) && !holds(*e.right, a)) return false;
          break;
        case Element::Kind::Filter:
          if (!expr_holds(e.expr, a)) return false;
          break;
        case Element::Kind::Bind:
          if (a[static_cast<std::size_t>(e.var)] != e.value) return false;
          break;
        case Element::Kind::NotExists:
          if (exists(*e.left, a)) return false;
          break;
      }
    }
    return true;
  }

  // Does some assignment of the still-unassigned variables of gp satisfy it?
  bool exists(const GroupPattern& gp, Assignment& a) const {
    std::set<int> vars;
    collect_vars(gp, false, vars);
    std::vector<int> free;
    for (int v : vars)
      if (a[static_cast<std::size_t>(v)].is_none()) free.push_back(v);
    bool found = false;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (found) return;
      if (i == free.size()) {
        found = holds(gp, a);
        return;
      }
      for (const auto& u : universe) {
        a[static_cast<std::size_t>(free[i])] = u;
        rec(i + 1);
        if (found) break;
      }
      a[static_cast<std::size_t>(free[i])] = Term();
    };
    rec(0);
    return found;
  }
};

}  // namespace detail

inline std::set<Binding> brute_where(const Graph& g, const RuleQuery& rq) {
  std::set<Term> uni;
  for (const auto& t : g) uni.insert(t.s), uni.insert(t.p), uni.insert(t.o);
  std::vector<Term> universe(uni.begin(), uni.end());
  std::set<int> outer;
  detail::collect_vars(rq.where, true, outer);
  std::vector<int> slots(outer.begin(), outer.end());
  detail::Enumerator en{g, universe};
  detail::Assignment a(rq.vars.size());
  std::set<Binding> out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == slots.size()) {
      if (en.holds(rq.where, a)) {
        Binding b;
        for (int s : slots) {
          const std::string& name = rq.vars[static_cast<std::size_t>(s)];
          if (name.rfind("[]", 0) == 0 || name.rfind("_:", 0) == 0) continue;
          b.emplace(name, a[static_cast<std::size_t>(s)]);
        }
        out.insert(b);
      }
      return;
    }
    for (const auto& u : universe) {
      a[static_cast<std::size_t>(slots[i])] = u;
      rec(i + 1);
    }
    a[static_cast<std::size_t>(slots[i])] = Term();
  };
  // Bound literal objects never occur in subject position, so values outside
  // the universe cannot satisfy any triple pattern and are safely skipped.
  rec(0);
  return out;
}

// Random rule in the engine dialect with at most six variables, in the
// shape the declarative oracle covers.
struct RuleGen {
  GraphGen& gen;
  std::string var(int i) { return "?v" + std::to_string(i); }
  std::string iri_const() { return "soa:n" + std::to_string(gen.pick(2)); }
  std::string pred_const() { return "soa:p" + std::to_string(gen.pick(2)); }

  std::string rule_text() {
    int n_outer = 1 + static_cast<int>(gen.pick(4));            // 1..4 outer variables
    int n_inner = static_cast<int>(gen.pick(7 - n_outer));      // keeps the total <= 6
    n_inner = std::min(n_inner, 2);
    std::vector<std::string> outer, inner;
    for (int i = 0; i < n_outer; ++i) outer.push_back(var(i));
    for (int i = 0; i < n_inner; ++i) inner.push_back(var(n_outer + i));

    auto outer_term = [&](bool allow_const) { return allow_const && gen.coin(0.1) ? iri_const() : outer[gen.pick(outer.size())]; };
    auto pred_term = [&](const std::vector<std::string>& vars) {
      return !vars.empty() && gen.coin(0.15) ? vars[gen.pick(vars.size())] : pred_const();
    };

    std::string where;
    std::set<std::string> used;
    auto note = [&](const std::string& t) {
      if (t[0] == '?') used.insert(t);
      return t;
    };
    int n_triples = 1 + static_cast<int>(gen.pick(2));
    for (int i = 0; i < n_triples; ++i)
      where += note(outer_term(true)) + " " + note(pred_term(outer)) + " " + note(outer_term(true)) + ". ";
    // Every outer variable must occur in a positive pattern.
    for (const auto& v : outer)
      if (!used.count(v)) {
        where += v + " " + pred_const() + " " + note(outer_term(false)) + ". ";
        used.insert(v);
      }
    if (gen.coin(0.4)) {
      std::string a = outer[gen.pick(outer.size())], b = outer[gen.pick(outer.size())];
      where += "{" + a + " " + pred_const() + " " + b + "} UNION {" + b + " " + pred_const() + " " + a + "} ";
    }
    if (gen.coin(0.5)) {
      auto cmp = [&]() {
        std::string l = outer[gen.pick(outer.size())];
        std::string r = gen.coin() ? outer[gen.pick(outer.size())] : iri_const();
        return "(" + l + (gen.coin() ? "=" : "!=") + r + ")";
      };
      std::string e = cmp();
      if (gen.coin(0.4)) e = "(" + e + (gen.coin() ? "&&" : "||") + cmp() + ")";
      where += "FILTER" + e + " ";
    }
    if (gen.coin(0.6)) {
      std::vector<std::string> all = outer;
      all.insert(all.end(), inner.begin(), inner.end());
      auto any = [&]() { return gen.coin(0.2) ? iri_const() : all[gen.pick(all.size())]; };
      std::string ne = any() + " " + pred_term(all) + " " + any() + ".";
      if (gen.coin(0.4)) ne += " " + any() + " " + pred_const() + " " + any() + ".";
      // A filter inside NOT EXISTS only reads variables its own triples bind.
      if (!inner.empty() && ne.find(inner[0] + " ") != std::string::npos && gen.coin(0.5))
        ne += " FILTER(" + inner[0] + "!=" + outer[0] + ")";
      where += "NOT EXISTS{" + ne + "} ";
    }
    return "CONSTRUCT{soa:x soa:y soa:z} WHERE{" + where + "}";
  }
};

// ---------- fixture helpers ----------

struct FixtureRun {
  Fixture fixture;
  RunResult result;
  Report report;
};

inline FixtureRun run_named(const std::string& name) {
  FixtureRun r{load_fixture(fixtures_dir(), name), {}, {}};
  r.result = run_fixture(r.fixture);
  r.report = extract_findings(r.result.graph, r.result.provenance);
  return r;
}

inline bool fired(const RunResult& r, const std::string& rule_id) {
  for (const auto& it : r.trace)
    for (const auto& f : it.firings)
      if (f.rule_id == rule_id && f.solutions > 0) return true;
  return false;
}

inline bool added_by(const RunResult& r, const std::string& rule_id) {
  for (const auto& it : r.trace)
    for (const auto& f : it.firings)
      if (f.rule_id == rule_id && f.added > 0) return true;
  return false;
}

inline std::vector<std::string> terminating_fixtures() {
  std::vector<std::string> out;
  for (const auto& f : fixture_index())
    if (!f.expect_nontermination) out.push_back(f.name);
  return out;
}

// Held-false (or other truth class) reification of (s, p, o) present in g.
inline bool has_reification(const Graph& g, const Term& truth, const Term& s, const Term& p, const Term& o) {
  bool found = false;
  g.for_each_match(nullptr, &vocab::subject, &s, [&](const Triple& t) {
    const Term& r = t.s;
    if (g.contains(Triple(r, vocab::predicate, p)) && g.contains(Triple(r, vocab::object, o)) &&
        g.contains(Triple(r, vocab::type, truth)) && g.contains(Triple(r, vocab::type, vocab::hold)))
      found = true;
  });
  return found;
}

// ---------- property suites ----------

struct SuiteResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t nonempty = 0;  // cases whose expected answer was not empty
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

inline SuiteResult brute_force_suite(std::size_t n, unsigned seed) {
  SuiteResult s;
  GraphGen gen(seed);
  RuleGen rg{gen};
  for (std::size_t i = 0; i < n; ++i) {
    Graph g = gen.graph(10, 2, 1, 2, false);
    std::string text = rg.rule_text();
    RuleQuery rq = parse_rule("random", text);
    ++s.cases;
    if (rq.vars.size() > 6) {
      s.fail("generator produced more than six variables: " + text);
      continue;
    }
    auto expected = brute_where(g, rq);
    if (!expected.empty()) ++s.nonempty;
    if (evaluate_where(g, rq) != expected) s.fail("disagreement on " + text);
  }
  return s;
}

// ds-rexist WHERE against the oracle over random 8-triple graphs.
inline SuiteResult ds_rexist_suite(std::size_t n, unsigned seed) {
  SuiteResult s;
  GraphGen gen(seed);
  const RuleQuery* rq = nullptr;
  RuleSet rs = builtin_ruleset({"core"});
  for (const auto& r : rs)
    if (r.rule_id == "ds-rexist") rq = &r.query;
  if (!rq) {
    s.fail("ds-rexist missing");
    return s;
  }
  const Term preds[] = {vocab::or1, vocab::or2, vocab::not_, vocab::type};
  for (std::size_t i = 0; i < n; ++i) {
    Graph g;
    while (g.size() < 8) {
      const Term& p = preds[gen.pick(4)];
      Term o = p == vocab::type ? vocab::Rexist : soa("e" + std::to_string(gen.pick(4)));
      g.insert(soa("e" + std::to_string(gen.pick(4))), p, o);
    }
    ++s.cases;
    if (evaluate_where(g, *rq) != brute_where(g, *rq)) s.fail("ds-rexist disagreement");
  }
  return s;
}

// Monotonicity, idempotence and rule-order independence on every terminating fixture.
inline SuiteResult engine_property_suite(unsigned seed) {
  SuiteResult s;
  std::mt19937 rng(seed);
  for (const auto& name : terminating_fixtures()) {
    auto f = load_fixture(fixtures_dir(), name);
    Graph input = fixture_input(f);
    RuleSet rules = fixture_rules(f);
    EngineConfig cfg;
    cfg.skolem = f.info.skolem;
    RunResult r = run_fixpoint(input, rules, cfg);
    ++s.cases;
    for (const auto& t : input)
      if (!r.graph.contains(t)) {
        s.fail(name + ": not monotone");
        break;
      }
    RunResult again = run_fixpoint(r.graph, rules, cfg);
    if (again.graph.size() != r.graph.size()) s.fail(name + ": not idempotent");
    for (int k = 0; k < 3; ++k) {
      RuleSet permuted;
      auto entries = rules.rules();
      if (k == 0)
        std::reverse(entries.begin(), entries.end());
      else
        std::shuffle(entries.begin(), entries.end(), rng);
      for (auto& e : entries) permuted.add(e);
      RunResult p = run_fixpoint(input, permuted, cfg);
      if (!(p.graph == r.graph)) s.fail(name + ": rule order changes the result");
    }
  }
  return s;
}

// Obligatory e with a negation ne closes the deontic hexagon under the dts layer.
inline SuiteResult hexagon_suite(std::size_t n, unsigned seed) {
  SuiteResult s;
  GraphGen gen(seed);
  for (std::size_t i = 0; i < n; ++i) {
    Term e = soa("act" + std::to_string(gen.pick(1000)));
    Term ne = soa("neg" + std::to_string(gen.pick(1000)));
    Graph data;
    data.insert(e, vocab::type, vocab::Obligatory);
    if (gen.coin())
      data.insert(e, vocab::not_, ne);
    else
      data.insert(ne, vocab::not_, e);
    // Unrelated noise that must not disturb the closure.
    for (std::size_t k = gen.pick(4); k > 0; --k)
      data.insert(soa("x" + std::to_string(gen.pick(5))), soa("has-agent"), soa("y" + std::to_string(gen.pick(5))));
    std::set<std::string> layers{"dts"};
    if (gen.coin()) layers.insert("core");
    Graph input = vocabulary();
    input.insert_all(data);
    RunResult r = run_fixpoint(input, builtin_ruleset(layers));
    ++s.cases;
    bool ok = r.graph.contains(Triple(e, vocab::type, vocab::Permitted)) &&
              has_reification(r.graph, vocab::false_, ne, vocab::type, vocab::Permitted) &&
              has_reification(r.graph, vocab::false_, ne, vocab::type, vocab::Obligatory) &&
              has_reification(r.graph, vocab::false_, e, vocab::type, vocab::Optional) &&
              has_reification(r.graph, vocab::false_, ne, vocab::type, vocab::Optional);
    if (!ok) s.fail("hexagon not closed for case " + std::to_string(i));
  }
  return s;
}

inline SuiteResult turtle_roundtrip_suite(std::size_t n, unsigned seed) {
  SuiteResult s;
  GraphGen gen(seed);
  for (std::size_t i = 0; i < n; ++i) {
    Graph g = gen.graph(15, 4, 4, 3, true);
    Graph back = parse_turtle(serialize_turtle(g));
    ++s.cases;
    if (!isomorphic(back, g)) s.fail("round trip failed on case " + std::to_string(i));
  }
  return s;
}

}  // namespace oracle
