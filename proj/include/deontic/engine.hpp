#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "deontic/errors.hpp"
#include "deontic/eval.hpp"
#include "deontic/graph.hpp"
#include "deontic/render.hpp"
#include "deontic/rule.hpp"
#include "deontic/vocab.hpp"

namespace deontic {

struct RuleEntry {
  std::string rule_id;
  RuleQuery query;
  std::string layer;  // "user" for rules loaded from data
};

class RuleSet {
 public:
  void add(RuleEntry e) {
    for (const auto& r : rules_)
      if (r.rule_id == e.rule_id) throw DuplicateRuleId(e.rule_id);
    rules_.push_back(std::move(e));
  }
  void append(const RuleSet& other) {
    for (const auto& r : other.rules_) add(r);
  }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  const std::vector<RuleEntry>& rules() const { return rules_; }
  std::vector<RuleEntry>& rules() { return rules_; }
  auto begin() const { return rules_.begin(); }
  auto end() const { return rules_.end(); }
  bool contains(const std::string& id) const {
    return std::any_of(rules_.begin(), rules_.end(), [&](const RuleEntry& r) { return r.rule_id == id; });
  }

 private:
  std::vector<RuleEntry> rules_;
};

struct EngineConfig {
  std::size_t max_iterations = 100;
  bool trace_enabled = true;
  SkolemMode skolem = SkolemMode::Deterministic;
};

struct RuleFiring {
  std::string rule_id;
  std::size_t solutions = 0;
  std::size_t added = 0;
};

struct IterationTrace {
  std::size_t iteration = 0;
  std::vector<RuleFiring> firings;
};

struct Provenance {
  std::string rule_id;
  std::size_t iteration = 0;
};

using ProvenanceMap = std::map<Triple, Provenance>;

struct RunResult {
  Graph graph;
  std::size_t iterations_used = 0;
  ProvenanceMap provenance;
  std::vector<IterationTrace> trace;
};

namespace detail {

inline std::string rule_id_for(const Graph& g, const Term& subject) {
  if (auto label = g.object(subject, vocab::label); label && label->is_literal() && !label->value().empty())
    return label->value();
  if (subject.is_iri()) {
    const std::string& v = subject.value();
    auto pos = v.find_last_of("#/");
    std::string local = pos == std::string::npos ? v : v.substr(pos + 1);
    return local.empty() ? v : local;
  }
  return blank_display(subject);
}

}  // namespace detail

// Rule individuals of g, in term order of their subjects.
inline RuleSet load_rules(const Graph& g) {
  RuleSet rs;
  std::vector<Term> subjects;
  g.for_each_match(nullptr, &vocab::type, &vocab::InferenceRule, [&](const Triple& t) { subjects.push_back(t.s); });
  std::sort(subjects.begin(), subjects.end());
  for (const Term& s : subjects) {
    auto body = g.objects(s, vocab::has_sparql_code);
    auto lit = std::find_if(body.begin(), body.end(), [](const Term& t) { return t.is_literal(); });
    if (lit == body.end()) throw MissingRuleBody(compact(s, g.prefixes()));
    std::string id = detail::rule_id_for(g, s);
    rs.add({id, parse_rule(id, lit->value(), g.prefixes()), "user"});
  }
  return rs;
}

// Data part of a mixed document: every triple whose subject is a rule individual is removed.
inline Graph strip_rules(const Graph& g) {
  std::set<Term> rule_subjects;
  g.for_each_match(nullptr, &vocab::type, &vocab::InferenceRule,
                   [&](const Triple& t) { rule_subjects.insert(t.s); });
  Graph out;
  out.prefixes() = g.prefixes();
  for (const auto& t : g)
    if (!rule_subjects.count(t.s)) out.insert(t);
  return out;
}

// Naive fixpoint: every rule sees the iteration-start snapshot; results merge afterwards.
inline RunResult run_fixpoint(const Graph& data, const RuleSet& rules, const EngineConfig& cfg = {}) {
  if (cfg.max_iterations < 1) throw Error("max_iterations must be at least 1");
  RunResult res;
  res.graph = data;
  std::size_t last_added = 0;
  for (std::size_t iter = 1;; ++iter) {
    if (iter > cfg.max_iterations) throw MaxIterationsExceeded(cfg.max_iterations, last_added);
    const Graph& snapshot = res.graph;
    std::vector<std::pair<std::size_t, Graph>> produced;
    IterationTrace it{iter, {}};
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const RuleEntry& r = rules.rules()[i];
      auto sols = evaluate_where(snapshot, r.query);
      it.firings.push_back({r.rule_id, sols.size(), 0});
      if (sols.empty()) continue;
      produced.emplace_back(i, instantiate(r.query, sols, {cfg.skolem, iter}));
    }
    std::size_t added = 0;
    for (auto& [i, g] : produced) {
      for (const auto& t : g) {
        if (res.graph.insert(t)) {
          ++added;
          ++it.firings[i].added;
          res.provenance.emplace(t, Provenance{rules.rules()[i].rule_id, iter});
        }
      }
    }
    if (cfg.trace_enabled) res.trace.push_back(std::move(it));
    res.iterations_used = iter;
    last_added = added;
    if (added == 0) return res;
  }
}

inline Graph diff_inferred(const RunResult& result, const Graph& input) {
  return difference(result.graph, input);
}

}  // namespace deontic
