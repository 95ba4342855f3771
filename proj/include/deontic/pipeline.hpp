#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "deontic/engine.hpp"
#include "deontic/errors.hpp"
#include "deontic/findings.hpp"
#include "deontic/ontology.hpp"
#include "deontic/turtle.hpp"

namespace deontic {

// Raised for a Turtle error in a named input; keeps the original position.
struct InputSyntaxError : Error {
  std::string path;
  InputSyntaxError(const std::string& file, const SyntaxError& e)
      : Error("syntax error in " + file + " at " + e.what()), path(file) {}
};

// Union of several Turtle documents. A lone document keeps its blank labels
// unscoped so that labels written by `reason` survive a reload unchanged.
inline Graph load_inputs(const std::vector<std::string>& paths) {
  Graph merged;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    TurtleOptions opt{paths.size() == 1 ? std::string() : "in" + std::to_string(i)};
    Graph g;
    try {
      g = parse_turtle(read_file(paths[i]), opt);
    } catch (const SyntaxError& e) {
      throw InputSyntaxError(paths[i], e);
    }
    for (const auto& [p, ns] : g.prefixes()) merged.prefixes().emplace(p, ns);
    merged.insert_all(g);
  }
  return merged;
}

struct PipelineConfig {
  std::set<std::string> layers;  // empty means every built-in layer
  EngineConfig engine;
};

struct PipelineResult {
  Graph input;  // vocabulary plus data, rule individuals removed
  RuleSet rules;
  RunResult run;
};

inline PipelineResult run_pipeline(const Graph& merged, const PipelineConfig& cfg) {
  PipelineResult out;
  const auto& all = layer_names();
  out.rules = builtin_ruleset(cfg.layers.empty() ? std::set<std::string>(all.begin(), all.end()) : cfg.layers);
  out.rules.append(load_rules(merged));
  out.input = vocabulary();
  out.input.insert_all(strip_rules(merged));
  for (const auto& [p, ns] : merged.prefixes()) out.input.prefixes().emplace(p, ns);
  out.run = run_fixpoint(out.input, out.rules, cfg.engine);
  out.run.graph.prefixes() = out.input.prefixes();
  return out;
}

// True when the report holds at least one finding of a kind in `fail_on`.
inline bool has_failing_finding(const Report& r, const std::set<FindingKind>& fail_on) {
  for (const auto& f : r.findings)
    if (fail_on.count(f.kind)) return true;
  return false;
}

inline std::set<FindingKind> default_fail_on() {
  return {FindingKind::Contradiction, FindingKind::Conflict, FindingKind::Violation, FindingKind::NecessaryViolation};
}

}  // namespace deontic
