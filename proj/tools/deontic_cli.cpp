// Command-line front end: parse, reach the fixpoint, report.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "deontic/pipeline.hpp"

namespace {

using namespace deontic;

enum Exit { kClean = 0, kError = 1, kFindings = 2 };

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::vector<std::string> layers;
  std::size_t max_iterations = 100;
  std::string format = "text";
  std::vector<std::string> fail_on;
  bool diff_only = false;
  std::string skolem = "deterministic";
};

std::set<std::string> split_layers(const std::vector<std::string>& raw) {
  std::set<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) {
        if (!is_layer(part)) throw UnknownLayer(part);
        out.insert(part);
      }
  }
  return out;
}

std::set<FindingKind> parse_fail_on(const std::vector<std::string>& raw) {
  if (raw.empty()) return default_fail_on();
  std::set<FindingKind> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) {
        auto k = kind_from_option(part);
        if (!k) throw Error("unknown --fail-on kind: " + part);
        out.insert(*k);
      }
  }
  return out;
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw Error("cannot write " + o.output);
  out << text;
}

PipelineConfig pipeline_config(const Options& o, bool trace) {
  PipelineConfig cfg;
  cfg.layers = split_layers(o.layers);
  cfg.engine.max_iterations = o.max_iterations;
  cfg.engine.trace_enabled = trace;
  cfg.engine.skolem = o.skolem == "fresh" ? SkolemMode::Fresh : SkolemMode::Deterministic;
  return cfg;
}

std::string render(const Options& o, const Report& r, const Graph& g) {
  return o.format == "json" ? render_json(r, g.prefixes()) : render_text(r, g);
}

int cmd_reason(const Options& o) {
  auto res = run_pipeline(load_inputs(o.inputs), pipeline_config(o, false));
  Graph out = o.diff_only ? diff_inferred(res.run, res.input) : res.run.graph;
  out.prefixes() = res.run.graph.prefixes();
  emit(o, serialize_turtle(out));
  return kClean;
}

int cmd_check(const Options& o) {
  auto fail_on = parse_fail_on(o.fail_on);
  auto res = run_pipeline(load_inputs(o.inputs), pipeline_config(o, false));
  auto report = extract_findings(res.run.graph, res.run.provenance);
  emit(o, render(o, report, res.run.graph));
  return has_failing_finding(report, fail_on) ? kFindings : kClean;
}

int cmd_findings(const Options& o) {
  auto fail_on = parse_fail_on(o.fail_on);
  Graph g = load_inputs(o.inputs);
  auto report = extract_findings(g);
  emit(o, render(o, report, g));
  return has_failing_finding(report, fail_on) ? kFindings : kClean;
}

int cmd_rules(const Options& o) {
  auto layers = split_layers(o.layers);
  std::ostringstream out;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : catalog()) {
    if (!layers.empty() && !layers.count(e.layer)) continue;
    if (o.format == "json")
      arr.push_back({{"id", e.rule_id}, {"layer", e.layer}, {"anchor", e.anchor}, {"text", e.text}});
    else
      out << e.layer << "\t" << e.rule_id << "\t" << e.anchor << "\n";
  }
  emit(o, o.format == "json" ? arr.dump() + "\n" : out.str());
  return kClean;
}

int cmd_trace(const Options& o) {
  auto res = run_pipeline(load_inputs(o.inputs), pipeline_config(o, true));
  std::ostringstream out;
  for (const auto& it : res.run.trace)
    for (const auto& f : it.firings)
      if (f.solutions > 0)
        out << nlohmann::json{{"iteration", it.iteration}, {"rule", f.rule_id}, {"solutions", f.solutions},
                              {"added", f.added}}
                   .dump()
            << "\n";
  emit(o, out.str());
  return kClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conflict-tolerant deontic reasoner over RDF"};
  app.require_subcommand(1);
  Options o;

  auto inputs = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-i,--input", o.inputs, "Turtle input file (repeatable)")->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "Output file (default stdout)"); };
  auto layers = [&](CLI::App* sub) {
    sub->add_option("--layers,--layer", o.layers, "Comma-separated built-in layers (default all)");
  };
  auto engine = [&](CLI::App* sub) {
    sub->add_option("--max-iterations", o.max_iterations, "Fixpoint iteration bound")->check(CLI::PositiveNumber);
    sub->add_option("--skolem", o.skolem, "Blank naming policy for rule templates")
        ->check(CLI::IsMember({"deterministic", "fresh"}));
  };
  auto format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  };
  auto fail_on = [&](CLI::App* sub) {
    sub->add_option("--fail-on", o.fail_on,
                    "Finding kinds that make the exit status 2 "
                    "(contradiction,conflict,violation,necessary-violation,compliance)");
  };

  auto* reason = app.add_subcommand("reason", "Materialize the inferred graph as Turtle");
  inputs(reason, true), output(reason), layers(reason), engine(reason);
  reason->add_flag("--diff-only", o.diff_only, "Write only the inferred triples");

  auto* check = app.add_subcommand("check", "Run the pipeline and report findings");
  inputs(check, true), output(check), layers(check), engine(check), format(check), fail_on(check);

  auto* findings = app.add_subcommand("findings", "Report findings of a saved inferred graph");
  inputs(findings, true), output(findings), format(findings), fail_on(findings);

  auto* rules = app.add_subcommand("rules", "List the built-in rule catalog");
  output(rules), layers(rules), format(rules);

  auto* trace = app.add_subcommand("trace", "Emit per-iteration rule firings as JSON lines");
  inputs(trace, true), output(trace), layers(trace), engine(trace);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kClean : kError;
  }

  try {
    if (*reason) return cmd_reason(o);
    if (*check) return cmd_check(o);
    if (*findings) return cmd_findings(o);
    if (*rules) return cmd_rules(o);
    if (*trace) return cmd_trace(o);
  } catch (const InputSyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const RuleSyntaxError& e) {
    std::cerr << "error: rule syntax: " << e.what() << "\n";
  } catch (const MaxIterationsExceeded& e) {
    std::cerr << "error: max iterations exceeded: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kError;
}
