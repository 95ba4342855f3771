#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "deontic/engine.hpp"
#include "deontic/graph.hpp"
#include "deontic/render.hpp"
#include "deontic/vocab.hpp"

namespace deontic {

enum class FindingKind { Contradiction, Conflict, Violation, Compliance, NecessaryViolation };

struct FindingKindInfo {
  FindingKind kind;
  const char* name;     // JSON and API spelling
  const char* word;     // text report spelling
  const char* option;   // --fail-on spelling
  const Term* predicate;
};

inline const std::array<FindingKindInfo, 5>& finding_kinds() {
  static const std::array<FindingKindInfo, 5> k{{
      {FindingKind::Contradiction, "Contradiction", "CONTRADICTION", "contradiction", &vocab::is_in_contradiction_with},
      {FindingKind::Conflict, "Conflict", "CONFLICT", "conflict", &vocab::is_in_conflict_with},
      {FindingKind::Violation, "Violation", "VIOLATION", "violation", &vocab::is_violated_by},
      {FindingKind::Compliance, "Compliance", "COMPLIANCE", "compliance", &vocab::is_complied_with_by},
      {FindingKind::NecessaryViolation, "NecessaryViolation", "NECESSARY-VIOLATION", "necessary-violation",
       &vocab::is_necessarily_violated_by},
  }};
  return k;
}

inline const FindingKindInfo& kind_info(FindingKind k) { return finding_kinds()[static_cast<std::size_t>(k)]; }

inline std::optional<FindingKind> kind_for_predicate(const Term& p) {
  for (const auto& k : finding_kinds())
    if (*k.predicate == p) return k.kind;
  return std::nullopt;
}

inline std::optional<FindingKind> kind_from_option(const std::string& s) {
  for (const auto& k : finding_kinds())
    if (s == k.option) return k.kind;
  return std::nullopt;
}

// A reified statement seen from a finding.
struct StatementView {
  Term node;
  std::optional<Term> s, p, o;
  std::vector<Term> classes;  // truth classes in fixed order
  bool complete() const { return s && p && o; }
};

struct Finding {
  FindingKind kind;
  StatementView left, right;
  std::optional<Provenance> provenance;
};

struct Report {
  std::vector<Finding> findings;
  std::map<std::string, std::size_t> counts;  // keyed by kind name, only kinds present
  std::vector<Term> malformed;                // finding endpoints lacking a complete reification
  std::size_t count(FindingKind k) const {
    auto it = counts.find(kind_info(k).name);
    return it == counts.end() ? 0 : it->second;
  }
};

namespace detail {

inline StatementView view_of(const Graph& g, const Term& node) {
  StatementView v;
  v.node = node;
  v.s = g.object(node, vocab::subject);
  v.p = g.object(node, vocab::predicate);
  v.o = g.object(node, vocab::object);
  for (const Term* c : {&vocab::true_, &vocab::false_, &vocab::hold, &vocab::necessary, &vocab::possible})
    if (g.contains(Triple(node, vocab::type, *c))) v.classes.push_back(*c);
  return v;
}

inline bool has_class(const StatementView& v, const Term& c) {
  return std::find(v.classes.begin(), v.classes.end(), c) != v.classes.end();
}

// Eventuality summary: named individuals by name, anonymous ones by class and roles.
inline std::string eventuality_text(const Graph& g, const Term& e) {
  const PrefixMap& pm = g.prefixes();
  if (!e.is_blank()) return short_name(e, pm);
  if (g.object(e, vocab::subject)) {
    // A nested reification: summarized, never expanded further.
    auto s = g.object(e, vocab::subject), p = g.object(e, vocab::predicate), o = g.object(e, vocab::object);
    auto name = [&](const std::optional<Term>& t) { return t ? short_name(*t, pm) : std::string("?"); };
    return "{" + name(s) + " " + name(p) + " " + name(o) + "}";
  }
  std::string cls;
  std::vector<std::string> roles;
  g.for_each_match(&e, nullptr, nullptr, [&](const Triple& t) {
    if (t.p == vocab::type) {
      if (cls.empty() && g.contains(Triple(t.o, vocab::type, vocab::Eventuality))) cls = short_name(t.o, pm);
    } else if (g.contains(Triple(t.p, vocab::type, vocab::ThematicRole))) {
      std::string role = short_name(t.p, pm);
      if (role.rfind("has-", 0) == 0) role = role.substr(4);
      roles.push_back(role + "=" + short_name(t.o, pm));
    }
  });
  std::sort(roles.begin(), roles.end());
  std::string out = cls.empty() ? blank_display(e) : cls;
  out += "[";
  for (std::size_t i = 0; i < roles.size(); ++i) out += (i ? "," : "") + roles[i];
  return out + "]";
}

}  // namespace detail

// Human-readable rendering of a statement, e.g. "not Permitted(Pay[agent=John])".
inline std::string statement_text(const Graph& g, const StatementView& v) {
  const PrefixMap& pm = g.prefixes();
  if (!v.complete()) return "malformed(" + compact(v.node, pm) + ")";
  std::string prefix;
  if (detail::has_class(v, vocab::false_)) prefix += "not ";
  if (detail::has_class(v, vocab::necessary)) prefix += "necessarily ";
  if (detail::has_class(v, vocab::possible)) prefix += "possibly ";
  std::string subj = detail::eventuality_text(g, *v.s);
  if (*v.p == vocab::type) return prefix + short_name(*v.o, pm) + "(" + subj + ")";
  return prefix + short_name(*v.p, pm) + "(" + subj + ", " + short_name(*v.o, pm) + ")";
}

inline Report extract_findings(const Graph& g, const ProvenanceMap& prov = {}) {
  Report r;
  std::set<Term> malformed;
  for (const auto& info : finding_kinds()) {
    g.for_each_match(nullptr, info.predicate, nullptr, [&](const Triple& t) {
      Finding f{info.kind, detail::view_of(g, t.s), detail::view_of(g, t.o), std::nullopt};
      if (auto it = prov.find(t); it != prov.end()) f.provenance = it->second;
      if (!f.left.complete()) malformed.insert(t.s);
      if (!f.right.complete()) malformed.insert(t.o);
      r.findings.push_back(std::move(f));
    });
  }
  auto key = [&](const Finding& f) {
    return std::make_tuple(static_cast<int>(f.kind), statement_text(g, f.left), statement_text(g, f.right),
                           canonical(f.left.node), canonical(f.right.node));
  };
  std::stable_sort(r.findings.begin(), r.findings.end(),
                   [&](const Finding& a, const Finding& b) { return key(a) < key(b); });
  for (const auto& f : r.findings) ++r.counts[kind_info(f.kind).name];
  r.malformed.assign(malformed.begin(), malformed.end());
  return r;
}

// The text and JSON renderers need the graph to summarize anonymous eventualities.
inline std::string render_text(const Report& r, const Graph& g) {
  std::ostringstream out;
  for (const auto& f : r.findings) {
    out << kind_info(f.kind).word << ": " << statement_text(g, f.left) << " vs " << statement_text(g, f.right);
    if (f.provenance) out << " -- rule " << f.provenance->rule_id << "@iter" << f.provenance->iteration;
    out << "\n";
  }
  for (const auto& m : r.malformed) out << "MALFORMED: " << compact(m, g.prefixes()) << "\n";
  out << "SUMMARY:";
  if (r.counts.empty()) out << " no findings";
  for (const auto& info : finding_kinds())
    if (auto c = r.count(info.kind)) out << " " << info.option << "=" << c;
  out << "\n";
  return out.str();
}

inline nlohmann::json report_json(const Report& r, const PrefixMap& pm) {
  using nlohmann::json;
  auto term = [&](const std::optional<Term>& t) { return t ? json(compact(*t, pm)) : json(nullptr); };
  auto view = [&](const StatementView& v) {
    json classes = json::array();
    for (const auto& c : v.classes) classes.push_back(compact(c, pm));
    return json{{"classes", classes}, {"node", compact(v.node, pm)}, {"s", term(v.s)}, {"p", term(v.p)}, {"o", term(v.o)}};
  };
  json findings = json::array();
  for (const auto& f : r.findings) {
    findings.push_back({{"kind", kind_info(f.kind).name},
                        {"left", view(f.left)},
                        {"right", view(f.right)},
                        {"rule", f.provenance ? json(f.provenance->rule_id) : json(nullptr)},
                        {"iteration", f.provenance ? json(f.provenance->iteration) : json(nullptr)}});
  }
  json doc{{"version", 1}, {"counts", json::object()}, {"findings", findings}};
  for (const auto& [k, n] : r.counts) doc["counts"][k] = n;
  if (!r.malformed.empty()) {
    json m = json::array();
    for (const auto& t : r.malformed) m.push_back(compact(t, pm));
    doc["malformed"] = m;
  }
  return doc;
}

// Keys are sorted because nlohmann::json objects are ordered maps.
inline std::string render_json(const Report& r, const PrefixMap& pm = builtin_prefixes()) {
  return report_json(r, pm).dump() + "\n";
}

}  // namespace deontic
