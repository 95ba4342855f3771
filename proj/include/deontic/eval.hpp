#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "deontic/errors.hpp"
#include "deontic/graph.hpp"
#include "deontic/render.hpp"
#include "deontic/rule.hpp"

namespace deontic {

using Binding = std::map<std::string, Term>;

enum class SkolemMode {
  Deterministic,  // label depends on rule and solution only
  Fresh,          // label also depends on the iteration, so each firing mints new nodes
};

struct SkolemPolicy {
  SkolemMode mode = SkolemMode::Deterministic;
  std::size_t iteration = 0;
};

namespace detail {

using Row = std::vector<Term>;

inline const Term* resolve(const PatternTerm& pt, const Row& row) {
  if (pt.is_const()) return &pt.term;
  const Term& v = row[static_cast<std::size_t>(pt.index)];
  return v.is_none() ? nullptr : &v;
}

inline bool eval_expr(const Expr& e, const Row& row) {
  switch (e.op) {
    case Expr::Op::Or:
      for (const auto& k : e.kids)
        if (eval_expr(k, row)) return true;
      return false;
    case Expr::Op::And:
      for (const auto& k : e.kids)
        if (!eval_expr(k, row)) return false;
      return true;
    case Expr::Op::Eq:
    case Expr::Op::Neq: {
      const Term* a = resolve(e.lhs, row);
      const Term* b = resolve(e.rhs, row);
      if (!a || !b) return false;
      return (e.op == Expr::Op::Eq) == (*a == *b);
    }
  }
  return false;
}

inline void dedupe(std::vector<Row>& rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

class Evaluator {
 public:
  Evaluator(const Graph& g, const std::vector<std::string>& vars) : g_(g), vars_(vars) {}

  std::vector<Row> group(const GroupPattern& gp, std::vector<Row> rows) const {
    for (const auto& e : gp.elements) {
      if (rows.empty()) break;
      rows = element(e, std::move(rows));
    }
    return rows;
  }

 private:
  std::vector<Row> element(const Element& e, std::vector<Row> rows) const {
    std::vector<Row> out;
    switch (e.kind) {
      case Element::Kind::Triple:
        for (const Row& r : rows) extend(e.triple, r, out);
        dedupe(out);
        return out;
      case Element::Kind::Union: {
        out = group(*e.left, rows);
        auto right = group(*e.right, std::move(rows));
        out.insert(out.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
        dedupe(out);
        return out;
      }
      case Element::Kind::NotExists:
        for (Row& r : rows)
          if (group(*e.left, {r}).empty()) out.push_back(std::move(r));
        return out;
      case Element::Kind::Filter:
        for (Row& r : rows)
          if (eval_expr(e.expr, r)) out.push_back(std::move(r));
        return out;
      case Element::Kind::Bind:
        for (Row& r : rows) {
          Term& slot = r[static_cast<std::size_t>(e.var)];
          if (!slot.is_none()) throw BindConflict(vars_[static_cast<std::size_t>(e.var)]);
          slot = e.value;
          out.push_back(std::move(r));
        }
        dedupe(out);
        return out;
    }
    return out;
  }

  void extend(const TriplePattern& tp, const Row& row, std::vector<Row>& out) const {
    const Term* s = resolve(tp.s, row);
    const Term* p = resolve(tp.p, row);
    const Term* o = resolve(tp.o, row);
    g_.for_each_match(s, p, o, [&](const Triple& t) {
      Row next = row;
      auto bind = [&](const PatternTerm& pt, const Term& v) {
        if (!pt.is_var()) return true;
        Term& slot = next[static_cast<std::size_t>(pt.index)];
        if (slot.is_none()) {
          slot = v;
          return true;
        }
        return slot == v;
      };
      if (bind(tp.s, t.s) && bind(tp.p, t.p) && bind(tp.o, t.o)) out.push_back(std::move(next));
    });
  }

  const Graph& g_;
  const std::vector<std::string>& vars_;
};

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

}  // namespace detail

// Solutions as internal rows indexed by variable slot; unbound slots hold Term().
inline std::vector<detail::Row> evaluate_rows(const Graph& g, const RuleQuery& rq, const Binding& seed = {}) {
  detail::Row start(rq.vars.size());
  for (const auto& [name, value] : seed) {
    int i = rq.var_index(name);
    if (i >= 0) start[static_cast<std::size_t>(i)] = value;
  }
  return detail::Evaluator(g, rq.vars).group(rq.where, {start});
}

// Set of solutions over the rule's user-visible variables.
// Variables standing for WHERE blank nodes are projected away.
inline std::set<Binding> evaluate_where(const Graph& g, const RuleQuery& rq, const Binding& seed = {}) {
  std::set<Binding> out;
  for (const auto& row : evaluate_rows(g, rq, seed)) {
    Binding b;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].is_none()) continue;
      const std::string& name = rq.vars[i];
      if (name.rfind("[]", 0) == 0 || name.rfind("_:", 0) == 0) continue;
      b.emplace(name, row[i]);
    }
    out.insert(std::move(b));
  }
  return out;
}

// Skolem signature: rule id plus sorted (variable, canonical term) pairs of the solution.
inline std::string skolem_signature(const std::string& rule_id, const Binding& b, const SkolemPolicy& policy) {
  std::string sig = rule_id;
  for (const auto& [name, value] : b) {
    sig += '\x1f';
    sig += name;
    sig += '=';
    sig += canonical(value);
  }
  if (policy.mode == SkolemMode::Fresh) sig += "\x1f@iteration=" + std::to_string(policy.iteration);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(detail::fnv1a(sig)));
  return buf;
}

inline Graph instantiate(const RuleQuery& rq, const std::set<Binding>& solutions, const SkolemPolicy& policy = {}) {
  Graph out;
  for (const auto& b : solutions) {
    std::vector<Term> blanks;
    if (rq.template_blanks > 0) {
      std::string hash = skolem_signature(rq.rule_id, b, policy);
      for (int n = 0; n < rq.template_blanks; ++n)
        blanks.push_back(Term::blank("skolem:" + rq.rule_id + ":" + std::to_string(n) + ":" + hash));
    }
    auto term = [&](const PatternTerm& pt) -> Term {
      if (pt.is_const()) return pt.term;
      if (pt.is_blank()) return blanks[static_cast<std::size_t>(pt.index)];
      const std::string& name = rq.vars[static_cast<std::size_t>(pt.index)];
      auto it = b.find(name);
      if (it == b.end()) throw UnboundTemplateVariable(rq.rule_id, name);
      return it->second;
    };
    for (const auto& tp : rq.construct_template) {
      Triple t(term(tp.s), term(tp.p), term(tp.o));
      // Ill-formed instantiations (literal subject, non-IRI predicate) are dropped.
      if (t.well_formed()) out.insert(t);
    }
  }
  return out;
}

}  // namespace deontic
