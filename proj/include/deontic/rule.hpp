#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "deontic/errors.hpp"
#include "deontic/graph.hpp"
#include "deontic/lexer.hpp"
#include "deontic/term.hpp"
#include "deontic/vocab.hpp"

namespace deontic {

// A pattern position: a ground term, a variable slot, or a template blank node.
struct PatternTerm {
  enum class Kind { Const, Var, Blank } kind = Kind::Const;
  Term term;       // Const
  int index = -1;  // Var: variable slot; Blank: template blank ordinal

  static PatternTerm constant(Term t) { return {Kind::Const, std::move(t), -1}; }
  static PatternTerm var(int i) { return {Kind::Var, Term(), i}; }
  static PatternTerm blank(int i) { return {Kind::Blank, Term(), i}; }
  bool is_var() const { return kind == Kind::Var; }
  bool is_const() const { return kind == Kind::Const; }
  bool is_blank() const { return kind == Kind::Blank; }
};

struct TriplePattern {
  PatternTerm s, p, o;
};

struct Expr {
  enum class Op { Or, And, Eq, Neq } op = Op::Eq;
  std::vector<Expr> kids;  // Or / And
  PatternTerm lhs, rhs;    // Eq / Neq
};

struct GroupPattern;

struct Element {
  enum class Kind { Triple, Union, NotExists, Filter, Bind } kind = Kind::Triple;
  TriplePattern triple;
  std::shared_ptr<GroupPattern> left, right;  // Union uses both; NotExists uses left
  Expr expr;
  Term value;  // Bind
  int var = -1;
};

struct GroupPattern {
  std::vector<Element> elements;
};

struct RuleQuery {
  std::string rule_id;
  std::string source;
  std::vector<TriplePattern> construct_template;
  GroupPattern where;
  std::vector<std::string> vars;  // slot -> variable name
  int template_blanks = 0;

  int var_index(const std::string& name) const {
    auto it = std::find(vars.begin(), vars.end(), name);
    return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
  }
};

namespace detail {

struct RuleFail {
  std::string rule_id;
  [[noreturn]] void operator()(const std::string& msg, std::size_t line, std::size_t col) const {
    throw RuleSyntaxError(rule_id, msg, line, col);
  }
};

inline std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

class RuleParser {
 public:
  RuleParser(std::string rule_id, std::string_view text, const PrefixMap& prefixes)
      : id_(std::move(rule_id)), lex_(text, RuleFail{id_}), prefixes_(builtin_prefixes()) {
    for (const auto& [k, v] : prefixes) prefixes_[k] = v;
    q_.rule_id = id_;
    q_.source = std::string(text);
  }

  RuleQuery parse() {
    keyword("CONSTRUCT");
    expect(Tok::LBrace, "'{' after CONSTRUCT");
    in_template_ = true;
    while (lex_.peek().kind != Tok::RBrace) {
      if (lex_.peek().kind == Tok::Dot) {
        lex_.next();
        continue;
      }
      if (lex_.peek().kind == Tok::End) fail("unterminated CONSTRUCT template", lex_.peek());
      triples_block(nullptr);
    }
    lex_.next();
    in_template_ = false;
    keyword("WHERE");
    q_.where = group();
    if (lex_.peek().kind != Tok::End) fail("unexpected input after WHERE clause", lex_.peek());
    check_template_vars();
    return std::move(q_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const Token& t) {
    throw RuleSyntaxError(id_, msg, t.line, t.column);
  }

  bool is_keyword(const Token& t, const char* kw) const { return t.kind == Tok::Word && upper(t.text) == kw; }

  void keyword(const char* kw) {
    Token t = lex_.next();
    if (!is_keyword(t, kw)) fail(std::string("expected ") + kw, t);
  }

  Token expect(Tok k, const char* what) {
    Token t = lex_.next();
    if (t.kind != k) fail(std::string("expected ") + what, t);
    return t;
  }

  int slot(const std::string& name) {
    int i = q_.var_index(name);
    if (i >= 0) return i;
    q_.vars.push_back(name);
    return static_cast<int>(q_.vars.size()) - 1;
  }

  // Blank nodes in WHERE behave as fresh variables; their names cannot clash with ?names.
  PatternTerm anonymous() {
    if (in_template_) return PatternTerm::blank(q_.template_blanks++);
    return PatternTerm::var(slot("[]" + std::to_string(++where_blanks_)));
  }

  PatternTerm labelled_blank(const std::string& label) {
    if (in_template_) {
      auto it = template_labels_.find(label);
      if (it != template_labels_.end()) return PatternTerm::blank(it->second);
      int i = q_.template_blanks++;
      template_labels_[label] = i;
      return PatternTerm::blank(i);
    }
    return PatternTerm::var(slot("_:" + label));
  }

  Term expand(const Token& t) {
    auto it = prefixes_.find(t.text);
    if (it == prefixes_.end()) fail("undeclared prefix '" + t.text + ":'", t);
    return Term::iri(it->second + t.aux);
  }

  bool starts_term(const Token& t) const {
    return t.kind == Tok::Var || t.kind == Tok::IriRef || t.kind == Tok::PName || t.kind == Tok::BlankLabel ||
           t.kind == Tok::LBracket || t.kind == Tok::String;
  }

  PatternTerm simple_term(const Token& t) {
    switch (t.kind) {
      case Tok::Var:
        if (in_template_) template_vars_.push_back({t.text, t});
        return PatternTerm::var(slot(t.text));
      case Tok::IriRef: return PatternTerm::constant(Term::iri(t.text));
      case Tok::PName: return PatternTerm::constant(expand(t));
      case Tok::BlankLabel: return labelled_blank(t.text);
      case Tok::String: return PatternTerm::constant(Term::literal(t.text));
      default: fail("expected a term", t);
    }
  }

  // out == nullptr means the template.
  void emit(std::vector<Element>* out, const PatternTerm& s, const PatternTerm& p, const PatternTerm& o) {
    TriplePattern tp{s, p, o};
    if (out) {
      Element e;
      e.kind = Element::Kind::Triple;
      e.triple = tp;
      out->push_back(std::move(e));
    } else {
      q_.construct_template.push_back(tp);
    }
  }

  PatternTerm node(std::vector<Element>* out) {
    if (lex_.peek().kind == Tok::LBracket) {
      lex_.next();
      PatternTerm b = anonymous();
      if (lex_.peek().kind != Tok::RBracket) property_list(out, b);
      expect(Tok::RBracket, "']'");
      return b;
    }
    return simple_term(lex_.next());
  }

  PatternTerm verb() {
    Token t = lex_.next();
    if (t.kind == Tok::Word && t.text == "a") return PatternTerm::constant(vocab::type);
    if (t.kind == Tok::Var) {
      if (in_template_) template_vars_.push_back({t.text, t});
      return PatternTerm::var(slot(t.text));
    }
    if (t.kind == Tok::IriRef) return PatternTerm::constant(Term::iri(t.text));
    if (t.kind == Tok::PName) return PatternTerm::constant(expand(t));
    fail("expected a predicate", t);
  }

  void property_list(std::vector<Element>* out, const PatternTerm& subj) {
    for (;;) {
      PatternTerm p = verb();
      for (;;) {
        PatternTerm o = node(out);
        emit(out, subj, p, o);
        if (lex_.peek().kind != Tok::Comma) break;
        lex_.next();
      }
      if (lex_.peek().kind != Tok::Semicolon) return;
      while (lex_.peek().kind == Tok::Semicolon) lex_.next();
      Tok k = lex_.peek().kind;
      if (k == Tok::Dot || k == Tok::RBracket || k == Tok::RBrace) return;
    }
  }

  void triples_block(std::vector<Element>* out) {
    bool bracket_subject = lex_.peek().kind == Tok::LBracket;
    PatternTerm subj = node(out);
    const Token& n = lex_.peek();
    if (bracket_subject && (n.kind == Tok::Dot || n.kind == Tok::RBrace)) return;
    property_list(out, subj);
    const Token& after = lex_.peek();
    if (after.kind == Tok::Dot) {
      lex_.next();
      return;
    }
    // The '.' may be omitted before '}', '{' or a keyword, but not before another triple.
    if (starts_term(after)) fail("expected '.' between triple patterns", after);
  }

  GroupPattern group() {
    expect(Tok::LBrace, "'{'");
    GroupPattern gp;
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::RBrace) {
        lex_.next();
        return gp;
      }
      if (t.kind == Tok::End) fail("unterminated group pattern", t);
      if (t.kind == Tok::Dot) {
        lex_.next();
        continue;
      }
      if (t.kind == Tok::LBrace) {
        GroupPattern first = group();
        if (!is_keyword(lex_.peek(), "UNION")) {
          for (auto& e : first.elements) gp.elements.push_back(std::move(e));
          continue;
        }
        auto acc = std::make_shared<GroupPattern>(std::move(first));
        while (is_keyword(lex_.peek(), "UNION")) {
          lex_.next();
          Element u;
          u.kind = Element::Kind::Union;
          u.left = acc;
          u.right = std::make_shared<GroupPattern>(group());
          auto wrapped = std::make_shared<GroupPattern>();
          wrapped->elements.push_back(std::move(u));
          acc = wrapped;
        }
        for (auto& e : acc->elements) gp.elements.push_back(std::move(e));
        continue;
      }
      if (t.kind == Tok::Word && t.text != "a") {
        std::string kw = upper(t.text);
        if (kw == "NOT") {
          lex_.next();
          keyword("EXISTS");
          Element e;
          e.kind = Element::Kind::NotExists;
          e.left = std::make_shared<GroupPattern>(group());
          gp.elements.push_back(std::move(e));
          continue;
        }
        if (kw == "FILTER") {
          lex_.next();
          expect(Tok::LParen, "'(' after FILTER");
          Element e;
          e.kind = Element::Kind::Filter;
          e.expr = or_expr();
          expect(Tok::RParen, "')' closing FILTER");
          gp.elements.push_back(std::move(e));
          continue;
        }
        if (kw == "BIND") {
          lex_.next();
          expect(Tok::LParen, "'(' after BIND");
          Token v = lex_.next();
          Element e;
          e.kind = Element::Kind::Bind;
          if (v.kind == Tok::IriRef)
            e.value = Term::iri(v.text);
          else if (v.kind == Tok::PName)
            e.value = expand(v);
          else if (v.kind == Tok::String)
            e.value = Term::literal(v.text);
          else
            fail("BIND accepts only a ground term", v);
          keyword("AS");
          Token var = expect(Tok::Var, "variable after AS");
          e.var = slot(var.text);
          expect(Tok::RParen, "')' closing BIND");
          gp.elements.push_back(std::move(e));
          continue;
        }
        fail("unknown keyword '" + t.text + "'", t);
      }
      if (!starts_term(t)) fail("unexpected token in group pattern", t);
      triples_block(&gp.elements);
    }
  }

  PatternTerm operand() {
    Token t = lex_.next();
    if (t.kind == Tok::Var) return PatternTerm::var(slot(t.text));
    if (t.kind == Tok::IriRef) return PatternTerm::constant(Term::iri(t.text));
    if (t.kind == Tok::PName) return PatternTerm::constant(expand(t));
    if (t.kind == Tok::String) return PatternTerm::constant(Term::literal(t.text));
    fail("expected a variable or ground term in FILTER", t);
  }

  Expr or_expr() {
    Expr first = and_expr();
    if (lex_.peek().kind != Tok::OrOr) return first;
    Expr e;
    e.op = Expr::Op::Or;
    e.kids.push_back(std::move(first));
    while (lex_.peek().kind == Tok::OrOr) {
      lex_.next();
      e.kids.push_back(and_expr());
    }
    return e;
  }

  Expr and_expr() {
    Expr first = primary();
    if (lex_.peek().kind != Tok::AndAnd) return first;
    Expr e;
    e.op = Expr::Op::And;
    e.kids.push_back(std::move(first));
    while (lex_.peek().kind == Tok::AndAnd) {
      lex_.next();
      e.kids.push_back(primary());
    }
    return e;
  }

  Expr primary() {
    if (lex_.peek().kind == Tok::LParen) {
      lex_.next();
      Expr e = or_expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    Expr e;
    e.lhs = operand();
    Token op = lex_.next();
    if (op.kind == Tok::Eq)
      e.op = Expr::Op::Eq;
    else if (op.kind == Tok::Neq)
      e.op = Expr::Op::Neq;
    else
      fail("expected '=' or '!='", op);
    e.rhs = operand();
    return e;
  }

  static void collect_bindable(const GroupPattern& gp, std::set<int>& out) {
    for (const auto& e : gp.elements) {
      switch (e.kind) {
        case Element::Kind::Triple:
          for (const PatternTerm* pt : {&e.triple.s, &e.triple.p, &e.triple.o})
            if (pt->is_var()) out.insert(pt->index);
          break;
        case Element::Kind::Union:
          collect_bindable(*e.left, out);
          collect_bindable(*e.right, out);
          break;
        case Element::Kind::Bind: out.insert(e.var); break;
        default: break;
      }
    }
  }

  void check_template_vars() {
    std::set<int> bindable;
    collect_bindable(q_.where, bindable);
    for (const auto& [name, tok] : template_vars_) {
      int i = q_.var_index(name);
      if (!bindable.count(i)) throw UnboundTemplateVariable(id_, name);
    }
  }

  std::string id_;
  Lexer<RuleFail> lex_;
  PrefixMap prefixes_;
  RuleQuery q_;
  bool in_template_ = false;
  int where_blanks_ = 0;
  std::map<std::string, int> template_labels_;
  std::vector<std::pair<std::string, Token>> template_vars_;
};

}  // namespace detail

// Parses one rule body. Prefixed names resolve against `prefixes` plus the built-in prologue.
inline RuleQuery parse_rule(const std::string& rule_id, std::string_view text, const PrefixMap& prefixes = {}) {
  return detail::RuleParser(rule_id, text, prefixes).parse();
}

}  // namespace deontic
