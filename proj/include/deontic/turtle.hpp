#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include "deontic/errors.hpp"
#include "deontic/graph.hpp"
#include "deontic/lexer.hpp"
#include "deontic/render.hpp"
#include "deontic/vocab.hpp"

namespace deontic {

struct TurtleOptions {
  // Scope mixed into blank-node labels so several documents can be merged safely.
  std::string blank_scope;
};

namespace detail {

struct TurtleFail {
  [[noreturn]] void operator()(const std::string& msg, std::size_t line, std::size_t col) const {
    throw SyntaxError(msg, line, col);
  }
};

class TurtleParser {
 public:
  TurtleParser(std::string_view text, const TurtleOptions& opt) : lex_(text, TurtleFail{}), opt_(opt) {
    scope_ = opt.blank_scope.empty() ? std::string() : opt.blank_scope + ":";
  }

  Graph parse() {
    while (lex_.peek().kind != Tok::End) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::Word && (t.text == "@prefix" || iequals(t.text, "PREFIX"))) {
        bool at_form = t.text == "@prefix";
        lex_.next();
        Token name = lex_.next();
        if (name.kind != Tok::PName || !name.aux.empty()) fail("expected prefix name", name);
        Token iri = lex_.next();
        if (iri.kind != Tok::IriRef) fail("expected IRI in prefix declaration", iri);
        g_.prefixes()[name.text] = iri.text;
        if (at_form) terminator();
        continue;
      }
      triples();
      terminator();
    }
    return std::move(g_);
  }

 private:
  static bool iequals(const std::string& a, const char* b) {
    std::string_view bv(b);
    if (a.size() != bv.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (std::toupper(static_cast<unsigned char>(a[i])) != bv[i]) return false;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg, const Token& t) { throw SyntaxError(msg, t.line, t.column); }

  // A statement ends with '.', which may be omitted before end of input.
  void terminator() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Dot) {
      lex_.next();
      return;
    }
    if (t.kind == Tok::End) return;
    fail("expected '.'", t);
  }

  Term fresh_blank() { return Term::blank("parse:" + scope_ + "anon:" + std::to_string(++anon_)); }

  Term expand(const Token& t) {
    auto it = g_.prefixes().find(t.text);
    if (it == g_.prefixes().end()) fail("undeclared prefix '" + t.text + ":'", t);
    return Term::iri(it->second + t.aux);
  }

  void triples() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::LBracket) {
      Term subj = blank_property_list();
      const Token& n = lex_.peek();
      if (n.kind != Tok::Dot && n.kind != Tok::End) predicate_object_list(subj);
      return;
    }
    Term subj = subject();
    predicate_object_list(subj);
  }

  Term subject() {
    Token t = lex_.next();
    switch (t.kind) {
      case Tok::IriRef: return Term::iri(t.text);
      case Tok::PName: return expand(t);
      case Tok::BlankLabel: return Term::blank("parse:" + scope_ + t.text);
      default: fail("expected subject", t);
    }
  }

  Term verb() {
    Token t = lex_.next();
    if (t.kind == Tok::Word && t.text == "a") return vocab::type;
    if (t.kind == Tok::IriRef) return Term::iri(t.text);
    if (t.kind == Tok::PName) return expand(t);
    fail("expected predicate", t);
  }

  Term object() {
    const Token& p = lex_.peek();
    if (p.kind == Tok::LBracket) return blank_property_list();
    Token t = lex_.next();
    switch (t.kind) {
      case Tok::IriRef: return Term::iri(t.text);
      case Tok::PName: return expand(t);
      case Tok::BlankLabel: return Term::blank("parse:" + scope_ + t.text);
      case Tok::String: return Term::literal(t.text);
      default: fail("expected object", t);
    }
  }

  Term blank_property_list() {
    lex_.next();  // '['
    Term b = fresh_blank();
    if (lex_.peek().kind != Tok::RBracket) predicate_object_list(b);
    Token close = lex_.next();
    if (close.kind != Tok::RBracket) fail("expected ']'", close);
    return b;
  }

  void predicate_object_list(const Term& subj) {
    for (;;) {
      Term p = verb();
      for (;;) {
        Term o = object();
        g_.insert(subj, p, o);
        if (lex_.peek().kind != Tok::Comma) break;
        lex_.next();
      }
      if (lex_.peek().kind != Tok::Semicolon) return;
      while (lex_.peek().kind == Tok::Semicolon) lex_.next();
      Tok k = lex_.peek().kind;
      if (k == Tok::Dot || k == Tok::RBracket || k == Tok::End) return;
    }
  }

  Lexer<TurtleFail> lex_;
  TurtleOptions opt_;
  std::string scope_;
  std::size_t anon_ = 0;
  Graph g_;
};

}  // namespace detail

inline Graph parse_turtle(std::string_view text, const TurtleOptions& opt = {}) {
  return detail::TurtleParser(text, opt).parse();
}

// Deterministic output: prefix block, then one sorted triple per line.
inline std::string serialize_turtle(const Graph& g) {
  std::ostringstream out;
  for (const auto& [p, ns] : g.prefixes()) out << "@prefix " << p << ": <" << ns << "> .\n";
  if (!g.empty()) out << "\n";
  for (const auto& t : g) {
    out << compact(t.s, g.prefixes()) << ' ' << (t.p == vocab::type ? std::string("a") : compact(t.p, g.prefixes()))
        << ' ' << compact(t.o, g.prefixes()) << " .\n";
  }
  return out.str();
}

}  // namespace deontic
