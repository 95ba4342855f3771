#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>

namespace deontic {

namespace detail {

// Process-wide string interning so terms copy and compare as pointers.
class InternPool {
 public:
  static InternPool& instance() {
    static InternPool pool;
    return pool;
  }

  const std::string* intern(std::string_view s) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = set_.find(s);
    if (it != set_.end()) return it->get();
    auto owned = std::make_unique<std::string>(s);
    const std::string* ptr = owned.get();
    set_.insert(std::move(owned));
    return ptr;
  }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
    std::size_t operator()(const std::unique_ptr<std::string>& s) const {
      return std::hash<std::string_view>{}(*s);
    }
  };
  struct Eq {
    using is_transparent = void;
    template <class A, class B>
    bool operator()(const A& a, const B& b) const {
      return view(a) == view(b);
    }
    static std::string_view view(std::string_view s) { return s; }
    static std::string_view view(const std::unique_ptr<std::string>& s) { return *s; }
  };

  std::mutex mu_;
  std::unordered_set<std::unique_ptr<std::string>, Hash, Eq> set_;
};

inline const std::string* empty_string() {
  static const std::string* e = InternPool::instance().intern("");
  return e;
}

}  // namespace detail

enum class TermKind : std::uint8_t { None = 0, Iri = 1, Blank = 2, Literal = 3 };

// An RDF term. None is the unbound placeholder used inside solution rows.
class Term {
 public:
  Term() : kind_(TermKind::None), text_(detail::empty_string()) {}

  static Term iri(std::string_view v) {
    if (v.empty()) throw std::invalid_argument("IRI must be non-empty");
    for (char c : v) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
        throw std::invalid_argument("IRI must not contain whitespace: " + std::string(v));
    }
    return Term(TermKind::Iri, v);
  }
  static Term blank(std::string_view label) {
    if (label.empty()) throw std::invalid_argument("blank node label must be non-empty");
    return Term(TermKind::Blank, label);
  }
  static Term literal(std::string_view lexical) { return Term(TermKind::Literal, lexical); }

  TermKind kind() const { return kind_; }
  bool is_none() const { return kind_ == TermKind::None; }
  bool is_iri() const { return kind_ == TermKind::Iri; }
  bool is_blank() const { return kind_ == TermKind::Blank; }
  bool is_literal() const { return kind_ == TermKind::Literal; }
  const std::string& value() const { return *text_; }

  friend bool operator==(const Term& a, const Term& b) {
    return a.kind_ == b.kind_ && a.text_ == b.text_;
  }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  // Iri < BlankNode < Literal, then lexicographic.
  friend bool operator<(const Term& a, const Term& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.text_ == b.text_) return false;
    return *a.text_ < *b.text_;
  }
  friend bool operator>(const Term& a, const Term& b) { return b < a; }
  friend bool operator<=(const Term& a, const Term& b) { return !(b < a); }
  friend bool operator>=(const Term& a, const Term& b) { return !(a < b); }

  std::size_t hash() const {
    return std::hash<const void*>{}(text_) * 31u + static_cast<std::size_t>(kind_);
  }

 private:
  Term(TermKind k, std::string_view v) : kind_(k), text_(detail::InternPool::instance().intern(v)) {}

  TermKind kind_;
  const std::string* text_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

struct Triple {
  Term s, p, o;

  Triple() = default;
  Triple(Term s_, Term p_, Term o_) : s(std::move(s_)), p(std::move(p_)), o(std::move(o_)) {}

  // Subject must be an IRI or blank node; predicate must be an IRI.
  bool well_formed() const {
    return (s.is_iri() || s.is_blank()) && p.is_iri() && !o.is_none();
  }

  friend bool operator==(const Triple& a, const Triple& b) {
    return a.s == b.s && a.p == b.p && a.o == b.o;
  }
  friend bool operator!=(const Triple& a, const Triple& b) { return !(a == b); }
  friend bool operator<(const Triple& a, const Triple& b) {
    if (a.s != b.s) return a.s < b.s;
    if (a.p != b.p) return a.p < b.p;
    return a.o < b.o;
  }
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const {
    std::size_t h = t.s.hash();
    h = h * 1000003u ^ t.p.hash();
    h = h * 1000003u ^ t.o.hash();
    return h;
  }
};

}  // namespace deontic
