#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "deontic/graph.hpp"
#include "deontic/term.hpp"

namespace deontic {

// Unambiguous full rendering; used for hashing and diagnostics.
inline std::string canonical(const Term& t) {
  switch (t.kind()) {
    case TermKind::Iri: return "<" + t.value() + ">";
    case TermKind::Blank: return "_:" + t.value();
    case TermKind::Literal: {
      std::string out = "\"";
      for (char c : t.value()) {
        switch (c) {
          case '"': out += "\\\""; break;
          case '\\': out += "\\\\"; break;
          case '\n': out += "\\n"; break;
          case '\r': out += "\\r"; break;
          case '\t': out += "\\t"; break;
          default: out.push_back(c);
        }
      }
      return out + "\"";
    }
    case TermKind::None: return "UNBOUND";
  }
  return "";
}

// Turtle-safe blank label: parse-scoped labels drop their source prefix,
// every other character outside the label alphabet becomes '.' or '_'.
inline std::string blank_display(const Term& t) {
  std::string_view v = t.value();
  if (v.rfind("parse:", 0) == 0) v.remove_prefix(6);
  std::string out;
  for (char c : v) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')
      out.push_back(c);
    else if (c == ':' || c == '.')
      out.push_back('.');
    else
      out.push_back('_');
  }
  if (out.empty()) out = "b";
  if (out.front() == '-' || out.front() == '.') out.insert(out.begin(), 'b');
  while (!out.empty() && out.back() == '.') out.back() = '_';
  return out;
}

inline bool valid_local(std::string_view local) {
  if (local.empty()) return true;
  if (local.front() == '.' || local.front() == '-' || local.back() == '.') return false;
  for (char c : local)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) return false;
  return true;
}

// Compact rendering with the longest matching prefix.
inline std::string compact(const Term& t, const PrefixMap& prefixes) {
  if (t.is_iri()) {
    const std::string* best_prefix = nullptr;
    std::size_t best_len = 0;
    for (const auto& [p, ns] : prefixes) {
      if (ns.size() >= best_len && t.value().size() >= ns.size() &&
          t.value().compare(0, ns.size(), ns) == 0 && valid_local(std::string_view(t.value()).substr(ns.size()))) {
        if (!best_prefix || ns.size() > best_len) {
          best_prefix = &p;
          best_len = ns.size();
        }
      }
    }
    if (best_prefix) return *best_prefix + ":" + t.value().substr(best_len);
    return "<" + t.value() + ">";
  }
  if (t.is_blank()) return "_:" + blank_display(t);
  return canonical(t);
}

// Local part of an IRI for human-readable output.
inline std::string short_name(const Term& t, const PrefixMap& prefixes) {
  if (!t.is_iri()) return compact(t, prefixes);
  std::string c = compact(t, prefixes);
  if (c.front() == '<') {
    auto pos = t.value().find_last_of("#/");
    return pos == std::string::npos ? t.value() : t.value().substr(pos + 1);
  }
  return c.substr(c.find(':') + 1);
}

}  // namespace deontic
