#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "deontic/term.hpp"
#include "deontic/vocab.hpp"

namespace deontic {

using PrefixMap = std::map<std::string, std::string>;

inline PrefixMap builtin_prefixes() {
  return {{"", vocab::kOnt}, {"soa", vocab::kSoa}, {"rdf", vocab::kRdf}, {"rdfs", vocab::kRdfs}};
}

// Indexed triple set. Indexes only grow, so they never disagree with the set.
class Graph {
 public:
  Graph() : prefixes_(builtin_prefixes()) {}

  bool insert(const Triple& t) {
    auto [it, fresh] = triples_.insert(t);
    if (!fresh) return false;
    by_s_[t.s].push_back(t);
    by_p_[t.p].push_back(t);
    by_o_[t.o].push_back(t);
    return true;
  }
  bool insert(const Term& s, const Term& p, const Term& o) { return insert(Triple(s, p, o)); }

  std::size_t insert_all(const Graph& other) {
    std::size_t n = 0;
    for (const auto& t : other.triples_) n += insert(t) ? 1 : 0;
    for (const auto& [k, v] : other.prefixes_) prefixes_.emplace(k, v);
    return n;
  }

  bool contains(const Triple& t) const { return triples_.count(t) != 0; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  // Deterministic iteration in term order.
  const std::set<Triple>& triples() const { return triples_; }
  auto begin() const { return triples_.begin(); }
  auto end() const { return triples_.end(); }

  const PrefixMap& prefixes() const { return prefixes_; }
  PrefixMap& prefixes() { return prefixes_; }

  // Calls f for every triple agreeing with the bound components, in no particular order.
  template <class F>
  void for_each_match(const Term* s, const Term* p, const Term* o, F&& f) const {
    const std::vector<Triple>* best = nullptr;
    auto consider = [&](const Term* key, const std::unordered_map<Term, std::vector<Triple>, TermHash>& idx) {
      if (!key) return true;
      auto it = idx.find(*key);
      if (it == idx.end()) return false;
      if (!best || it->second.size() < best->size()) best = &it->second;
      return true;
    };
    if (!consider(s, by_s_) || !consider(p, by_p_) || !consider(o, by_o_)) return;
    auto ok = [&](const Triple& t) {
      return (!s || t.s == *s) && (!p || t.p == *p) && (!o || t.o == *o);
    };
    if (best) {
      for (const auto& t : *best)
        if (ok(t)) f(t);
    } else {
      for (const auto& t : triples_) f(t);
    }
  }

  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const {
    std::vector<Triple> out;
    for_each_match(s ? &*s : nullptr, p ? &*p : nullptr, o ? &*o : nullptr,
                   [&](const Triple& t) { out.push_back(t); });
    std::sort(out.begin(), out.end());
    return out;
  }

  // Objects of (s, p, *), sorted.
  std::vector<Term> objects(const Term& s, const Term& p) const {
    std::vector<Term> out;
    for_each_match(&s, &p, nullptr, [&](const Triple& t) { out.push_back(t.o); });
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<Term> object(const Term& s, const Term& p) const {
    auto v = objects(s, p);
    if (v.empty()) return std::nullopt;
    return v.front();
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.triples_ == b.triples_; }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  std::set<Triple> triples_;
  std::unordered_map<Term, std::vector<Triple>, TermHash> by_s_, by_p_, by_o_;
  PrefixMap prefixes_;
};

// Triples of a minus triples of b.
inline Graph difference(const Graph& a, const Graph& b) {
  Graph out;
  out.prefixes() = a.prefixes();
  for (const auto& t : a)
    if (!b.contains(t)) out.insert(t);
  return out;
}

namespace detail {

inline bool has_blank(const Triple& t) { return t.s.is_blank() || t.o.is_blank(); }

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

inline std::uint64_t term_code(const Term& t) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : t.value()) h = (h ^ c) * 1099511628211ULL;
  return mix(h, static_cast<std::uint64_t>(t.kind()));
}

// Colour refinement over blank nodes; ground neighbours contribute their value.
inline std::unordered_map<Term, std::uint64_t, TermHash> blank_colours(const Graph& g, int rounds) {
  std::unordered_map<Term, std::uint64_t, TermHash> colour;
  std::unordered_map<Term, std::vector<const Triple*>, TermHash> incident;
  for (const auto& t : g) {
    if (t.s.is_blank()) incident[t.s].push_back(&t);
    if (t.o.is_blank() && t.o != t.s) incident[t.o].push_back(&t);
  }
  for (auto& [b, _] : incident) colour[b] = 7;
  for (int r = 0; r < rounds; ++r) {
    std::unordered_map<Term, std::uint64_t, TermHash> next;
    for (auto& [b, ts] : incident) {
      std::vector<std::uint64_t> parts;
      parts.reserve(ts.size());
      for (const Triple* t : ts) {
        auto code = [&](const Term& x) { return x.is_blank() ? (x == b ? 3u : colour[x]) : term_code(x); };
        std::uint64_t h = mix(t->s == b ? 11u : 13u, t->o == b ? 17u : 19u);
        h = mix(h, code(t->s));
        h = mix(h, term_code(t->p));
        h = mix(h, code(t->o));
        parts.push_back(h);
      }
      std::sort(parts.begin(), parts.end());
      std::uint64_t h = colour[b];
      for (auto p : parts) h = mix(h, p);
      next[b] = h;
    }
    colour.swap(next);
  }
  return colour;
}

}  // namespace detail

// True iff a bijection between blank nodes maps g1's triple set onto g2's.
inline bool isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.size() != g2.size()) return false;
  std::vector<const Triple*> blank1;
  std::size_t ground1 = 0;
  for (const auto& t : g1) {
    if (detail::has_blank(t)) {
      blank1.push_back(&t);
    } else {
      ++ground1;
      if (!g2.contains(t)) return false;
    }
  }
  std::size_t ground2 = 0;
  for (const auto& t : g2)
    if (!detail::has_blank(t)) ++ground2;
  if (ground1 != ground2) return false;
  if (blank1.empty()) return true;

  auto c1 = detail::blank_colours(g1, 3);
  auto c2 = detail::blank_colours(g2, 3);
  if (c1.size() != c2.size()) return false;
  std::map<std::uint64_t, std::vector<Term>> cls1, cls2;
  for (auto& [b, c] : c1) cls1[c].push_back(b);
  for (auto& [b, c] : c2) cls2[c].push_back(b);
  if (cls1.size() != cls2.size()) return false;
  for (auto& [c, v] : cls1) {
    auto it = cls2.find(c);
    if (it == cls2.end() || it->second.size() != v.size()) return false;
    std::sort(it->second.begin(), it->second.end());
  }

  std::vector<Term> order;
  for (auto& [c, v] : cls1)
    for (auto& b : v) order.push_back(b);
  std::stable_sort(order.begin(), order.end(), [&](const Term& a, const Term& b) {
    return cls1[c1[a]].size() < cls1[c1[b]].size();
  });

  std::unordered_map<Term, std::vector<const Triple*>, TermHash> incident;
  for (const Triple* t : blank1) {
    if (t->s.is_blank()) incident[t->s].push_back(t);
    if (t->o.is_blank() && t->o != t->s) incident[t->o].push_back(t);
  }

  std::unordered_map<Term, Term, TermHash> map;
  std::unordered_set<Term, TermHash> used;
  auto image = [&](const Term& x, bool& ok) -> Term {
    if (!x.is_blank()) return x;
    auto it = map.find(x);
    if (it == map.end()) {
      ok = false;
      return x;
    }
    return it->second;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    const Term& b = order[i];
    for (const Term& cand : cls2[c1[b]]) {
      if (used.count(cand)) continue;
      map[b] = cand;
      used.insert(cand);
      bool consistent = true;
      for (const Triple* t : incident[b]) {
        bool full = true;
        Term s = image(t->s, full), o = image(t->o, full);
        if (full && !g2.contains(Triple(s, t->p, o))) {
          consistent = false;
          break;
        }
      }
      if (consistent && search(i + 1)) return true;
      used.erase(cand);
      map.erase(b);
    }
    return false;
  };
  return search(0);
}

// True iff an injective blank-node mapping embeds every triple of pattern into g.
// Blank nodes of pattern may only map onto blank nodes of g.
inline bool contains_pattern(const Graph& g, const Graph& pattern) {
  std::vector<Triple> todo(pattern.begin(), pattern.end());
  std::unordered_map<Term, Term, TermHash> map;
  std::unordered_set<Term, TermHash> used;

  std::function<bool(std::vector<bool>&, std::size_t)> search = [&](std::vector<bool>& done,
                                                                   std::size_t remaining) -> bool {
    if (remaining == 0) return true;
    // Pick the pending triple with the fewest unmapped blank nodes.
    std::size_t best = todo.size();
    int best_free = 3;
    for (std::size_t i = 0; i < todo.size(); ++i) {
      if (done[i]) continue;
      int free = 0;
      if (todo[i].s.is_blank() && !map.count(todo[i].s)) ++free;
      if (todo[i].o.is_blank() && !map.count(todo[i].o)) ++free;
      if (free < best_free) {
        best_free = free;
        best = i;
      }
    }
    const Triple& t = todo[best];
    auto resolve = [&](const Term& x) -> std::optional<Term> {
      if (!x.is_blank()) return x;
      auto it = map.find(x);
      if (it == map.end()) return std::nullopt;
      return it->second;
    };
    auto s = resolve(t.s), o = resolve(t.o);
    std::vector<Triple> cands;
    g.for_each_match(s ? &*s : nullptr, &t.p, o ? &*o : nullptr,
                     [&](const Triple& m) { cands.push_back(m); });
    std::sort(cands.begin(), cands.end());
    done[best] = true;
    for (const Triple& m : cands) {
      std::vector<Term> added;
      bool ok = true;
      auto bind = [&](const Term& pat, const Term& val) {
        if (!pat.is_blank()) return;
        auto it = map.find(pat);
        if (it != map.end()) {
          if (it->second != val) ok = false;
          return;
        }
        if (!val.is_blank() || used.count(val)) {
          ok = false;
          return;
        }
        map.emplace(pat, val);
        used.insert(val);
        added.push_back(pat);
      };
      bind(t.s, m.s);
      if (ok) bind(t.o, m.o);
      if (ok && search(done, remaining - 1)) return true;
      for (const Term& a : added) {
        used.erase(map[a]);
        map.erase(a);
      }
    }
    done[best] = false;
    return false;
  };
  std::vector<bool> done(todo.size(), false);
  return search(done, todo.size());
}

}  // namespace deontic
