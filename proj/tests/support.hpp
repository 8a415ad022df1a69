#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share nothing with src/ beyond the Automaton container.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "syncword/core.hpp"
#include "syncword/positivity.hpp"

namespace brute {

using syncword::Automaton;
using syncword::State;
using syncword::Symbol;
using syncword::Word;

inline constexpr std::uint32_t kNone = syncword::kInfinity;

inline State run(const Automaton& a, State q, const Word& w) {
  for (Symbol c : w) q = a.table()[q * a.alphabet_size() + c];
  return q;
}

inline std::vector<State> image(const Automaton& a, const Word& w) {
  std::set<State> s;
  for (State q = 0; q < a.size(); ++q) s.insert(run(a, q, w));
  return {s.begin(), s.end()};
}

inline Word parse(const Automaton& a, const std::vector<std::string>& names) {
  Word w;
  for (const auto& n : names) {
    for (Symbol c = 0; c < a.alphabet_size(); ++c) {
      if (a.alphabet()[c] == n) w.push_back(c);
    }
  }
  return w;
}

/// Calls visit(word) for every word of length <= max_len in length-lex
/// order; stops early when visit returns false.
inline void for_each_word(std::size_t k, std::size_t max_len, const std::function<bool(const Word&)>& visit) {
  Word w;
  for (std::size_t len = 0; len <= max_len; ++len) {
    w.assign(len, 0);
    while (true) {
      if (!visit(w)) return;
      std::size_t i = len;
      while (i > 0 && w[i - 1] + 1 == k) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
}

/// Shortest synchronizing (optionally to z) length via set-of-sets BFS.
inline std::optional<std::size_t> shortest_sync_length(const Automaton& a, std::optional<State> z = std::nullopt) {
  using Set = std::vector<State>;
  Set all;
  for (State q = 0; q < a.size(); ++q) all.push_back(q);
  std::map<Set, std::size_t> seen{{all, 0}};
  std::vector<Set> frontier{all};
  auto done = [&](const Set& s) { return s.size() == 1 && (!z || s[0] == *z); };
  if (done(all)) return 0;
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (const auto& s : frontier) {
      for (Symbol c = 0; c < a.alphabet_size(); ++c) {
        std::set<State> img;
        for (State q : s) img.insert(a.table()[q * a.alphabet_size() + c]);
        Set t(img.begin(), img.end());
        if (seen.count(t)) continue;
        seen[t] = seen[s] + 1;
        if (done(t)) return seen[t];
        next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

/// Floyd-Warshall over the transition digraph.
inline std::vector<std::vector<std::uint32_t>> all_pairs(const Automaton& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, kNone));
  for (State p = 0; p < n; ++p) {
    d[p][p] = 0;
    for (Symbol c = 0; c < a.alphabet_size(); ++c) {
      const State q = a.table()[p * a.alphabet_size() + c];
      if (q != p) d[p][q] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> out(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = d[i][j] >= kNone ? kNone : static_cast<std::uint32_t>(d[i][j]);
  }
  return out;
}

/// Transition monoid as a set of maps, closed under right multiplication.
inline std::set<std::vector<State>> monoid(const Automaton& a) {
  std::vector<State> id(a.size());
  for (State q = 0; q < a.size(); ++q) id[q] = q;
  std::set<std::vector<State>> seen{id};
  std::vector<std::vector<State>> todo{id};
  while (!todo.empty()) {
    auto t = todo.back();
    todo.pop_back();
    for (Symbol c = 0; c < a.alphabet_size(); ++c) {
      std::vector<State> u(a.size());
      for (State q = 0; q < a.size(); ++q) u[q] = a.table()[t[q] * a.alphabet_size() + c];
      if (seen.insert(u).second) todo.push_back(u);
    }
  }
  return seen;
}

/// Smallest m >= 1 with t^{m+1} = t^m, or nullopt if the powers cycle.
inline std::optional<std::uint32_t> power_index(const std::vector<State>& t) {
  auto mul = [&](const std::vector<State>& s) {
    std::vector<State> r(s.size());
    for (std::size_t q = 0; q < s.size(); ++q) r[q] = t[s[q]];
    return r;
  };
  std::vector<std::vector<State>> powers{t};
  for (std::size_t m = 1; m <= t.size() + 1; ++m) {
    powers.push_back(mul(powers.back()));
    if (powers[m] == powers[m - 1]) return static_cast<std::uint32_t>(m);
  }
  return std::nullopt;
}

/// Aperiodicity index by brute force: max power index over the monoid.
inline std::optional<std::uint32_t> aperiodicity_index(const Automaton& a) {
  std::uint32_t l = 1;
  for (const auto& t : monoid(a)) {
    auto m = power_index(t);
    if (!m) return std::nullopt;
    l = std::max(l, *m);
  }
  return l;
}

inline bool accepts(const Automaton& a, const Word& w) { return a.is_accepting(run(a, *a.start(), w)); }

/// Language comparison on every word up to max_len.
inline bool same_language_upto(const Automaton& a, const Automaton& b, std::size_t max_len) {
  bool same = true;
  for_each_word(a.alphabet_size(), max_len, [&](const Word& w) {
    same = accepts(a, w) == accepts(b, w);
    return same;
  });
  return same;
}

/// Positivity straight from the definitions.
inline bool positive(const syncword::SignFunction& f, const Automaton& a, State from, const Word& w) {
  if (w.empty()) return true;
  if (f.kind() == syncword::SignKind::all_positive) return true;
  if (const auto* r = f.as_regular()) return accepts(r->monitor, w);
  const auto* g = f.as_geometric();
  const State to = run(a, from, w);
  syncword::Rational s(0);
  for (std::size_t i = 0; i < g->certificate.direction.size(); ++i) {
    s += syncword::Rational(g->certificate.direction[i]) * (g->host.point(to)[i] - g->host.point(from)[i]);
  }
  return !(s < syncword::Rational(0));
}

/// Shortest positive walk length p -> q among words up to max_len.
inline std::uint32_t positive_distance_upto(const syncword::SignFunction& f, const Automaton& a, State p, State q,
                                            std::size_t max_len) {
  std::uint32_t best = kNone;
  for_each_word(a.alphabet_size(), max_len, [&](const Word& w) {
    if (run(a, p, w) == q && positive(f, a, p, w)) {
      best = static_cast<std::uint32_t>(w.size());
      return false;
    }
    return true;
  });
  return best;
}

inline Word random_word(std::mt19937_64& rng, std::size_t k, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(k - 1));
  Word w(len(rng));
  for (auto& c : w) c = sym(rng);
  return w;
}

}  // namespace brute
