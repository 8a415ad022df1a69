#include "syncword/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace syncword {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::no: return "false";
    case Verdict::yes: return "true";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

struct MapHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (State s : v) {
      h ^= s;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Cycles (length >= 2) of the functional graph of `map`, each listed so that
// map[cycle[j]] == cycle[j + 1].
std::vector<std::vector<State>> nontrivial_cycles(const std::vector<State>& map) {
  const std::size_t n = map.size();
  std::vector<std::uint8_t> color(n, 0);  // 0 new, 1 on current walk, 2 done
  std::vector<std::vector<State>> cycles;
  for (State s = 0; s < n; ++s) {
    if (color[s] != 0) continue;
    std::vector<State> walk;
    State x = s;
    while (color[x] == 0) {
      color[x] = 1;
      walk.push_back(x);
      x = map[x];
    }
    if (color[x] == 1) {
      auto it = std::find(walk.begin(), walk.end(), x);
      std::vector<State> cycle(it, walk.end());
      if (cycle.size() >= 2) cycles.push_back(std::move(cycle));
    }
    for (State w : walk) color[w] = 2;
  }
  return cycles;
}

bool is_geodesic_cycle(const DistanceMatrix& dist, const std::vector<State>& cycle, std::size_t length) {
  for (std::size_t j = 0; j < cycle.size(); ++j) {
    if (dist.at(cycle[j], cycle[(j + 1) % cycle.size()]) != length) return false;
  }
  return true;
}

}  // namespace

std::vector<State> compose(const std::vector<State>& s, const std::vector<State>& t) {
  std::vector<State> out(s.size());
  for (std::size_t q = 0; q < s.size(); ++q) out[q] = t[s[q]];
  return out;
}

PowerStructure power_structure(const std::vector<State>& map) {
  const std::size_t n = map.size();
  // Tail length of each state = steps until it lands on a cycle.
  std::vector<std::uint8_t> on_cycle(n, 0);
  std::vector<std::uint8_t> color(n, 0);
  std::uint64_t period = 1;
  PowerStructure out;
  for (State s = 0; s < n; ++s) {
    if (color[s] != 0) continue;
    std::vector<State> walk;
    State x = s;
    while (color[x] == 0) {
      color[x] = 1;
      walk.push_back(x);
      x = map[x];
    }
    if (color[x] == 1) {
      auto it = std::find(walk.begin(), walk.end(), x);
      const auto len = static_cast<std::uint64_t>(walk.end() - it);
      for (auto jt = it; jt != walk.end(); ++jt) on_cycle[*jt] = 1;
      if (len > 1 && !out.cycling_state) out.cycling_state = x;
      period = std::lcm(period, len);
    }
    for (State w : walk) color[w] = 2;
  }
  std::uint32_t tail = 0;
  for (State s = 0; s < n; ++s) {
    std::uint32_t steps = 0;
    for (State x = s; !on_cycle[x]; x = map[x]) ++steps;
    tail = std::max(tail, steps);
  }
  out.index = std::max<std::uint32_t>(1, tail);
  out.period = static_cast<std::uint32_t>(std::min<std::uint64_t>(period, std::numeric_limits<std::uint32_t>::max()));
  return out;
}

MonoidSummary enumerate_monoid(const Automaton& a, std::size_t cap) {
  MonoidSummary summary;
  const std::size_t n = a.size();
  std::unordered_map<std::vector<State>, std::size_t, MapHash> seen;
  summary.elements.push_back({all_states(a), {}});
  seen.emplace(summary.elements.front().map, 0);
  for (std::size_t i = 0; i < summary.elements.size(); ++i) {
    for (Symbol c = 0; c < a.alphabet_size(); ++c) {
      std::vector<State> next(n);
      for (State q = 0; q < n; ++q) next[q] = a.next(summary.elements[i].map[q], c);
      if (seen.contains(next)) continue;
      if (summary.elements.size() >= cap) {
        summary.truncated = true;
        break;
      }
      Word word = summary.elements[i].shortest_word;
      word.push_back(c);
      seen.emplace(next, summary.elements.size());
      summary.elements.push_back({std::move(next), std::move(word)});
    }
    if (summary.truncated) break;
  }

  summary.commutative = is_commutative(a);
  if (summary.truncated) return summary;

  summary.aperiodic = Verdict::yes;
  std::uint32_t index = 1;
  for (const auto& t : summary.elements) {
    const auto ps = power_structure(t.map);
    index = std::max(index, ps.index);
    if (ps.period > 1 && summary.aperiodic == Verdict::yes) {
      summary.aperiodic = Verdict::no;
      summary.periodic_witness = PeriodicWitness{t.shortest_word, *ps.cycling_state, ps.period};
    }
  }
  if (summary.aperiodic == Verdict::yes) summary.index_bound = index;

  const auto dist = distances(a);
  summary.geodesically_aperiodic = Verdict::yes;
  for (const auto& t : summary.elements) {
    for (auto& cycle : nontrivial_cycles(t.map)) {
      if (is_geodesic_cycle(dist, cycle, t.shortest_word.size())) {
        summary.geodesically_aperiodic = Verdict::no;
        summary.geodesic_witness = GeodesicViolation{t.shortest_word, std::move(cycle)};
        return summary;
      }
    }
  }
  return summary;
}

AperiodicityResult is_aperiodic(const Automaton& a, std::size_t cap) {
  auto summary = enumerate_monoid(a, cap);
  return {summary.aperiodic, summary.periodic_witness};
}

std::uint32_t aperiodicity_index(const Automaton& a, std::size_t cap) {
  auto summary = enumerate_monoid(a, cap);
  if (summary.truncated) throw Error(ErrorCode::cap_exceeded, "transition monoid exceeds cap");
  if (summary.aperiodic != Verdict::yes) throw Error(ErrorCode::precondition, "automaton is not aperiodic");
  return *summary.index_bound;
}

bool is_commutative(const Automaton& a) {
  for (State q = 0; q < a.size(); ++q) {
    for (Symbol x = 0; x < a.alphabet_size(); ++x) {
      for (Symbol y = x + 1; y < a.alphabet_size(); ++y) {
        if (a.next(a.next(q, x), y) != a.next(a.next(q, y), x)) return false;
      }
    }
  }
  return true;
}

bool is_unitary(const Automaton& a) {
  for (Symbol c = 0; c < a.alphabet_size(); ++c) {
    std::size_t moved = 0;
    for (State q = 0; q < a.size(); ++q) moved += a.next(q, c) != q ? 1 : 0;
    if (moved > 1) return false;
  }
  return true;
}

GeodesicResult is_geodesically_aperiodic(const Automaton& a, std::size_t cap) {
  auto summary = enumerate_monoid(a, cap);
  return {summary.geodesically_aperiodic, summary.geodesic_witness};
}

std::optional<GeodesicViolation> find_geodesic_violation_by_enumeration(const Automaton& a, std::size_t max_length) {
  const auto dist = distances(a);
  const std::size_t n = a.size();
  Word word;
  std::vector<std::vector<State>> maps{all_states(a)};
  std::optional<GeodesicViolation> found;
  // Depth-first over all words; maps[len] is the action of the current prefix.
  auto visit = [&](auto&& self) -> void {
    if (found) return;
    if (!word.empty()) {
      for (auto& cycle : nontrivial_cycles(maps.back())) {
        if (is_geodesic_cycle(dist, cycle, word.size())) {
          found = GeodesicViolation{word, std::move(cycle)};
          return;
        }
      }
    }
    if (word.size() == max_length) return;
    for (Symbol c = 0; c < a.alphabet_size() && !found; ++c) {
      std::vector<State> next(n);
      for (State q = 0; q < n; ++q) next[q] = a.next(maps.back()[q], c);
      maps.push_back(std::move(next));
      word.push_back(c);
      self(self);
      word.pop_back();
      maps.pop_back();
    }
  };
  visit(visit);
  return found;
}

}  // namespace syncword
