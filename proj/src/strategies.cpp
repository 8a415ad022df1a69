#include "syncword/strategies.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace syncword {

const char* to_string(CounterexampleKind k) {
  switch (k) {
    case CounterexampleKind::not_a_corner: return "not-a-corner";
    case CounterexampleKind::unreachable: return "unreachable";
    case CounterexampleKind::not_synchronizable: return "not-synchronizable";
    case CounterexampleKind::geodesic_violation: return "geodesic-violation";
    case CounterexampleKind::not_f_ordered: return "not-f-ordered";
  }
  return "not-synchronizable";
}

namespace {

// Images of every state plus optional extra tracks, advanced together.
struct Tracks {
  const Automaton& a;
  std::vector<State> pos;
  Word word;

  void push(const Word& chunk) {
    for (State& s : pos) s = apply(a, s, chunk);
    word.insert(word.end(), chunk.begin(), chunk.end());
  }
  std::size_t distinct(std::size_t count) const {
    std::vector<State> v(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(count));
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
  }
};

Tracks start_tracks(const Automaton& a) { return Tracks{a, all_states(a), {}}; }

void finish(SyncResult& r, const Automaton& a) {
  const auto everything = all_states(a);
  r.target = image_set(a, everything, r.word);
  r.n_used = r.n_used ? r.n_used : a.size();
  if (r.bound) r.within_bound = r.word.size() <= *r.bound;
}

Counterexample make(CounterexampleKind kind, std::string message, std::vector<State> states, Word word = {},
                    std::vector<std::uint32_t> distances = {}) {
  return Counterexample{kind, std::move(message), std::move(states), std::move(word), std::move(distances)};
}

std::string dist_text(std::uint32_t d) { return d == kInfinity ? "inf" : std::to_string(d); }

// The active-set loop shared by the f-ordered strategies. taus[q] routes q
// to m along a positive word.
SyncOutcome run_f_ordered(const Automaton& a, const StateOrder& order, State u, State m, const std::vector<Word>& taus,
                          SyncResult result) {
  std::vector<State> active = all_states(a);
  auto count_minimal = [&](const std::vector<State>& s) {
    std::vector<State> rest;
    for (State q : s) {
      if (q != m) rest.push_back(q);
    }
    return order.minimal_among(rest).size();
  };
  std::size_t previous = count_minimal(active);
  std::uint32_t iteration = 0;
  while (active.size() > 1) {
    ++iteration;
    std::optional<State> pick;
    for (State p : order.minimal_among(active)) {
      if (order.less(p, m)) {
        pick = p;
        break;
      }
    }
    const Word& chunk = pick ? taus[*pick] : taus[u];
    active = image_set(a, active, chunk);
    result.word.insert(result.word.end(), chunk.begin(), chunk.end());
    const std::size_t now = count_minimal(active);
    result.trace.push_back({iteration, 0, chunk.size(), now});
    if (!(now < previous)) {
      return make(CounterexampleKind::not_f_ordered,
                  "minimal-element count did not decrease at iteration " + std::to_string(iteration), active, result.word);
    }
    if (!pick && active != std::vector<State>{m}) {
      return make(CounterexampleKind::not_f_ordered, "word for the universal element did not synchronize", active,
                  result.word);
    }
    previous = now;
  }
  finish(result, a);
  if (result.target != std::vector<State>{m}) throw Error(ErrorCode::internal, "f-ordered word missed its target");
  return result;
}

}  // namespace

SyncOutcome cornering_sync(const Automaton& a, const SignFunction& f, State z, std::size_t rank_target) {
  check_state(a, z);
  if (rank_target == 0) throw Error(ErrorCode::invalid_argument, "rank target must be positive");
  const std::size_t n = a.size();
  const auto paths = positive_distances_to(a, f, z);
  std::uint64_t d = 0;
  for (State q = 0; q < n; ++q) {
    if (paths[q].distance == kInfinity) {
      return make(CounterexampleKind::unreachable, "no positive walk from " + std::to_string(q) + " to " + std::to_string(z),
                  {q, z}, {}, {kInfinity});
    }
    d = std::max<std::uint64_t>(d, paths[q].distance);
  }
  SyncResult result;
  result.strategy = "corner";
  result.d_used = d;
  result.n_used = n;
  result.k_used = rank_target;
  result.bound = rank_target >= n ? 0 : d * (d + 1) * (n - rank_target) / 2;

  Tracks t = start_tracks(a);
  t.pos.push_back(z);  // the z-track lives at index n
  std::uint32_t loop = 0;
  while (t.distinct(n) > rank_target) {
    if (t.pos[n] != z) throw Error(ErrorCode::internal, "z-track left the corner between pair loops");
    State lag = 0;
    while (t.pos[lag] == t.pos[n]) ++lag;
    std::uint64_t potential = paths[t.pos[lag]].distance;
    for (std::uint32_t i = 1; t.pos[lag] != t.pos[n]; ++i) {
      const bool route_pair = t.pos[lag] != z;
      const State mover = route_pair ? t.pos[lag] : t.pos[n];
      if (t.pos[lag] != z && t.pos[n] != z) throw Error(ErrorCode::internal, "neither track is at the corner");
      t.push(*paths[mover].witness);
      const State other = route_pair ? t.pos[n] : t.pos[lag];
      const std::uint64_t now = t.pos[lag] == t.pos[n] ? 0 : paths[other].distance;
      result.trace.push_back({i, loop, paths[mover].distance, now});
      if (!(now < potential) || now + i > d) {
        const auto back = positive_distance(a, f, z, other).distance;
        return make(CounterexampleKind::not_a_corner,
                    "lagging distance " + dist_text(static_cast<std::uint32_t>(now)) + " after iteration " +
                        std::to_string(i) + " breaks the corner property at " + std::to_string(other),
                    {other, z}, t.word, {paths[other].distance, back});
      }
      potential = now;
    }
    ++loop;
  }
  result.word = std::move(t.word);
  finish(result, a);
  if (result.target.size() > rank_target) throw Error(ErrorCode::internal, "cornering word exceeds rank target");
  if (rank_target == 1 && result.target != std::vector<State>{z}) {
    throw Error(ErrorCode::internal, "cornering word missed the corner");
  }
  return result;
}

SyncOutcome f_ordered_sync(const Automaton& a, const SignFunction& f, const StateOrder& order) {
  const auto report = verify_f_ordering(a, f, order);
  if (!report.holds()) {
    const auto& v = *report.violation;
    return make(CounterexampleKind::not_f_ordered, "condition " + std::to_string(v.condition) + ": " + v.message,
                v.states, v.word);
  }
  const State u = *report.universal;
  const State m = *report.maximal;
  std::vector<Word> taus;
  std::uint64_t d = 0;
  for (const auto& r : positive_distances_to(a, f, m)) {
    d = std::max<std::uint64_t>(d, r.distance);
    taus.push_back(*r.witness);
  }
  SyncResult result;
  result.strategy = "f-ordered";
  result.d_used = d;
  result.k_used = order.minimal_elements().size();
  result.n_used = a.size();
  result.bound = result.d_used * result.k_used;
  return run_f_ordered(a, order, u, m, taus, std::move(result));
}

SyncOutcome aperiodic_sync(const Automaton& a, std::size_t cap) {
  const auto summary = enumerate_monoid(a, cap);
  if (summary.truncated) throw Error(ErrorCode::cap_exceeded, "transition monoid exceeds cap");
  if (summary.aperiodic != Verdict::yes) throw Error(ErrorCode::precondition, "automaton is not aperiodic");
  const std::uint64_t ell = *summary.index_bound;
  const std::size_t n = a.size();
  const auto dist = distances(a);
  std::optional<State> z;
  std::uint64_t d = kInfinity;
  for (State c = 0; c < n; ++c) {
    std::uint64_t worst = 0;
    for (State q = 0; q < n; ++q) worst = std::max<std::uint64_t>(worst, dist.at(q, c));
    if (worst < d) {
      d = worst;
      z = c;
    }
  }
  if (!z) return make(CounterexampleKind::not_synchronizable, "no state is universally reachable", {});

  std::vector<Word> shortest(n);
  for (State q = 0; q < n; ++q) shortest[q] = *shortest_path_word(a, q, *z);
  std::vector<Word> taus(n);
  for (State q = 0; q < n; ++q) {
    Word power;
    for (std::uint64_t j = 0; j < ell; ++j) power.insert(power.end(), shortest[q].begin(), shortest[q].end());
    const State p = apply(a, *z, power);
    taus[q] = power;
    taus[q].insert(taus[q].end(), shortest[p].begin(), shortest[p].end());
    if (apply(a, q, taus[q]) != *z || apply(a, *z, taus[q]) != *z) {
      throw Error(ErrorCode::internal, "aperiodic routing word failed for state " + std::to_string(q));
    }
  }
  SyncResult result;
  result.strategy = "aperiodic";
  result.d_used = (ell + 1) * d;
  result.k_used = n - 1;
  result.n_used = n;
  result.bound = (n - 1) * (ell + 1) * d;
  return run_f_ordered(a, StateOrder::star(n, *z), *z, *z, taus, std::move(result));
}

SyncOutcome geodesic_sync(const Automaton& a, State z) {
  check_state(a, z);
  const std::size_t n = a.size();
  const auto dist = distances(a);
  for (State q = 0; q < n; ++q) {
    if (dist.at(q, z) == kInfinity) {
      return make(CounterexampleKind::unreachable, std::to_string(z) + " is not reachable from " + std::to_string(q),
                  {q, z}, {}, {kInfinity});
    }
  }
  const std::uint64_t d = dist.max_finite();
  SyncResult result;
  result.strategy = "geodesic";
  result.d_used = d;
  result.n_used = n;
  result.k_used = 1;
  result.bound = d * d * n * (n - 1) + d * (n - 1);
  result.bound_is_soft = true;

  Tracks t = start_tracks(a);
  t.pos.push_back(z);  // reference track at index n
  std::uint32_t loop = 0;
  auto reroute = [&] {
    if (t.pos[n] == z) return;
    const Word back = *shortest_path_word(a, t.pos[n], z);
    t.push(back);
    result.trace.push_back({0, loop, back.size(), 0});
  };
  while (t.distinct(n) > 1) {
    reroute();
    State x = 0;
    while (t.pos[x] == t.pos[n]) ++x;
    std::uint64_t pair_distance = dist.at(t.pos[x], t.pos[n]);
    for (std::uint32_t iteration = 1; t.pos[x] != t.pos[n]; ++iteration) {
      const auto pi = shortest_path_word(a, t.pos[x], t.pos[n]);
      if (!pi) throw Error(ErrorCode::internal, "pair lost reachability");
      std::vector<State> seen{t.pos[x]};
      bool progressed = false;
      std::size_t applications = 0;
      while (applications < n + 1) {
        t.push(*pi);
        ++applications;
        if (t.pos[x] == t.pos[n]) {
          pair_distance = 0;
          progressed = true;
          break;
        }
        const std::uint64_t now = dist.at(t.pos[x], t.pos[n]);
        if (now < pair_distance) {
          pair_distance = now;
          progressed = true;
          break;
        }
        seen.push_back(t.pos[x]);
      }
      if (!progressed) {
        // seen holds x(pi^0..pi^{n+1}); its repeating tail is permuted by pi.
        std::vector<State> cycle;
        for (std::size_t i = 0; i < seen.size() && cycle.empty(); ++i) {
          for (std::size_t j = i + 1; j < seen.size(); ++j) {
            if (seen[j] == seen[i]) {
              cycle.assign(seen.begin() + static_cast<std::ptrdiff_t>(i), seen.begin() + static_cast<std::ptrdiff_t>(j));
              break;
            }
          }
        }
        return make(CounterexampleKind::geodesic_violation,
                    "repeating the shortest pair word cycles without reducing distance " + std::to_string(pair_distance),
                    cycle, *pi, {static_cast<std::uint32_t>(pair_distance)});
      }
      result.trace.push_back({iteration, loop, applications * pi->size(), pair_distance});
    }
    ++loop;
  }
  reroute();
  result.word = std::move(t.word);
  finish(result, a);
  if (result.target != std::vector<State>{z}) throw Error(ErrorCode::internal, "geodesic word missed its target");
  return result;
}

SyncOutcome product_corner_sync(const Automaton& a1, const SignFunction& f1, State z1, const Automaton& a2,
                                const SignFunction& f2, State z2) {
  if (a1.alphabet() != a2.alphabet()) throw Error(ErrorCode::alphabet_mismatch, "product operands have different alphabets");
  for (auto [a, f, z, name] : {std::tuple{&a1, &f1, z1, "first"}, std::tuple{&a2, &f2, z2, "second"}}) {
    const auto check = is_f_corner(*a, *f, z);
    if (!check.holds) {
      return make(CounterexampleKind::not_a_corner,
                  std::to_string(z) + " is not a corner of the " + name + " automaton: dist+(" +
                      std::to_string(*check.witness) + ", z) = " + dist_text(check.to_corner) + ", dist+(z, " +
                      std::to_string(*check.witness) + ") = " + dist_text(check.from_corner),
                  {*check.witness, z}, {}, {check.to_corner, check.from_corner});
    }
  }
  const auto p1 = positive_distances_to(a1, f1, z1);
  const auto p2 = positive_distances_to(a2, f2, z2);
  auto max_of = [](const std::vector<PositiveDistanceResult>& v) {
    std::uint64_t m = 0;
    for (const auto& r : v) m = std::max<std::uint64_t>(m, r.distance);
    return m;
  };
  const std::uint64_t d1 = max_of(p1);
  const std::uint64_t d2 = max_of(p2);
  const bool swapped = d2 < d1;
  const Automaton& A = swapped ? a2 : a1;
  const Automaton& B = swapped ? a1 : a2;
  const SignFunction& fA = swapped ? f2 : f1;
  const SignFunction& fB = swapped ? f1 : f2;
  const State zA = swapped ? z2 : z1;
  const State zB = swapped ? z1 : z2;
  const auto& pA = swapped ? p2 : p1;
  const auto& pB = swapped ? p1 : p2;

  auto tauA = cornering_sync(A, fA, zA);
  if (auto* c = std::get_if<Counterexample>(&tauA)) return *c;
  auto tauB = cornering_sync(B, fB, zB);
  if (auto* c = std::get_if<Counterexample>(&tauB)) return *c;

  SyncResult result;
  result.strategy = "product";
  result.word = std::get<SyncResult>(tauA).word;
  const Word& wB = std::get<SyncResult>(tauB).word;
  result.word.insert(result.word.end(), wB.begin(), wB.end());
  result.trace.push_back({0, 0, std::get<SyncResult>(tauA).word.size(), 0});
  result.trace.push_back({0, 1, wB.size(), 0});

  State x = apply(A, zA, wB);
  State y = zB;
  std::uint64_t potential = pA[x].distance;
  for (std::uint32_t i = 1; x != zA || y != zB; ++i) {
    const Word& chunk = (i % 2 == 1) ? *pA[x].witness : *pB[y].witness;
    x = apply(A, x, chunk);
    y = apply(B, y, chunk);
    result.word.insert(result.word.end(), chunk.begin(), chunk.end());
    const std::uint64_t dx = pA[x].distance;
    const std::uint64_t dy = pB[y].distance;
    const std::uint64_t now = (dx == kInfinity || dy == kInfinity) ? kInfinity : dx + dy;
    result.trace.push_back({i, 2, chunk.size(), now});
    if (!(now < potential)) {
      std::vector<State> states = swapped ? std::vector<State>{y, x} : std::vector<State>{x, y};
      return make(CounterexampleKind::not_a_corner,
                  "product potential did not decrease at iteration " + std::to_string(i), std::move(states),
                  result.word, {static_cast<std::uint32_t>(std::min<std::uint64_t>(now, kInfinity))});
    }
    potential = now;
  }

  const std::uint64_t d = std::min(d1, d2);
  const std::uint64_t sum = a1.size() + a2.size();
  result.d_used = d;
  result.n_used = sum;
  result.k_used = 1;
  result.bound = ((sum + 1) * d * d + sum) / 2;
  const Automaton prod = product(a1, a2);
  const auto everything = all_states(prod);
  result.target = image_set(prod, everything, result.word);
  const State goal = static_cast<State>(z1 * a2.size() + z2);
  if (result.target != std::vector<State>{goal}) throw Error(ErrorCode::internal, "product word missed (z1, z2)");
  result.within_bound = result.word.size() <= *result.bound;
  return result;
}

namespace {

// Shortest word sending p and q to a common state, via BFS on ordered pairs.
std::optional<Word> merging_word(const Automaton& a, State p, State q) {
  const std::size_t n = a.size();
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> parent(n * n, kUnseen);
  std::vector<Symbol> via(n * n, 0);
  std::deque<std::uint32_t> queue;
  const auto source = static_cast<std::uint32_t>(p * n + q);
  parent[source] = source;
  queue.push_back(source);
  while (!queue.empty()) {
    const std::uint32_t cur = queue.front();
    queue.pop_front();
    for (Symbol c = 0; c < a.alphabet_size(); ++c) {
      const State x = a.next(cur / n, c);
      const State y = a.next(cur % n, c);
      const auto id = static_cast<std::uint32_t>(x * n + y);
      if (parent[id] != kUnseen) continue;
      parent[id] = cur;
      via[id] = c;
      if (x == y) {
        Word w;
        for (std::uint32_t t = id; t != source; t = parent[t]) w.push_back(via[t]);
        std::reverse(w.begin(), w.end());
        return w;
      }
      queue.push_back(id);
    }
  }
  return std::nullopt;
}

}  // namespace

SyncOutcome greedy_pairs_sync(const Automaton& a) {
  SyncResult result;
  result.strategy = "greedy";
  std::vector<State> images = all_states(a);
  std::uint32_t iteration = 0;
  while (images.size() > 1) {
    ++iteration;
    const auto w = merging_word(a, images[0], images[1]);
    if (!w) {
      return make(CounterexampleKind::not_synchronizable,
                  "states " + std::to_string(images[0]) + " and " + std::to_string(images[1]) + " cannot be merged",
                  {images[0], images[1]}, result.word);
    }
    images = image_set(a, images, *w);
    result.word.insert(result.word.end(), w->begin(), w->end());
    result.trace.push_back({iteration, 0, w->size(), images.size()});
  }
  finish(result, a);
  return result;
}

}  // namespace syncword
