#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "syncword/core.hpp"
#include "syncword/monoid.hpp"
#include "syncword/order.hpp"
#include "syncword/positivity.hpp"

namespace syncword {

struct TraceRecord {
  std::uint32_t iteration = 0;  // 1-based within its loop
  std::uint32_t loop = 0;       // pair loop / phase index, 0-based
  std::uint64_t chunk_length = 0;
  std::uint64_t potential = 0;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct SyncResult {
  std::string strategy;
  Word word;
  std::vector<State> target;  // sorted image of all states under word
  std::vector<TraceRecord> trace;
  std::optional<std::uint64_t> bound;
  std::uint64_t d_used = 0;
  std::uint64_t n_used = 0;
  std::uint64_t k_used = 0;
  bool bound_is_soft = false;
  bool within_bound = true;

  friend bool operator==(const SyncResult&, const SyncResult&) = default;
};

enum class CounterexampleKind { not_a_corner, unreachable, not_synchronizable, geodesic_violation, not_f_ordered };

const char* to_string(CounterexampleKind k);

/// Structured refutation of a strategy's hypotheses on the given input.
struct Counterexample {
  CounterexampleKind kind = CounterexampleKind::not_synchronizable;
  std::string message;
  std::vector<State> states;
  Word word;
  std::vector<std::uint32_t> distances;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

using SyncOutcome = std::variant<SyncResult, Counterexample>;

inline bool succeeded(const SyncOutcome& o) { return std::holds_alternative<SyncResult>(o); }

/// Pair-loop cornering toward z. Each pair loop alternately routes whichever
/// of the two tracks is away from z back to z along a shortest positive
/// walk; the lagging distance after iteration i must be at most d - i.
/// Bound: d(d+1)(n - rank_target)/2 with d = max_q dist+(q, z).
SyncOutcome cornering_sync(const Automaton& a, const SignFunction& f, State z, std::size_t rank_target = 1);

/// Active-set iteration toward the maximal element m of an f-ordering.
/// Bound: d * k with d = max_q dist+(q, m) and k minimal elements.
SyncOutcome f_ordered_sync(const Automaton& a, const SignFunction& f, const StateOrder& order);

/// f-ordered route for aperiodic automata with the star order at a state z
/// minimizing max_q dist(q, z). Bound: (n - 1)(l + 1)d.
SyncOutcome aperiodic_sync(const Automaton& a, std::size_t cap = kDefaultMonoidCap);

/// Repeats a shortest word x -> r on the pair (x, reference) until the pair
/// distance drops. Bound d^2 n(n-1) + d(n-1) with d the largest finite
/// distance is reported, not enforced.
SyncOutcome geodesic_sync(const Automaton& a, State z);

/// (z1, z2)-synchronizing word for the product: tau1 tau2 pi. The result's
/// target holds the flattened product state z1 * n2 + z2.
SyncOutcome product_corner_sync(const Automaton& a1, const SignFunction& f1, State z1, const Automaton& a2,
                                const SignFunction& f2, State z2);

/// Repeatedly merges the two lowest distinct images with a shortest merging word.
SyncOutcome greedy_pairs_sync(const Automaton& a);

}  // namespace syncword
