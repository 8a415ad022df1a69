#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "syncword/core.hpp"

namespace syncword {

enum class Verdict { no, yes, unknown };

const char* to_string(Verdict v);

inline constexpr std::size_t kDefaultMonoidCap = 100000;

/// Element of the transition monoid together with a shortest word realizing it.
struct Transformation {
  std::vector<State> map;
  Word shortest_word;
};

/// A word whose action cycles some state with period > 1.
struct PeriodicWitness {
  Word word;
  State state = 0;
  std::uint32_t period = 0;
};

/// A word of length L cyclically permuting `cycle` with every consecutive
/// pair (cyclically) at distance exactly L.
struct GeodesicViolation {
  Word word;
  std::vector<State> cycle;
};

struct MonoidSummary {
  std::vector<Transformation> elements;  // identity (empty word) first
  bool truncated = false;
  Verdict aperiodic = Verdict::unknown;
  std::optional<std::uint32_t> index_bound;
  bool commutative = false;
  Verdict geodesically_aperiodic = Verdict::unknown;
  std::optional<PeriodicWitness> periodic_witness;
  std::optional<GeodesicViolation> geodesic_witness;
};

/// Breadth-first closure of the generators; words are extended on the right,
/// so the first discovery of a map carries a shortest realizing word.
/// Stops with truncated = true once more than `cap` elements are found.
MonoidSummary enumerate_monoid(const Automaton& a, std::size_t cap = kDefaultMonoidCap);

/// Composition s then t (apply s first): (s;t)(q) = t(s(q)).
std::vector<State> compose(const std::vector<State>& s, const std::vector<State>& t);

/// Smallest m >= 1 with t^{m+1} = t^m, and the period of the eventual cycle.
struct PowerStructure {
  std::uint32_t index = 1;
  std::uint32_t period = 1;
  std::optional<State> cycling_state;  // a state on a cycle of length period > 1
};
PowerStructure power_structure(const std::vector<State>& map);

struct AperiodicityResult {
  Verdict verdict = Verdict::unknown;
  std::optional<PeriodicWitness> witness;
};

AperiodicityResult is_aperiodic(const Automaton& a, std::size_t cap = kDefaultMonoidCap);
/// Max over monoid elements of their index. Throws Error(precondition) if
/// the automaton is not aperiodic and Error(cap_exceeded) when truncated.
std::uint32_t aperiodicity_index(const Automaton& a, std::size_t cap = kDefaultMonoidCap);

/// Generator commutativity, which is equivalent to monoid commutativity.
bool is_commutative(const Automaton& a);
/// Every symbol acts as the identity or moves exactly one state.
bool is_unitary(const Automaton& a);

struct GeodesicResult {
  Verdict verdict = Verdict::unknown;
  std::optional<GeodesicViolation> witness;
};

/// Exact decision: a violation exists iff some element t with shortest word
/// length s has a cycle of length >= 2 whose consecutive distances all equal
/// s. Any violating word of length L realizing t has each cycle distance at
/// most s <= L, so equality forces L = s and the shortest word is itself a
/// violation; checking one word per element is therefore complete.
GeodesicResult is_geodesically_aperiodic(const Automaton& a, std::size_t cap = kDefaultMonoidCap);

/// Independent bounded search: enumerates every word up to `max_length` and
/// looks for a geodesic cyclic permutation directly.
std::optional<GeodesicViolation> find_geodesic_violation_by_enumeration(const Automaton& a,
                                                                        std::size_t max_length = 12);

}  // namespace syncword
