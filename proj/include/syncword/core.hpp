#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syncword/error.hpp"

namespace syncword {

using State = std::uint32_t;
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Sentinel for "no path"; serialized as the string "inf".
inline constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();

/// Complete DFA over dense state and symbol indices. The transition table is
/// stored row-major (one row of |alphabet| targets per state) and doubles as
/// the labeled digraph: each entry is an arc q -> next(q, c) labeled c.
class Automaton {
 public:
  Automaton() = default;
  Automaton(std::size_t states, std::vector<std::string> alphabet, std::vector<State> delta,
            std::optional<State> start = std::nullopt, std::optional<std::vector<State>> accepting = std::nullopt,
            std::vector<std::string> labels = {});

  template <class Fn>
  static Automaton from_function(std::size_t states, std::vector<std::string> alphabet, Fn&& fn) {
    std::vector<State> delta(states * alphabet.size());
    for (State q = 0; q < states; ++q) {
      for (Symbol c = 0; c < alphabet.size(); ++c) delta[q * alphabet.size() + c] = fn(q, c);
    }
    return Automaton(states, std::move(alphabet), std::move(delta));
  }

  std::size_t size() const noexcept { return states_; }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  State next(State q, Symbol c) const noexcept { return delta_[q * alphabet_.size() + c]; }
  std::span<const State> row(State q) const noexcept {
    return {delta_.data() + q * alphabet_.size(), alphabet_.size()};
  }
  const std::vector<State>& table() const noexcept { return delta_; }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const std::optional<State>& start() const noexcept { return start_; }
  bool has_accepting() const noexcept { return accepting_.has_value(); }
  /// Sorted accepting states; empty when absent.
  std::vector<State> accepting_states() const;
  const std::optional<std::vector<State>>& accepting() const noexcept { return accepting_; }
  bool is_accepting(State q) const;

  std::optional<Symbol> symbol_index(std::string_view name) const;
  std::optional<State> state_by_label(std::string_view label) const;
  /// Display name: the label if present, else the index.
  std::string state_name(State q) const;

  Automaton with_start(std::optional<State> start) const;
  Automaton with_accepting(std::optional<std::vector<State>> accepting) const;
  Automaton with_labels(std::vector<std::string> labels) const;
  Automaton with_alphabet(std::vector<std::string> alphabet) const;

  /// Symbol names to indices; throws Error(invalid_word) on unknown names.
  Word parse_word(std::span<const std::string> names) const;
  std::vector<std::string> word_names(std::span<const Symbol> word) const;

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  std::size_t states_ = 0;
  std::vector<std::string> alphabet_;
  std::vector<State> delta_;
  std::optional<State> start_;
  std::optional<std::vector<State>> accepting_;
  std::vector<std::string> labels_;
};

State apply(const Automaton& a, State q, std::span<const Symbol> word);
/// Sorted, duplicate-free image of the given state set.
std::vector<State> image_set(const Automaton& a, std::span<const State> states, std::span<const Symbol> word);
std::vector<State> all_states(const Automaton& a);
void check_word(const Automaton& a, std::span<const Symbol> word);
void check_state(const Automaton& a, State q);

/// Pair (q1, q2) is flattened to q1 * a2.size() + q2.
Automaton product(const Automaton& a1, const Automaton& a2);

/// All-pairs shortest directed path lengths, kInfinity where unreachable.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<std::uint32_t> dist) : n_(n), dist_(std::move(dist)) {}

  std::size_t size() const noexcept { return n_; }
  std::uint32_t at(State p, State q) const noexcept { return dist_[p * n_ + q]; }
  /// Largest finite entry.
  std::uint32_t max_finite() const noexcept;
  /// Largest entry, kInfinity if any pair is unreachable.
  std::uint32_t diameter() const noexcept;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> dist_;
};

DistanceMatrix distances(const Automaton& a);
std::vector<std::uint32_t> distances_from(const Automaton& a, State source);
std::vector<std::uint32_t> distances_to(const Automaton& a, State target);
/// Breadth-first shortest word routing p to q, symbols tried in index order.
std::optional<Word> shortest_path_word(const Automaton& a, State p, State q);

bool is_strongly_connected(const Automaton& a);
/// Every non-loop arc (p, q) has some reverse arc (q, p), labels ignored.
bool is_bidirectional(const Automaton& a);
bool is_bidirectional_connected(const Automaton& a);
std::vector<State> universally_reachable_states(const Automaton& a);
std::vector<State> reachable_from(const Automaton& a, State source);
/// Minimum number of distinct non-loop out-neighbours over all states.
std::size_t min_out_neighbours(const Automaton& a);

/// Moore partition refinement. Returns a class id per state; ids are
/// numbered in order of first appearance by state index.
std::vector<std::uint32_t> indistinguishability_classes(const Automaton& a);
std::size_t class_count(std::span<const std::uint32_t> classes);

/// Product reachability from the start pair; true iff no reachable pair
/// disagrees on acceptance.
bool languages_equal(const Automaton& a1, const Automaton& a2);
/// Shortest word accepted by exactly one of a1, a2, if any.
std::optional<Word> distinguishing_word(const Automaton& a1, const Automaton& a2);

/// All states reachable from start and all pairs distinguishable.
bool is_minimal(const Automaton& a);

}  // namespace syncword
