#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "syncword/core.hpp"

namespace syncword {

/// Partial order on the states of an automaton, stored as its full
/// reflexive-transitive relation. Optionally carries designated universally
/// comparable (u) and maximal (m) elements.
class StateOrder {
 public:
  StateOrder() = default;

  /// Closes the given pairs (p <= q) reflexively and transitively. Throws
  /// Error(invalid_argument) naming a pair that breaks antisymmetry.
  static StateOrder from_pairs(std::size_t n, const std::vector<std::pair<State, State>>& pairs,
                               std::optional<State> universal = std::nullopt,
                               std::optional<State> maximal = std::nullopt);
  static StateOrder from_relation(std::size_t n, const std::function<bool(State, State)>& leq,
                                  std::optional<State> universal = std::nullopt,
                                  std::optional<State> maximal = std::nullopt);

  /// Only reflexive pairs.
  static StateOrder discrete(std::size_t n);
  /// 0 <= 1 <= ... <= n-1.
  static StateOrder total(std::size_t n);
  /// Every state below `top`, all others incomparable; u = m = top.
  static StateOrder star(std::size_t n, State top);

  std::size_t size() const noexcept { return n_; }
  bool leq(State p, State q) const noexcept { return rel_[p * n_ + q] != 0; }
  bool less(State p, State q) const noexcept { return p != q && leq(p, q); }
  bool comparable(State p, State q) const noexcept { return leq(p, q) || leq(q, p); }

  const std::vector<State>& minimal_elements() const noexcept { return minimal_; }
  /// Elements of `subset` with no strict predecessor inside `subset`, in
  /// input order.
  std::vector<State> minimal_among(const std::vector<State>& subset) const;

  const std::optional<State>& universal() const noexcept { return universal_; }
  const std::optional<State>& maximal() const noexcept { return maximal_; }
  StateOrder with_designated(std::optional<State> universal, std::optional<State> maximal) const;

  /// Lowest-index state comparable to every state.
  std::optional<State> find_universal() const;
  bool is_maximal(State m) const;
  std::vector<State> maximal_elements() const;

  /// All strict pairs p < q, lexicographic.
  std::vector<std::pair<State, State>> strict_pairs() const;

  friend bool operator==(const StateOrder&, const StateOrder&) = default;

 private:
  void finish();
  std::vector<State> all_states_of() const;

  std::size_t n_ = 0;
  std::vector<char> rel_;
  std::vector<State> minimal_;
  std::optional<State> universal_;
  std::optional<State> maximal_;
};

}  // namespace syncword
