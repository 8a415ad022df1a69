#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "syncword/core.hpp"

namespace syncword {

inline constexpr std::size_t kDefaultOracleCap = std::size_t{1} << 22;

struct OracleResult {
  bool synchronizable = false;
  std::optional<std::uint32_t> shortest_length;
  std::optional<Word> word;
  std::optional<State> target;
  std::size_t subsets_explored = 0;
};

/// Breadth-first search of the subset automaton from the full state set.
/// The witness is the first shortest word found with symbols tried in index
/// order. Throws Error(cap_exceeded) when more than `cap` subsets are visited.
OracleResult shortest_sync(const Automaton& a, std::size_t cap = kDefaultOracleCap);
/// Same search, stopping only at the singleton {z}.
OracleResult shortest_sync_to(const Automaton& a, State z, std::size_t cap = kDefaultOracleCap);

bool verify_sync(const Automaton& a, const Word& word, std::optional<State> expected_target = std::nullopt);
std::size_t rank(const Automaton& a, const Word& word);

}  // namespace syncword
