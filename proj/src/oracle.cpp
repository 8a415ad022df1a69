#include "syncword/oracle.hpp"

#include <algorithm>

#include "subset_table.hpp"

namespace syncword {

namespace {

OracleResult search(const Automaton& a, std::optional<State> goal, std::size_t cap) {
  if (goal) check_state(a, *goal);
  using detail::SubsetTable;
  SubsetTable table(a.size());
  const std::size_t words = table.words();
  std::vector<std::uint32_t> parent{0};
  std::vector<Symbol> via{0};
  table.insert(SubsetTable::full(a.size()).data());

  auto done = [&](std::uint32_t id) -> std::optional<State> {
    const auto* bits = table.get(id);
    if (SubsetTable::popcount(bits, words) != 1) return std::nullopt;
    const State s = SubsetTable::first_state(bits, words);
    if (goal && s != *goal) return std::nullopt;
    return s;
  };
  auto result_for = [&](std::uint32_t id, State s) {
    Word w;
    for (std::uint32_t t = id; t != 0; t = parent[t]) w.push_back(via[t]);
    std::reverse(w.begin(), w.end());
    OracleResult r;
    r.synchronizable = true;
    r.shortest_length = static_cast<std::uint32_t>(w.size());
    r.word = std::move(w);
    r.target = s;
    r.subsets_explored = table.size();
    return r;
  };

  if (auto s = done(0)) return result_for(0, *s);
  std::vector<std::uint64_t> scratch(words);
  // Ids are assigned in discovery order, so scanning them is the BFS queue.
  for (std::uint32_t id = 0; id < table.size(); ++id) {
    for (Symbol c = 0; c < a.alphabet_size(); ++c) {
      SubsetTable::image(a, table.get(id), c, scratch.data(), words);
      auto [next, inserted] = table.insert(scratch.data());
      if (!inserted) continue;
      if (table.size() > cap) {
        throw Error(ErrorCode::cap_exceeded, "subset search exceeds " + std::to_string(cap) + " subsets");
      }
      parent.push_back(id);
      via.push_back(c);
      if (auto s = done(next)) return result_for(next, *s);
    }
  }
  OracleResult r;
  r.subsets_explored = table.size();
  return r;
}

}  // namespace

OracleResult shortest_sync(const Automaton& a, std::size_t cap) { return search(a, std::nullopt, cap); }

OracleResult shortest_sync_to(const Automaton& a, State z, std::size_t cap) { return search(a, z, cap); }

bool verify_sync(const Automaton& a, const Word& word, std::optional<State> expected_target) {
  check_word(a, word);
  const auto everything = all_states(a);
  const auto image = image_set(a, everything, word);
  if (image.size() != 1) return false;
  return !expected_target || image.front() == *expected_target;
}

std::size_t rank(const Automaton& a, const Word& word) {
  check_word(a, word);
  const auto everything = all_states(a);
  return image_set(a, everything, word).size();
}

}  // namespace syncword
