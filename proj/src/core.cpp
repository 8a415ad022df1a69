#include "syncword/core.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace syncword {

Automaton::Automaton(std::size_t states, std::vector<std::string> alphabet, std::vector<State> delta,
                     std::optional<State> start, std::optional<std::vector<State>> accepting,
                     std::vector<std::string> labels)
    : states_(states),
      alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      start_(start),
      accepting_(std::move(accepting)),
      labels_(std::move(labels)) {
  if (states_ == 0) throw Error(ErrorCode::invalid_argument, "automaton needs at least one state");
  if (delta_.size() != states_ * alphabet_.size()) {
    throw Error(ErrorCode::invalid_argument, "transition table has " + std::to_string(delta_.size()) +
                                                 " entries, expected " + std::to_string(states_ * alphabet_.size()));
  }
  std::set<std::string> seen;
  for (const auto& name : alphabet_) {
    if (name.empty()) throw Error(ErrorCode::invalid_argument, "empty symbol name");
    if (!seen.insert(name).second) throw Error(ErrorCode::invalid_argument, "duplicate symbol name '" + name + "'");
  }
  for (std::size_t i = 0; i < delta_.size(); ++i) {
    if (delta_[i] >= states_) {
      throw Error(ErrorCode::invalid_argument, "delta[" + std::to_string(i / alphabet_.size()) + "][" +
                                                   std::to_string(i % alphabet_.size()) + "] = " +
                                                   std::to_string(delta_[i]) + " is not a state");
    }
  }
  if (start_ && *start_ >= states_) throw Error(ErrorCode::invalid_argument, "start state out of range");
  if (accepting_) {
    std::sort(accepting_->begin(), accepting_->end());
    accepting_->erase(std::unique(accepting_->begin(), accepting_->end()), accepting_->end());
    if (!accepting_->empty() && accepting_->back() >= states_) {
      throw Error(ErrorCode::invalid_argument, "accepting state out of range");
    }
  }
  if (!labels_.empty() && labels_.size() != states_) {
    throw Error(ErrorCode::invalid_argument, "labels must name every state");
  }
}

std::vector<State> Automaton::accepting_states() const { return accepting_.value_or(std::vector<State>{}); }

bool Automaton::is_accepting(State q) const {
  if (!accepting_) throw Error(ErrorCode::missing_acceptance, "automaton has no accepting set");
  return std::binary_search(accepting_->begin(), accepting_->end(), q);
}

std::optional<Symbol> Automaton::symbol_index(std::string_view name) const {
  for (Symbol c = 0; c < alphabet_.size(); ++c) {
    if (alphabet_[c] == name) return c;
  }
  return std::nullopt;
}

std::optional<State> Automaton::state_by_label(std::string_view label) const {
  for (State q = 0; q < labels_.size(); ++q) {
    if (labels_[q] == label) return q;
  }
  return std::nullopt;
}

std::string Automaton::state_name(State q) const {
  if (q < labels_.size() && !labels_[q].empty()) return labels_[q];
  return std::to_string(q);
}

Automaton Automaton::with_start(std::optional<State> start) const {
  Automaton copy = *this;
  if (start && *start >= states_) throw Error(ErrorCode::invalid_argument, "start state out of range");
  copy.start_ = start;
  return copy;
}

Automaton Automaton::with_accepting(std::optional<std::vector<State>> accepting) const {
  return Automaton(states_, alphabet_, delta_, start_, std::move(accepting), labels_);
}

Automaton Automaton::with_labels(std::vector<std::string> labels) const {
  return Automaton(states_, alphabet_, delta_, start_, accepting_, std::move(labels));
}

Automaton Automaton::with_alphabet(std::vector<std::string> alphabet) const {
  if (alphabet.size() != alphabet_.size()) throw Error(ErrorCode::alphabet_mismatch, "relabeling changes alphabet size");
  return Automaton(states_, std::move(alphabet), delta_, start_, accepting_, labels_);
}

Word Automaton::parse_word(std::span<const std::string> names) const {
  Word word;
  word.reserve(names.size());
  for (const auto& name : names) {
    auto c = symbol_index(name);
    if (!c) throw Error(ErrorCode::invalid_word, "unknown symbol '" + name + "'");
    word.push_back(*c);
  }
  return word;
}

std::vector<std::string> Automaton::word_names(std::span<const Symbol> word) const {
  check_word(*this, word);
  std::vector<std::string> names;
  names.reserve(word.size());
  for (Symbol c : word) names.push_back(alphabet_[c]);
  return names;
}

void check_word(const Automaton& a, std::span<const Symbol> word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] >= a.alphabet_size()) {
      throw Error(ErrorCode::invalid_word, "symbol index " + std::to_string(word[i]) + " at position " +
                                               std::to_string(i) + " is outside the alphabet");
    }
  }
}

void check_state(const Automaton& a, State q) {
  if (q >= a.size()) throw Error(ErrorCode::invalid_argument, "state " + std::to_string(q) + " out of range");
}

State apply(const Automaton& a, State q, std::span<const Symbol> word) {
  check_state(a, q);
  check_word(a, word);
  for (Symbol c : word) q = a.next(q, c);
  return q;
}

std::vector<State> image_set(const Automaton& a, std::span<const State> states, std::span<const Symbol> word) {
  check_word(a, word);
  std::vector<State> out;
  out.reserve(states.size());
  for (State q : states) {
    check_state(a, q);
    for (Symbol c : word) q = a.next(q, c);
    out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<State> all_states(const Automaton& a) {
  std::vector<State> out(a.size());
  for (State q = 0; q < a.size(); ++q) out[q] = q;
  return out;
}

Automaton product(const Automaton& a1, const Automaton& a2) {
  if (a1.alphabet() != a2.alphabet()) throw Error(ErrorCode::alphabet_mismatch, "product needs identical alphabets");
  const std::size_t n2 = a2.size();
  const std::size_t k = a1.alphabet_size();
  std::vector<State> delta(a1.size() * n2 * k);
  for (State p = 0; p < a1.size(); ++p) {
    for (State q = 0; q < n2; ++q) {
      for (Symbol c = 0; c < k; ++c) {
        delta[(p * n2 + q) * k + c] = static_cast<State>(a1.next(p, c) * n2 + a2.next(q, c));
      }
    }
  }
  std::optional<State> start;
  if (a1.start() && a2.start()) start = static_cast<State>(*a1.start() * n2 + *a2.start());
  std::optional<std::vector<State>> accepting;
  if (a1.has_accepting() && a2.has_accepting()) {
    std::vector<State> acc;
    for (State p : a1.accepting_states()) {
      for (State q : a2.accepting_states()) acc.push_back(static_cast<State>(p * n2 + q));
    }
    accepting = std::move(acc);
  }
  std::vector<std::string> labels;
  if (!a1.labels().empty() || !a2.labels().empty()) {
    for (State p = 0; p < a1.size(); ++p) {
      for (State q = 0; q < n2; ++q) labels.push_back("(" + a1.state_name(p) + "," + a2.state_name(q) + ")");
    }
  }
  return Automaton(a1.size() * n2, a1.alphabet(), std::move(delta), start, std::move(accepting), std::move(labels));
}

std::uint32_t DistanceMatrix::max_finite() const noexcept {
  std::uint32_t best = 0;
  for (auto d : dist_) {
    if (d != kInfinity) best = std::max(best, d);
  }
  return best;
}

std::uint32_t DistanceMatrix::diameter() const noexcept {
  std::uint32_t best = 0;
  for (auto d : dist_) best = std::max(best, d);
  return best;
}

std::vector<std::uint32_t> distances_from(const Automaton& a, State source) {
  check_state(a, source);
  std::vector<std::uint32_t> dist(a.size(), kInfinity);
  std::deque<State> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const State q = queue.front();
    queue.pop_front();
    for (State r : a.row(q)) {
      if (dist[r] == kInfinity) {
        dist[r] = dist[q] + 1;
        queue.push_back(r);
      }
    }
  }
  return dist;
}

std::vector<std::uint32_t> distances_to(const Automaton& a, State target) {
  check_state(a, target);
  std::vector<std::vector<State>> reverse(a.size());
  for (State q = 0; q < a.size(); ++q) {
    for (State r : a.row(q)) reverse[r].push_back(q);
  }
  std::vector<std::uint32_t> dist(a.size(), kInfinity);
  std::deque<State> queue{target};
  dist[target] = 0;
  while (!queue.empty()) {
    const State q = queue.front();
    queue.pop_front();
    for (State p : reverse[q]) {
      if (dist[p] == kInfinity) {
        dist[p] = dist[q] + 1;
        queue.push_back(p);
      }
    }
  }
  return dist;
}

DistanceMatrix distances(const Automaton& a) {
  const std::size_t n = a.size();
  std::vector<std::uint32_t> all(n * n);
  for (State p = 0; p < n; ++p) {
    auto row = distances_from(a, p);
    std::copy(row.begin(), row.end(), all.begin() + static_cast<std::ptrdiff_t>(p * n));
  }
  return DistanceMatrix(n, std::move(all));
}

std::optional<Word> shortest_path_word(const Automaton& a, State p, State q) {
  check_state(a, p);
  check_state(a, q);
  if (p == q) return Word{};
  constexpr State kNone = std::numeric_limits<State>::max();
  std::vector<State> parent(a.size(), kNone);
  std::vector<Symbol> via(a.size(), 0);
  parent[p] = p;
  std::deque<State> queue{p};
  while (!queue.empty()) {
    const State x = queue.front();
    queue.pop_front();
    for (Symbol c = 0; c < a.alphabet_size(); ++c) {
      const State y = a.next(x, c);
      if (parent[y] != kNone) continue;
      parent[y] = x;
      via[y] = c;
      if (y == q) {
        Word word;
        for (State s = q; s != p; s = parent[s]) word.push_back(via[s]);
        std::reverse(word.begin(), word.end());
        return word;
      }
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

std::vector<State> reachable_from(const Automaton& a, State source) {
  auto dist = distances_from(a, source);
  std::vector<State> out;
  for (State q = 0; q < a.size(); ++q) {
    if (dist[q] != kInfinity) out.push_back(q);
  }
  return out;
}

bool is_strongly_connected(const Automaton& a) {
  const auto fwd = distances_from(a, 0);
  const auto bwd = distances_to(a, 0);
  for (State q = 0; q < a.size(); ++q) {
    if (fwd[q] == kInfinity || bwd[q] == kInfinity) return false;
  }
  return true;
}

bool is_bidirectional(const Automaton& a) {
  std::unordered_set<std::uint64_t> arcs;
  auto key = [](State p, State q) { return (static_cast<std::uint64_t>(p) << 32) | q; };
  for (State p = 0; p < a.size(); ++p) {
    for (State q : a.row(p)) {
      if (p != q) arcs.insert(key(p, q));
    }
  }
  for (auto arc : arcs) {
    const auto p = static_cast<State>(arc >> 32);
    const auto q = static_cast<State>(arc & 0xffffffffu);
    if (!arcs.contains(key(q, p))) return false;
  }
  return true;
}

bool is_bidirectional_connected(const Automaton& a) { return is_bidirectional(a) && is_strongly_connected(a); }

std::vector<State> universally_reachable_states(const Automaton& a) {
  std::vector<State> out;
  for (State p = 0; p < a.size(); ++p) {
    const auto to = distances_to(a, p);
    if (std::none_of(to.begin(), to.end(), [](auto d) { return d == kInfinity; })) out.push_back(p);
  }
  return out;
}

std::size_t min_out_neighbours(const Automaton& a) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (State q = 0; q < a.size(); ++q) {
    std::set<State> out;
    for (State r : a.row(q)) {
      if (r != q) out.insert(r);
    }
    best = std::min(best, out.size());
  }
  return best;
}

std::vector<std::uint32_t> indistinguishability_classes(const Automaton& a) {
  if (!a.has_accepting()) throw Error(ErrorCode::missing_acceptance, "indistinguishability needs an accepting set");
  const std::size_t n = a.size();
  std::vector<std::uint32_t> cls(n);
  for (State q = 0; q < n; ++q) cls[q] = a.is_accepting(q) ? 1 : 0;
  std::size_t count = 0;
  while (true) {
    // Signature = own class followed by successor classes; renumber by first appearance.
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> next(n);
    for (State q = 0; q < n; ++q) {
      std::vector<std::uint32_t> sig{cls[q]};
      for (State r : a.row(q)) sig.push_back(cls[r]);
      auto [it, inserted] = ids.try_emplace(std::move(sig), static_cast<std::uint32_t>(ids.size()));
      next[q] = it->second;
    }
    const bool stable = ids.size() == count;
    count = ids.size();
    cls = std::move(next);
    if (stable) break;
  }
  return cls;
}

std::size_t class_count(std::span<const std::uint32_t> classes) {
  std::set<std::uint32_t> distinct(classes.begin(), classes.end());
  return distinct.size();
}

std::optional<Word> distinguishing_word(const Automaton& a1, const Automaton& a2) {
  if (a1.alphabet() != a2.alphabet()) throw Error(ErrorCode::alphabet_mismatch, "language comparison needs identical alphabets");
  if (!a1.start() || !a2.start() || !a1.has_accepting() || !a2.has_accepting()) {
    throw Error(ErrorCode::missing_acceptance, "language comparison needs start and accepting data");
  }
  const std::size_t n2 = a2.size();
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> parent(a1.size() * n2, kNone);
  std::vector<Symbol> via(a1.size() * n2, 0);
  const std::uint64_t origin = static_cast<std::uint64_t>(*a1.start()) * n2 + *a2.start();
  parent[origin] = origin;
  std::deque<std::uint64_t> queue{origin};
  while (!queue.empty()) {
    const std::uint64_t cur = queue.front();
    queue.pop_front();
    const auto p = static_cast<State>(cur / n2);
    const auto q = static_cast<State>(cur % n2);
    if (a1.is_accepting(p) != a2.is_accepting(q)) {
      Word word;
      for (std::uint64_t s = cur; s != origin; s = parent[s]) word.push_back(via[s]);
      std::reverse(word.begin(), word.end());
      return word;
    }
    for (Symbol c = 0; c < a1.alphabet_size(); ++c) {
      const std::uint64_t nxt = static_cast<std::uint64_t>(a1.next(p, c)) * n2 + a2.next(q, c);
      if (parent[nxt] != kNone) continue;
      parent[nxt] = cur;
      via[nxt] = c;
      queue.push_back(nxt);
    }
  }
  return std::nullopt;
}

bool languages_equal(const Automaton& a1, const Automaton& a2) { return !distinguishing_word(a1, a2).has_value(); }

bool is_minimal(const Automaton& a) {
  if (!a.start() || !a.has_accepting()) throw Error(ErrorCode::missing_acceptance, "minimality needs start and accepting data");
  if (reachable_from(a, *a.start()).size() != a.size()) return false;
  return class_count(indistinguishability_classes(a)) == a.size();
}

}  // namespace syncword
