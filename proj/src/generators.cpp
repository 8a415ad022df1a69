#include "syncword/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fixture_data.hpp"
#include "syncword/monoid.hpp"

namespace syncword {

namespace {

std::vector<std::string> letters(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(k <= 26 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i));
  }
  return names;
}

const std::vector<Point> kGridVectors = {
    {Rational(0), Rational(1)}, {Rational(0), Rational(-1)}, {Rational(1), Rational(0)}, {Rational(-1), Rational(0)}};
const std::vector<std::string> kGridNames = {"up", "down", "right", "left"};

std::vector<Point> grid_points(std::size_t w, std::size_t h) {
  std::vector<Point> pts;
  for (std::size_t x = 0; x < w; ++x) {
    for (std::size_t y = 0; y < h; ++y) {
      pts.push_back({Rational(static_cast<std::int64_t>(x)), Rational(static_cast<std::int64_t>(y))});
    }
  }
  return pts;
}

DifferenceAutomaton blocked_grid(std::size_t w, std::size_t h, const std::vector<char>& blocked) {
  return DifferenceAutomaton::from_geometry(grid_points(w, h), kGridVectors, kGridNames,
                                            [&](State q, Symbol c) { return blocked[q * 4 + c] != 0; });
}

}  // namespace

Automaton cerny(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "Cerny automaton needs n >= 2");
  return Automaton::from_function(n, {"a", "b"}, [n](State t, Symbol c) -> State {
    if (c == 0) return t == 0 ? static_cast<State>(n - 1) : t;
    return static_cast<State>((t + n - 1) % n);
  });
}

Automaton cerny_block_monitor(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "Cerny automaton needs n >= 2");
  const auto dead = static_cast<State>(n);
  auto m = Automaton::from_function(n + 1, {"a", "b"}, [n, dead](State j, Symbol c) -> State {
    if (j == dead) return dead;
    if (c == 1) return j + 1 < n ? j + 1 : dead;
    return j == n - 1 ? 0 : dead;
  });
  return m.with_start(State{0}).with_accepting(std::vector<State>{0});
}

DifferenceAutomaton grid(std::size_t w, std::size_t h) {
  if (w == 0 || h == 0) throw Error(ErrorCode::invalid_argument, "grid sides must be positive");
  return DifferenceAutomaton::from_geometry(grid_points(w, h), kGridVectors, kGridNames);
}

DifferenceAutomaton maze(const MazeSpec& spec) {
  const std::size_t w = spec.width;
  const std::size_t h = spec.height;
  if (w == 0 || h == 0) throw Error(ErrorCode::invalid_argument, "maze sides must be positive");
  if (spec.block_fraction < Rational(0) || !(spec.block_fraction < Rational(1))) {
    throw Error(ErrorCode::invalid_argument, "block fraction must lie in [0, 1)");
  }
  const std::size_t n = w * h;
  const auto full = grid(w, h);
  std::vector<char> blocked(n * 4, 0);
  SplitMix64 rng(spec.seed);
  const State corner = static_cast<State>(n - 1);
  auto corner_reachable = [&](const Automaton& a) {
    const auto to = distances_to(a, corner);
    return std::none_of(to.begin(), to.end(), [](std::uint32_t d) { return d == kInfinity; });
  };
  for (State q = 0; q < n; ++q) {
    for (Symbol c = 0; c < 4; ++c) {
      const State r = full.base().next(q, c);
      if (r == q) continue;
      if (spec.bidirectional && (c == 1 || c == 3)) continue;  // handled with its reverse
      if (!rng.chance(spec.block_fraction)) continue;
      const Symbol back = c ^ 1;  // up<->down, right<->left
      blocked[q * 4 + c] = 1;
      if (spec.bidirectional) blocked[r * 4 + back] = 1;
      const auto trial = blocked_grid(w, h, blocked);
      const bool keep = spec.bidirectional ? is_strongly_connected(trial.base()) : corner_reachable(trial.base());
      if (!keep) {
        blocked[q * 4 + c] = 0;
        if (spec.bidirectional) blocked[r * 4 + back] = 0;
      }
    }
  }
  return blocked_grid(w, h, blocked);
}

OrderedAutomaton zn_z2_counterexample(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "counterexample needs n >= 2");
  auto a = Automaton::from_function(2 * n, {"up", "down", "turn"}, [n](State s, Symbol c) -> State {
    const State p = s / 2;
    const State q = s % 2;
    if (c == 0) return 2 * p + 1;
    if (c == 1) return 2 * p;
    return static_cast<State>(2 * ((p + 1) % n) + q);
  });
  std::vector<std::string> labels;
  std::vector<std::pair<State, State>> pairs;
  for (State p = 0; p < n; ++p) {
    labels.push_back("(" + std::to_string(p) + ",0)");
    labels.push_back("(" + std::to_string(p) + ",1)");
    pairs.emplace_back(2 * p, 2 * p + 1);
  }
  return {a.with_labels(std::move(labels)), StateOrder::from_pairs(2 * n, pairs)};
}

Automaton random_unitary(std::size_t n, std::size_t symbols, std::uint64_t seed) {
  if (n == 0 || symbols == 0) throw Error(ErrorCode::invalid_argument, "sizes must be positive");
  SplitMix64 rng(seed);
  std::vector<State> delta(n * symbols);
  for (State q = 0; q < n; ++q) {
    for (Symbol c = 0; c < symbols; ++c) delta[q * symbols + c] = q;
  }
  for (Symbol c = 0; c < symbols; ++c) {
    if (n == 1 || rng.below(4) == 0) continue;
    const auto p = static_cast<State>(rng.below(n));
    auto q = static_cast<State>(rng.below(n - 1));
    if (q >= p) ++q;
    delta[p * symbols + c] = q;
  }
  Automaton a(n, letters(symbols), std::move(delta));
  if (!is_unitary(a)) throw Error(ErrorCode::internal, "generated automaton is not unitary");
  return a;
}

Automaton random_commutative_aperiodic(const std::vector<std::uint32_t>& caps, std::uint64_t seed) {
  if (caps.empty()) throw Error(ErrorCode::invalid_argument, "need at least one counter");
  std::size_t n = 1;
  for (auto c : caps) n *= c + 1;
  // Mixed radix, first counter most significant.
  std::vector<std::size_t> weight(caps.size(), 1);
  for (std::size_t i = caps.size() - 1; i-- > 0;) weight[i] = weight[i + 1] * (caps[i + 1] + 1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < caps.size(); ++i) names.push_back("c" + std::to_string(i));
  auto a = Automaton::from_function(n, names, [&](State q, Symbol c) -> State {
    const std::size_t digit = (q / weight[c]) % (caps[c] + 1);
    return digit < caps[c] ? static_cast<State>(q + weight[c]) : q;
  });
  SplitMix64 rng(seed);
  std::vector<State> accepting;
  for (State q = 0; q < n; ++q) {
    if (rng.below(2) == 0) accepting.push_back(q);
  }
  a = a.with_start(State{0}).with_accepting(std::move(accepting));
  if (!is_commutative(a) || is_aperiodic(a).verdict != Verdict::yes) {
    throw Error(ErrorCode::internal, "counter automaton is not commutative and aperiodic");
  }
  return a;
}

Automaton random_automaton(std::size_t n, std::size_t symbols, std::uint64_t seed) {
  if (n == 0 || symbols == 0) throw Error(ErrorCode::invalid_argument, "sizes must be positive");
  SplitMix64 rng(seed);
  std::vector<State> delta(n * symbols);
  for (auto& t : delta) t = static_cast<State>(rng.below(n));
  return Automaton(n, letters(symbols), std::move(delta));
}

Automaton random_monotone(std::size_t n, std::size_t symbols, std::uint64_t seed) {
  if (n == 0 || symbols == 0) throw Error(ErrorCode::invalid_argument, "sizes must be positive");
  SplitMix64 rng(seed);
  std::vector<State> perm(n);
  std::iota(perm.begin(), perm.end(), State{0});
  for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[rng.below(i + 1)]);
  std::vector<State> delta(n * symbols);
  for (Symbol c = 0; c < symbols; ++c) {
    std::vector<State> values(n);
    for (auto& v : values) v = static_cast<State>(rng.below(n));
    std::sort(values.begin(), values.end());
    for (State q = 0; q < n; ++q) delta[perm[q] * symbols + c] = perm[values[q]];
  }
  Automaton a(n, letters(symbols), std::move(delta));
  if (is_aperiodic(a).verdict != Verdict::yes) throw Error(ErrorCode::internal, "monotone automaton is not aperiodic");
  return a;
}

namespace {

const std::map<std::string, std::string>& fixture_table() {
  static const std::map<std::string, std::string> table = [] {
    std::map<std::string, std::string> t;
    for (std::size_t i = 0; i < detail::kFixtureCount; ++i) t.emplace(detail::kFixtures[i].name, detail::kFixtures[i].text);
    return t;
  }();
  return table;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : fixture_table()) names.push_back(name);
  return names;
}

const std::string& fixture_text(const std::string& name) {
  const auto& t = fixture_table();
  auto it = t.find(name);
  if (it == t.end()) throw Error(ErrorCode::invalid_argument, "unknown fixture '" + name + "'");
  return it->second;
}

io::AnyAutomaton fixture(const std::string& name) { return io::read_automaton(fixture_text(name)); }

SignFunction fixture_sign(const std::string& name, const Automaton& context) {
  const auto doc = io::parse_document(fixture_text(name));
  if (doc.kind != io::DocumentKind::sign_function) throw Error(ErrorCode::invalid_argument, name + " is not a sign function");
  return io::sign_from_json(doc.payload, context.alphabet());
}

StateOrder fixture_order(const std::string& name, std::size_t n) {
  const auto doc = io::parse_document(fixture_text(name));
  if (doc.kind != io::DocumentKind::state_order) throw Error(ErrorCode::invalid_argument, name + " is not a state order");
  return io::order_from_json(doc.payload, n);
}

}  // namespace syncword
