#include <doctest.h>

#include <random>

#include "support.hpp"
#include "syncword/core.hpp"
#include "syncword/generators.hpp"
#include "syncword/oracle.hpp"

using namespace syncword;

namespace {

Automaton fig1() { return std::get<Automaton>(fixture("fig1")); }

Automaton single_state() { return Automaton::from_function(1, {"a", "b"}, [](State, Symbol) { return State{0}; }); }

// Two disjoint copies of a 3-cycle with acceptance at the same position.
Automaton doubled_cycle() {
  auto a = Automaton::from_function(6, {"a"}, [](State q, Symbol) -> State { return (q / 3) * 3 + (q % 3 + 1) % 3; });
  return a.with_start(State{0}).with_accepting(std::vector<State>{0, 3});
}

}  // namespace

TEST_CASE("apply follows the transition table") {
  const auto a = fig1();
  const State q = *a.state_by_label("q");
  const State p = *a.state_by_label("p");
  CHECK(apply(a, q, a.parse_word(std::vector<std::string>{"c", "c"})) == p);
  for (State s = 0; s < a.size(); ++s) CHECK(apply(a, s, {}) == s);
  const auto c4 = cerny(4);
  CHECK(apply(c4, 0, Word{1}) == 3);
}

TEST_CASE("action law on random words") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_automaton(2 + trial % 7, 1 + trial % 3, static_cast<std::uint64_t>(trial));
    const auto u = brute::random_word(rng, a.alphabet_size(), 6);
    const auto v = brute::random_word(rng, a.alphabet_size(), 6);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    const State q = static_cast<State>(rng() % a.size());
    REQUIRE(apply(a, q, uv) == apply(a, apply(a, q, u), v));
    REQUIRE(apply(a, q, uv) == brute::run(a, q, uv));
  }
}

TEST_CASE("image_set") {
  const auto c3 = cerny(3);
  const auto word = *shortest_sync(c3).word;
  const auto all = all_states(c3);
  CHECK(image_set(c3, all, word).size() == 1);
  CHECK(image_set(c3, std::vector<State>{1}, {}) == std::vector<State>{1});

  const auto fig3 = std::get<DifferenceAutomaton>(fixture("fig3")).base();
  const State p = *fig3.state_by_label("p");
  const State q = *fig3.state_by_label("q");
  const auto tau = fig3.parse_word(std::vector<std::string>{"left", "down", "right", "down", "right", "up", "up", "left"});
  const std::vector<State> pq = {std::min(p, q), std::max(p, q)};
  CHECK(image_set(fig3, pq, tau) == pq);
  CHECK(apply(fig3, p, tau) == q);
  CHECK(apply(fig3, q, tau) == p);
}

TEST_CASE("product") {
  const auto m1 = std::get<Automaton>(fixture("fig4_m1"));
  const auto m2 = std::get<Automaton>(fixture("fig4_m2"));
  const auto drawn = std::get<Automaton>(fixture("fig4_product"));
  const auto p = product(m1, m2);
  CHECK(p.size() == 6);
  CHECK(p.table() == drawn.table());

  const auto g = grid(4, 2).base();
  const auto point = Automaton::from_function(1, g.alphabet(), [](State, Symbol) { return State{0}; });
  CHECK(product(g, point).table() == g.table());

  const auto g2 = grid(2, 2).base();
  const auto gg = product(g2, g2);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto w = brute::random_word(rng, 4, 8);
    for (State s = 0; s < gg.size(); ++s) {
      const State r = apply(gg, s, w);
      REQUIRE(r / 4 == apply(g2, s / 4, w));
      REQUIRE(r % 4 == apply(g2, s % 4, w));
    }
  }
}

TEST_CASE("distances") {
  const auto g = grid(5, 3).base();
  const auto d = distances(g);
  CHECK(d.at(4 * 3 + 2, 0) == 6);
  for (State q = 0; q < g.size(); ++q) CHECK(d.at(q, q) == 0);

  const auto z = zn_z2_counterexample(5).automaton;
  CHECK(distances(z).at(0, 2) == 1);
  CHECK(*shortest_path_word(z, 0, 2) == Word{2});

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto a = random_automaton(1 + seed % 9, 1 + seed % 3, seed);
    const auto m = distances(a);
    const auto ref = brute::all_pairs(a);
    for (State p = 0; p < a.size(); ++p) {
      for (State q = 0; q < a.size(); ++q) {
        REQUIRE(m.at(p, q) == ref[p][q]);
        for (State r = 0; r < a.size(); ++r) {
          if (m.at(p, r) != kInfinity && m.at(r, q) != kInfinity) REQUIRE(m.at(p, q) <= m.at(p, r) + m.at(r, q));
        }
      }
      const auto from = distances_from(a, p);
      const auto to = distances_to(a, p);
      for (State q = 0; q < a.size(); ++q) {
        REQUIRE(from[q] == ref[p][q]);
        REQUIRE(to[q] == ref[q][p]);
      }
    }
  }
}

TEST_CASE("bidirectional connected automata have symmetric distances") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto d = maze({4, 4, seed, Rational(1, 3), true}).base();
    REQUIRE(is_bidirectional_connected(d));
    const auto m = distances(d);
    for (State p = 0; p < d.size(); ++p) {
      for (State q = 0; q < d.size(); ++q) REQUIRE(m.at(p, q) == m.at(q, p));
    }
  }
}

TEST_CASE("connectivity predicates") {
  const auto g = grid(5, 3).base();
  CHECK(is_strongly_connected(g));
  CHECK(is_bidirectional(g));
  CHECK(is_bidirectional_connected(g));
  CHECK_FALSE(is_strongly_connected(fig1()));
  const auto one = single_state();
  CHECK(is_strongly_connected(one));
  CHECK(is_bidirectional(one));
  CHECK(is_bidirectional_connected(one));
  CHECK_FALSE(is_bidirectional(cerny(4)));
}

TEST_CASE("universally reachable states") {
  CHECK(universally_reachable_states(grid(3, 2).base()).size() == 6);

  const auto a = fig1();
  const auto u = universally_reachable_states(a);
  const auto ref = brute::all_pairs(a);
  std::vector<State> expected;
  for (State z = 0; z < a.size(); ++z) {
    bool all = true;
    for (State q = 0; q < a.size(); ++q) all = all && ref[q][z] != kInfinity;
    if (all) expected.push_back(z);
  }
  CHECK(u == expected);
  CHECK_FALSE(u.empty());
  CHECK(u.size() < a.size());

  const auto z = zn_z2_counterexample(5).automaton;
  CHECK(universally_reachable_states(z).size() == z.size());
  CHECK_FALSE(shortest_sync(z).synchronizable);
}

TEST_CASE("out-neighbours") {
  CHECK(min_out_neighbours(grid(3, 3).base()) == 2);
  CHECK(min_out_neighbours(single_state()) == 0);
}

namespace {

// One more refinement round on top of a partition.
std::size_t refine_count(const Automaton& a, const std::vector<std::uint32_t>& cls) {
  std::set<std::vector<std::uint32_t>> keys;
  for (State q = 0; q < a.size(); ++q) {
    std::vector<std::uint32_t> key{cls[q]};
    for (Symbol c = 0; c < a.alphabet_size(); ++c) key.push_back(cls[a.next(q, c)]);
    keys.insert(key);
  }
  return keys.size();
}

// Pair-table distinguishability, iterated to a fixed point.
std::vector<std::vector<bool>> distinguishable(const Automaton& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<bool>> d(n, std::vector<bool>(n));
  for (State p = 0; p < n; ++p) {
    for (State q = 0; q < n; ++q) d[p][q] = a.is_accepting(p) != a.is_accepting(q);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (State p = 0; p < n; ++p) {
      for (State q = 0; q < n; ++q) {
        if (d[p][q]) continue;
        for (Symbol c = 0; c < a.alphabet_size(); ++c) {
          if (d[a.next(p, c)][a.next(q, c)]) {
            d[p][q] = true;
            changed = true;
            break;
          }
        }
      }
    }
  }
  return d;
}

}  // namespace

TEST_CASE("indistinguishability classes") {
  const auto everything = cerny(4).with_start(State{0}).with_accepting(all_states(cerny(4)));
  CHECK(class_count(indistinguishability_classes(everything)) == 1);

  const auto doubled = doubled_cycle();
  const auto cls = indistinguishability_classes(doubled);
  CHECK(class_count(cls) == 3);
  for (State q = 0; q < 3; ++q) CHECK(cls[q] == cls[q + 3]);

  const auto c = cerny(5).with_start(State{0}).with_accepting(std::vector<State>{0});
  CHECK(is_minimal(c));
  CHECK(class_count(indistinguishability_classes(c)) == 5);
  CHECK_FALSE(is_minimal(doubled));

  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto n = 1 + seed % 8;
    auto a = random_automaton(n, 2, seed);
    std::vector<State> acc;
    for (State q = 0; q < n; ++q) {
      if ((seed >> (q % 5)) & 1) acc.push_back(q);
    }
    a = a.with_start(State{0}).with_accepting(acc);
    const auto k = indistinguishability_classes(a);
    REQUIRE(refine_count(a, k) == class_count(k));
    const auto d = distinguishable(a);
    for (State p = 0; p < n; ++p) {
      for (State q = 0; q < n; ++q) REQUIRE((k[p] == k[q]) == !d[p][q]);
    }
  }
}

TEST_CASE("language equality") {
  const auto d = doubled_cycle();
  CHECK(languages_equal(d, d));
  const auto c3 = cerny(3).with_start(State{0}).with_accepting(std::vector<State>{0});
  const auto c4 = cerny(4).with_start(State{0}).with_accepting(std::vector<State>{0});
  CHECK_FALSE(languages_equal(c3, c4));
  const auto w = distinguishing_word(c3, c4);
  REQUIRE(w.has_value());
  CHECK(brute::accepts(c3, *w) != brute::accepts(c4, *w));
  CHECK(brute::same_language_upto(c3, c4, w->size() - 1));

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto a = random_automaton(1 + seed % 4, 2, seed).with_start(State{0});
    auto b = random_automaton(1 + (seed / 4) % 4, 2, seed + 1000).with_start(State{0});
    a = a.with_accepting(std::vector<State>{0});
    b = b.with_accepting(std::vector<State>{0});
    // Words up to n1 * n2 suffice to separate different languages.
    REQUIRE(languages_equal(a, b) == brute::same_language_upto(a, b, a.size() * b.size()));
  }
}

TEST_CASE("malformed automata are rejected") {
  CHECK_THROWS_AS(Automaton(2, {"a"}, {0, 2}), Error);
  CHECK_THROWS_AS(Automaton(2, {"a"}, {0}), Error);
  CHECK_THROWS_AS(Automaton(2, {"a", "a"}, {0, 0, 1, 1}), Error);
  CHECK_THROWS_AS(cerny(3).parse_word(std::vector<std::string>{"z"}), Error);
}
