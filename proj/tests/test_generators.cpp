#include <doctest.h>

#include <set>

#include "support.hpp"
#include "syncword/generators.hpp"
#include "syncword/io.hpp"
#include "syncword/monoid.hpp"

using namespace syncword;

TEST_CASE("SplitMix64 reference outputs") {
  SplitMix64 zero(0);
  CHECK(zero.next() == 0xE220A8397B1DCDAFull);
  CHECK(zero.next() == 0x6E789E6AA1B965F4ull);
  CHECK(zero.next() == 0x06C45D188009454Full);
  SplitMix64 r(1234567);
  CHECK(r.next() == 6457827717110365317ull);
  CHECK(r.next() == 3203168211198807973ull);
  CHECK(r.next() == 9817491932198370423ull);
  SplitMix64 c(5);
  const std::uint64_t raw = SplitMix64(5).next();
  CHECK(c.chance(Rational(1, 4)) == (raw % 4 < 1));
}

TEST_CASE("Cerny transition table") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto a = cerny(n);
    REQUIRE(a.alphabet() == std::vector<std::string>{"a", "b"});
    for (State t = 0; t < n; ++t) {
      REQUIRE(a.next(t, 0) == (t == 0 ? n - 1 : t));
      REQUIRE(a.next(t, 1) == (t + n - 1) % n);
    }
  }
  CHECK_THROWS_AS(cerny(1), Error);
}

TEST_CASE("grids") {
  const auto one = grid(1, 1);
  CHECK(one.size() == 1);
  for (Symbol c = 0; c < 4; ++c) CHECK(one.base().next(0, c) == 0);

  const auto g = grid(3, 3);
  CHECK(distances(g.base()).diameter() == 4);
  CHECK(validate(g) == std::nullopt);
  const auto w = grid(4, 2);
  for (State q = 0; q < w.size(); ++q) {
    const auto x = static_cast<std::int64_t>(q / 2);
    const auto y = static_cast<std::int64_t>(q % 2);
    REQUIRE(w.point(q) == Point{Rational(x), Rational(y)});
    REQUIRE(w.base().next(q, *w.base().symbol_index("up")) == (y + 1 < 2 ? q + 1 : q));
    REQUIRE(w.base().next(q, *w.base().symbol_index("right")) == (x + 1 < 4 ? q + 2 : q));
  }
}

TEST_CASE("mazes") {
  CHECK(maze({4, 3, 9, Rational(0), true}).base().table() == grid(4, 3).base().table());
  CHECK_THROWS_AS(maze({3, 3, 1, Rational(1), true}), Error);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    for (bool bidirectional : {true, false}) {
      const MazeSpec spec{2 + seed % 5, 2 + seed % 3, seed, Rational(1, 3), bidirectional};
      const auto d = maze(spec);
      const auto g = grid(spec.width, spec.height);
      REQUIRE(validate(d) == std::nullopt);
      // Every move either follows the grid or stays put.
      for (State q = 0; q < d.size(); ++q) {
        for (Symbol c = 0; c < 4; ++c) {
          const State r = d.base().next(q, c);
          REQUIRE((r == g.base().next(q, c) || r == q));
        }
      }
      if (bidirectional) {
        REQUIRE(is_bidirectional_connected(d.base()));
      } else {
        const auto to = brute::all_pairs(d.base());
        for (State q = 0; q < d.size(); ++q) REQUIRE(to[q][d.size() - 1] != kInfinity);
      }
      REQUIRE(maze(spec).base() == d.base());
    }
  }
  std::set<std::vector<State>> tables;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) tables.insert(maze({5, 5, seed, Rational(1, 4), true}).base().table());
  CHECK(tables.size() > 5);
}

TEST_CASE("golden maze document") {
  const auto golden = io::read_text(std::string(SYNCWORD_DATA_DIR) + "/golden/maze_4x4_seed1.json");
  const auto generated = maze({4, 4, 1, Rational(1, 4), true});
  CHECK(io::write_difference(generated) == golden);
  const auto back = io::read_automaton(golden);
  REQUIRE(std::holds_alternative<DifferenceAutomaton>(back));
  CHECK(std::get<DifferenceAutomaton>(back).base() == generated.base());
  CHECK(generated.base().table() != grid(4, 4).base().table());
}

TEST_CASE("cyclic counterexample structure") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto [a, order] = zn_z2_counterexample(n);
    REQUIRE(a.size() == 2 * n);
    for (State p = 0; p < n; ++p) {
      for (State q = 0; q < 2; ++q) {
        const State s = 2 * p + q;
        REQUIRE(a.next(s, 0) == 2 * p + 1);
        REQUIRE(a.next(s, 1) == 2 * p);
        REQUIRE(a.next(s, 2) == 2 * ((p + 1) % n) + q);
      }
      REQUIRE(order.less(2 * p, 2 * p + 1));
      REQUIRE_FALSE(order.less(2 * p + 1, 2 * p));
    }
    REQUIRE(is_strongly_connected(a));
    REQUIRE_FALSE(brute::shortest_sync_length(a).has_value());
  }
}

TEST_CASE("unitary family") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto a = random_unitary(1 + seed % 7, 1 + seed % 4, seed);
    for (Symbol c = 0; c < a.alphabet_size(); ++c) {
      std::size_t moved = 0;
      for (State q = 0; q < a.size(); ++q) moved += a.next(q, c) != q ? 1 : 0;
      REQUIRE(moved <= 1);
    }
    REQUIRE(is_unitary(a));
  }
}

TEST_CASE("commutative counter family") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::vector<std::uint32_t> caps;
    for (std::size_t i = 0; i < 1 + seed % 3; ++i) caps.push_back(static_cast<std::uint32_t>((seed >> i) % 4));
    const auto a = random_commutative_aperiodic(caps, seed);
    std::size_t n = 1;
    std::uint32_t top = 0;
    for (auto c : caps) {
      n *= c + 1;
      top = std::max(top, c);
    }
    REQUIRE(a.size() == n);
    REQUIRE(a.start() == State{0});
    REQUIRE(is_commutative(a));
    REQUIRE(brute::aperiodicity_index(a) == std::max<std::size_t>(top, 1));
  }
  const auto idle = random_commutative_aperiodic({0}, 3);
  CHECK(idle.size() == 1);
  CHECK(idle.next(0, 0) == 0);
}

TEST_CASE("monotone family") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto a = random_monotone(1 + seed % 8, 1 + seed % 3, seed);
    REQUIRE(brute::aperiodicity_index(a).has_value());
    REQUIRE(random_monotone(1 + seed % 8, 1 + seed % 3, seed) == a);
  }
}

TEST_CASE("figure fixtures") {
  const auto names = fixture_names();
  CHECK(names.size() == 11);
  for (const auto& name : names) {
    const auto on_disk = io::read_text(std::string(SYNCWORD_DATA_DIR) + "/fixtures/" + name + ".json");
    REQUIRE(on_disk == fixture_text(name));
  }
  const auto fig1 = std::get<Automaton>(fixture("fig1"));
  CHECK(apply(fig1, *fig1.state_by_label("q"), fig1.parse_word(std::vector<std::string>{"c", "c"})) ==
        *fig1.state_by_label("p"));
  const auto fig2 = std::get<DifferenceAutomaton>(fixture("fig2"));
  CHECK(validate(fig2) == std::nullopt);
  CHECK(is_bidirectional_connected(fig2.base()));
  const auto fig5 = std::get<Automaton>(fixture("fig5"));
  CHECK(fig5.state_by_label("z") == State{4});
  CHECK(fig5.state_by_label("z'") == State{0});
  const auto fig6 = std::get<Automaton>(fixture("fig6"));
  CHECK(fig6.state_by_label("M") == State{12});
  CHECK(fixture_order("fig6_order", fig6.size()).size() == fig6.size());
  CHECK_THROWS_AS(fixture("nope"), Error);
}
