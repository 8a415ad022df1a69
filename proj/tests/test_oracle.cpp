#include <doctest.h>

#include "support.hpp"
#include "syncword/generators.hpp"
#include "syncword/oracle.hpp"

using namespace syncword;

TEST_CASE("Cerny automata reach the square bound") {
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto r = shortest_sync(cerny(n));
    REQUIRE(r.synchronizable);
    CHECK(*r.shortest_length == (n - 1) * (n - 1));
    CHECK(r.word->size() == *r.shortest_length);
    CHECK(verify_sync(cerny(n), *r.word, r.target));
  }
}

TEST_CASE("non-synchronizable and trivial inputs") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto r = shortest_sync(zn_z2_counterexample(n).automaton);
    CHECK_FALSE(r.synchronizable);
    CHECK_FALSE(r.shortest_length.has_value());
    CHECK_FALSE(r.word.has_value());
  }
  const auto one = Automaton::from_function(1, {"a"}, [](State, Symbol) { return State{0}; });
  const auto r = shortest_sync(one);
  CHECK(r.synchronizable);
  CHECK(r.shortest_length == 0u);
  CHECK(r.target == State{0});
}

TEST_CASE("witness is the first shortest word in length-lex order") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto a = random_automaton(2 + seed % 6, 1 + seed % 3, seed);
    const auto r = shortest_sync(a);
    const auto ref = brute::shortest_sync_length(a);
    REQUIRE(r.synchronizable == ref.has_value());
    if (!ref) continue;
    REQUIRE(*r.shortest_length == *ref);
    if (*ref > 9) continue;
    std::optional<Word> first;
    brute::for_each_word(a.alphabet_size(), *ref, [&](const Word& w) {
      if (brute::image(a, w).size() == 1) {
        first = w;
        return false;
      }
      return true;
    });
    REQUIRE(first == r.word);
    REQUIRE(brute::image(a, *r.word) == std::vector<State>{*r.target});
  }
}

TEST_CASE("targeted search") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto a = random_automaton(2 + seed % 6, 2, seed);
    for (State z = 0; z < a.size(); ++z) {
      const auto r = shortest_sync_to(a, z);
      const auto ref = brute::shortest_sync_length(a, z);
      REQUIRE(r.synchronizable == ref.has_value());
      if (!ref) continue;
      REQUIRE(*r.shortest_length == *ref);
      REQUIRE(r.target == z);
      REQUIRE(verify_sync(a, *r.word, z));
    }
  }
  const auto g = grid(3, 3);
  const auto corner = choose_corner(g).corner;
  const auto r = shortest_sync_to(g.base(), corner);
  REQUIRE(r.synchronizable);
  // Both coordinates are clamped in two moves each.
  CHECK(*r.shortest_length == 4);
  CHECK(*shortest_sync(g.base()).shortest_length == 4);
}

TEST_CASE("images shrink monotonically along the witness") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto a = random_automaton(3 + seed % 6, 2, seed);
    const auto r = shortest_sync(a);
    if (!r.synchronizable) continue;
    std::vector<State> current = all_states(a);
    std::size_t previous = current.size();
    for (std::size_t i = 0; i < r.word->size(); ++i) {
      current = image_set(a, current, Word{(*r.word)[i]});
      REQUIRE(current.size() <= previous);
      previous = current.size();
    }
    REQUIRE(current.size() == 1);
  }
}

TEST_CASE("verify_sync and rank") {
  const auto c = cerny(4);
  CHECK_FALSE(verify_sync(c, {}));
  CHECK(rank(c, {}) == 4);
  const auto w = *shortest_sync(c).word;
  CHECK(verify_sync(c, w));
  CHECK_FALSE(verify_sync(c, w, State{(*shortest_sync(c).target + 1) % 4}));
  CHECK(rank(c, w) == 1);
  CHECK(rank(c, Word{0}) == 3);
  CHECK(rank(c, Word{1}) == 4);

  const auto g = grid(3, 3).base();
  const auto left = g.parse_word(std::vector<std::string>{"left", "left"});
  CHECK(rank(g, left) == 3);
  CHECK_FALSE(verify_sync(g, left));
  CHECK_THROWS_AS(verify_sync(g, Word{9}), Error);
}

TEST_CASE("exceeding the subset cap is an error") {
  try {
    shortest_sync(cerny(8), 10);
    FAIL("expected cap_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cap_exceeded);
  }
  CHECK_NOTHROW(shortest_sync(cerny(4), 100));
}
