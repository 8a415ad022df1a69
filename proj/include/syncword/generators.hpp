#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "syncword/core.hpp"
#include "syncword/geometry.hpp"
#include "syncword/io.hpp"
#include "syncword/order.hpp"
#include "syncword/positivity.hpp"
#include "syncword/rational.hpp"

namespace syncword {

/// SplitMix64: state += 0x9E3779B97F4A7C15, then
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9, z = (z ^ (z >> 27)) * 0x94D049BB133111EB,
/// output z ^ (z >> 31).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  /// next() % bound; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }
  /// next() % q < p for a fraction p/q in [0, 1].
  bool chance(const Rational& p) noexcept {
    return static_cast<std::int64_t>(below(static_cast<std::uint64_t>(p.den()))) < p.num();
  }

 private:
  std::uint64_t state_;
};

/// States Z_n, a: 0 -> n-1 (others fixed), b: t -> t-1.
Automaton cerny(std::size_t n);
/// Monitor for concatenations of b^{n-1} a: state j < n counts the b's of
/// the current block, n is dead. Start and only accepting state: 0.
Automaton cerny_block_monitor(std::size_t n);

/// Rectangle [0, w-1] x [0, h-1], state index x*h + y, symbols
/// up, down, right, left.
DifferenceAutomaton grid(std::size_t w, std::size_t h);

struct MazeSpec {
  std::size_t width = 1;
  std::size_t height = 1;
  std::uint64_t seed = 0;
  Rational block_fraction = Rational(0);
  bool bidirectional = true;
};

/// Random blocking on a grid. Candidates are visited by state index, then
/// symbol, consuming one draw each. Bidirectional mazes block an up/right
/// move together with its reverse and keep the graph strongly connected;
/// directed mazes block single moves and keep the corner (w-1, h-1)
/// reachable from every state.
DifferenceAutomaton maze(const MazeSpec& spec);

struct OrderedAutomaton {
  Automaton automaton;
  StateOrder order;
};

/// Z_n x Z_2 with up, down, turn; state (p, q) has index 2p + q and the order
/// puts (p, 0) below (p, 1).
OrderedAutomaton zn_z2_counterexample(std::size_t n);

/// Each symbol is the identity with probability 1/4, else one random move p -> q.
Automaton random_unitary(std::size_t n, std::size_t symbols, std::uint64_t seed);
/// Independent saturating counters (symbol c_i raises counter i up to
/// caps[i]), start at zero, random accepting set.
Automaton random_commutative_aperiodic(const std::vector<std::uint32_t>& caps, std::uint64_t seed);
/// Uniformly random transition table.
Automaton random_automaton(std::size_t n, std::size_t symbols, std::uint64_t seed);
/// Order-preserving random maps on a hidden chain, states relabeled at
/// random; aperiodic by construction.
Automaton random_monotone(std::size_t n, std::size_t symbols, std::uint64_t seed);

/// Names of the shipped figure transcriptions.
std::vector<std::string> fixture_names();
/// Raw document text of a fixture.
const std::string& fixture_text(const std::string& name);
io::AnyAutomaton fixture(const std::string& name);
SignFunction fixture_sign(const std::string& name, const Automaton& context);
StateOrder fixture_order(const std::string& name, std::size_t n);

}  // namespace syncword
