#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "syncword/core.hpp"
#include "syncword/rational.hpp"

namespace syncword {

using Point = std::vector<Rational>;

/// An automaton whose states are distinct points in Q^d and whose symbols are
/// translation vectors: every transition either stays put or moves q to
/// q + vector. Construction does not validate; call validate().
class DifferenceAutomaton {
 public:
  DifferenceAutomaton() = default;
  DifferenceAutomaton(Automaton base, std::size_t dim, std::vector<Point> points, std::vector<Point> vectors);

  /// Builds the table from geometry: symbol c moves q to q + vectors[c] when
  /// that point exists and `blocked(q, c)` is false, and loops otherwise.
  static DifferenceAutomaton from_geometry(std::vector<Point> points, std::vector<Point> vectors,
                                           std::vector<std::string> names,
                                           const std::function<bool(State, Symbol)>& blocked = {});

  const Automaton& base() const noexcept { return base_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return base_.size(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const std::vector<Point>& vectors() const noexcept { return vectors_; }
  const Point& point(State q) const { return points_.at(q); }
  std::optional<State> find_point(const Point& p) const;

  DifferenceAutomaton with_base(Automaton base) const;

  friend bool operator==(const DifferenceAutomaton&, const DifferenceAutomaton&) = default;

 private:
  Automaton base_;
  std::size_t dim_ = 0;
  std::vector<Point> points_;
  std::vector<Point> vectors_;
};

Point add(const Point& p, const Point& q);
Point subtract(const Point& p, const Point& q);
Rational dot(const std::vector<std::int64_t>& a, const Point& p);

struct Violation {
  std::string message;
  std::optional<State> state;
  std::optional<Symbol> symbol;
};

/// Checks shapes, distinct points, nonzero vectors, the move-or-stay rule,
/// and that every vector labeling some actual move is a difference of two
/// points. Reports the first failure.
std::optional<Violation> validate(const DifferenceAutomaton& d);

/// z with a * points[z] > a * points[q] for every other state q.
struct CornerCertificate {
  State corner = 0;
  std::vector<std::int64_t> direction;

  friend bool operator==(const CornerCertificate&, const CornerCertificate&) = default;
};

/// Lexicographic maximum of the points, with direction (W^{d-1}, ..., W, 1)
/// where W = 1 + 2B and B bounds every coordinate difference once the
/// denominators are cleared. The certificate is checked before returning.
CornerCertificate choose_corner(const DifferenceAutomaton& d);
bool verify_corner_certificate(const DifferenceAutomaton& d, const CornerCertificate& cert);

struct UnitaryEmbedding {
  DifferenceAutomaton automaton;
  std::vector<State> state_map;    // original state -> embedded state
  std::vector<Symbol> symbol_map;  // original symbol -> embedded symbol
};

/// One-dimensional embedding of a unitary automaton on the Sidon set
/// {2^k}: a symbol acting as p -> q gets vector 2^q - 2^p, the i-th identity
/// symbol gets i + 1/3, which is never a difference of two points.
UnitaryEmbedding embed_unitary(const Automaton& a);
bool check_isomorphism(const Automaton& a, const UnitaryEmbedding& e);

inline constexpr std::size_t kDefaultBoxCap = 1000000;

struct BoxConstruction {
  DifferenceAutomaton automaton;  // same symbol names as the source
  std::uint32_t side = 0;         // m: states are the integer points of [0, m]^|alphabet|
};

/// Language-equivalent difference automaton for a commutative aperiodic
/// automaton: symbol c becomes the basis vector e_c, the origin is the start,
/// and a point k is accepting iff c_1^{k_1} ... c_r^{k_r} is accepted.
BoxConstruction box_construction(const Automaton& a, std::size_t cap = kDefaultBoxCap);

/// Merges indistinguishable states of a strongly connected difference
/// automaton into class centroids. Throws Error(precondition) when a class
/// is not a translate of every class it reaches.
DifferenceAutomaton minimize_difference(const DifferenceAutomaton& d);

struct MergeWitness {
  Symbol symbol = 0;
  State target = 0;
  std::vector<State> preimage;
};

/// The symbol/state pair with the largest preimage (lowest indices on ties).
MergeWitness largest_preimage(const Automaton& a);
/// For a minimal strongly connected automaton, a symbol merging three or
/// more states into one certifies that no difference automaton accepts the
/// same language.
std::optional<MergeWitness> representability_obstruction(const Automaton& a);

struct DegreeDiameterBounds {
  Rational diameter_bound;  // 3n/(k+1) - 1
  Rational word_bound;      // (9n^3 - 9n^2)/(2(k+1)^2) + (3n - 3n^2)/(2(k+1))
  bool cerny_flag = false;  // n >= 5 and k >= 3 sqrt(n/2) - 1
};

DegreeDiameterBounds degree_diameter_bounds(std::int64_t n, std::int64_t k);

}  // namespace syncword
