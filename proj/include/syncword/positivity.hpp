#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "syncword/core.hpp"
#include "syncword/geometry.hpp"
#include "syncword/order.hpp"

namespace syncword {

struct AllPositive {
  friend bool operator==(const AllPositive&, const AllPositive&) = default;
};

/// Positive words: the empty word and every word the monitor accepts.
struct RegularSign {
  Automaton monitor;
  friend bool operator==(const RegularSign&, const RegularSign&) = default;
};

/// Walk-level rule: a walk is positive iff a * (end - start) >= 0.
struct GeometricSign {
  CornerCertificate certificate;
  DifferenceAutomaton host;
  friend bool operator==(const GeometricSign&, const GeometricSign&) = default;
};

enum class SignKind { all_positive, regular, geometric };

class SignFunction {
 public:
  SignFunction() = default;

  static SignFunction all_positive() { return SignFunction(AllPositive{}); }
  /// Monitor needs a start and an accepting set.
  static SignFunction regular(Automaton monitor);
  static SignFunction geometric(DifferenceAutomaton host, CornerCertificate certificate);

  SignKind kind() const noexcept { return static_cast<SignKind>(body_.index()); }
  const RegularSign* as_regular() const noexcept { return std::get_if<RegularSign>(&body_); }
  const GeometricSign* as_geometric() const noexcept { return std::get_if<GeometricSign>(&body_); }

  /// Whether the walk labeled `word` from `from` in `a` is positive.
  bool positive(const Automaton& a, State from, const Word& word) const;

  friend bool operator==(const SignFunction&, const SignFunction&) = default;

 private:
  using Body = std::variant<AllPositive, RegularSign, GeometricSign>;
  explicit SignFunction(Body body) : body_(std::move(body)) {}
  Body body_;
};

const char* to_string(SignKind k);

struct PositiveDistanceResult {
  std::uint32_t distance = kInfinity;
  std::optional<Word> witness;
};

/// Length of a shortest positive walk p -> q, with a witness. 0 and the empty
/// word when p == q.
PositiveDistanceResult positive_distance(const Automaton& a, const SignFunction& f, State p, State q);
/// positive_distance(a, f, q, z) for every q.
std::vector<PositiveDistanceResult> positive_distances_to(const Automaton& a, const SignFunction& f, State z);

struct CornerCheck {
  bool holds = false;
  std::optional<State> witness;  // some q with dist+(q, z) >= dist+(z, q)
  std::uint32_t to_corner = 0;   // dist+(witness, z)
  std::uint32_t from_corner = 0; // dist+(z, witness)
};

/// z is an f-corner iff dist+(q, z) < dist+(z, q) for every q != z.
CornerCheck is_f_corner(const Automaton& a, const SignFunction& f, State z);

inline constexpr std::size_t kDefaultSubsetMonitorCap = std::size_t{1} << 20;

/// Monitor for the z-synchronizing words: the reachable part of the subset
/// automaton started at the full state set with {z} as the only accepting
/// subset. Throws Error(cap_exceeded) past `cap` subsets.
SignFunction sync_language_sign(const Automaton& a, State z, std::size_t cap = kDefaultSubsetMonitorCap);

/// Monitor accepting the nonempty words whose first symbol is in `first`.
Automaton begins_with_monitor(const std::vector<std::string>& alphabet, const std::vector<std::string>& first);

struct OrderingViolation {
  int condition = 0;  // 1, 2 or 3
  std::string message;
  std::vector<State> states;
  Word word;
};

struct FOrderingReport {
  bool order_preserved = false;    // condition (1)
  bool has_universal = false;      // condition (2)
  bool maximal_reachable = false;  // condition (3)
  std::optional<State> universal;  // u
  std::optional<State> maximal;    // m
  std::optional<OrderingViolation> violation;  // first failure

  bool holds() const noexcept { return order_preserved && has_universal && maximal_reachable; }
};

/// Checks the three f-ordering conditions. Condition (1) explores every
/// triple (p', q', monitor state) reachable from a comparable pair and tests
/// p' <= q' wherever the monitor accepts, plus at the start. Designated u and
/// m are used when present, otherwise the lowest-index candidates are
/// searched. GEOMETRIC sign functions are rejected with
/// Error(invalid_argument).
FOrderingReport verify_f_ordering(const Automaton& a, const SignFunction& f, const StateOrder& order);

}  // namespace syncword
