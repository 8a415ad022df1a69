#include "syncword/positivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "subset_table.hpp"

namespace syncword {

const char* to_string(SignKind k) {
  switch (k) {
    case SignKind::all_positive: return "all_positive";
    case SignKind::regular: return "regular";
    case SignKind::geometric: return "geometric";
  }
  return "all_positive";
}

SignFunction SignFunction::regular(Automaton monitor) {
  if (!monitor.start() || !monitor.has_accepting()) {
    throw Error(ErrorCode::missing_acceptance, "sign monitor needs a start state and an accepting set");
  }
  return SignFunction(RegularSign{std::move(monitor)});
}

SignFunction SignFunction::geometric(DifferenceAutomaton host, CornerCertificate certificate) {
  if (!verify_corner_certificate(host, certificate)) {
    throw Error(ErrorCode::invalid_argument, "corner certificate does not verify");
  }
  return SignFunction(GeometricSign{std::move(certificate), std::move(host)});
}

namespace {

void check_monitor(const Automaton& a, const Automaton& monitor) {
  if (monitor.alphabet() != a.alphabet()) throw Error(ErrorCode::alphabet_mismatch, "monitor alphabet differs from automaton");
}

void check_host(const Automaton& a, const GeometricSign& g) {
  if (g.host.size() != a.size() || g.host.base().alphabet() != a.alphabet()) {
    throw Error(ErrorCode::invalid_argument, "geometric sign function belongs to a different automaton");
  }
}

bool displacement_nonnegative(const GeometricSign& g, State from, State to) {
  return !(dot(g.certificate.direction, subtract(g.host.point(to), g.host.point(from))) < Rational(0));
}

PositiveDistanceResult regular_distance(const Automaton& a, const Automaton& monitor, State p, State q) {
  const std::size_t m = monitor.size();
  const std::size_t total = a.size() * m;
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> parent(total, kUnseen);
  std::vector<Symbol> via(total, 0);
  std::deque<std::uint32_t> queue;
  const auto source = static_cast<std::uint32_t>(p * m + *monitor.start());
  parent[source] = source;
  queue.push_back(source);
  while (!queue.empty()) {
    const std::uint32_t cur = queue.front();
    queue.pop_front();
    const State x = cur / m;
    const State s = cur % m;
    for (Symbol c = 0; c < a.alphabet_size(); ++c) {
      const State nx = a.next(x, c);
      const State ns = monitor.next(s, c);
      const auto id = static_cast<std::uint32_t>(nx * m + ns);
      if (nx == q && monitor.is_accepting(ns)) {
        Word w{c};
        for (std::uint32_t t = cur; t != source; t = parent[t]) w.push_back(via[t]);
        std::reverse(w.begin(), w.end());
        return {static_cast<std::uint32_t>(w.size()), std::move(w)};
      }
      if (parent[id] != kUnseen) continue;
      parent[id] = cur;
      via[id] = c;
      queue.push_back(id);
    }
  }
  return {};
}

PositiveDistanceResult plain_distance(const Automaton& a, State p, State q) {
  auto w = shortest_path_word(a, p, q);
  if (!w) return {};
  return {static_cast<std::uint32_t>(w->size()), std::move(w)};
}

}  // namespace

bool SignFunction::positive(const Automaton& a, State from, const Word& word) const {
  if (word.empty()) return true;
  check_word(a, word);
  if (const auto* r = as_regular()) {
    check_monitor(a, r->monitor);
    return r->monitor.is_accepting(apply(r->monitor, *r->monitor.start(), word));
  }
  if (const auto* g = as_geometric()) {
    check_host(a, *g);
    check_state(a, from);
    return displacement_nonnegative(*g, from, apply(a, from, word));
  }
  return true;
}

PositiveDistanceResult positive_distance(const Automaton& a, const SignFunction& f, State p, State q) {
  check_state(a, p);
  check_state(a, q);
  if (p == q) return {0, Word{}};
  if (const auto* r = f.as_regular()) {
    check_monitor(a, r->monitor);
    return regular_distance(a, r->monitor, p, q);
  }
  if (const auto* g = f.as_geometric()) {
    check_host(a, *g);
    // Every walk p -> q has displacement q - p, so positivity is a property
    // of the endpoints alone.
    if (!displacement_nonnegative(*g, p, q)) return {};
  }
  return plain_distance(a, p, q);
}

std::vector<PositiveDistanceResult> positive_distances_to(const Automaton& a, const SignFunction& f, State z) {
  std::vector<PositiveDistanceResult> out;
  out.reserve(a.size());
  for (State q = 0; q < a.size(); ++q) out.push_back(positive_distance(a, f, q, z));
  return out;
}

CornerCheck is_f_corner(const Automaton& a, const SignFunction& f, State z) {
  check_state(a, z);
  for (State q = 0; q < a.size(); ++q) {
    if (q == z) continue;
    const auto to = positive_distance(a, f, q, z).distance;
    const auto from = positive_distance(a, f, z, q).distance;
    if (!(to < from)) return {false, q, to, from};
  }
  return {true, std::nullopt, 0, 0};
}

SignFunction sync_language_sign(const Automaton& a, State z, std::size_t cap) {
  check_state(a, z);
  const std::size_t k = a.alphabet_size();
  detail::SubsetTable table(a.size());
  const std::size_t words = table.words();
  table.insert(detail::SubsetTable::full(a.size()).data());
  std::vector<State> delta;
  std::vector<std::uint64_t> scratch(words);
  for (std::uint32_t id = 0; id < table.size(); ++id) {
    for (Symbol c = 0; c < k; ++c) {
      detail::SubsetTable::image(a, table.get(id), c, scratch.data(), words);
      auto [next, inserted] = table.insert(scratch.data());
      if (inserted && table.size() > cap) {
        throw Error(ErrorCode::cap_exceeded, "subset monitor exceeds " + std::to_string(cap) + " subsets");
      }
      delta.push_back(next);
    }
  }
  std::vector<State> accepting;
  std::vector<std::uint64_t> singleton(words, 0);
  singleton[z / 64] |= std::uint64_t{1} << (z % 64);
  for (std::uint32_t id = 0; id < table.size(); ++id) {
    if (std::equal(singleton.begin(), singleton.end(), table.get(id))) accepting.push_back(id);
  }
  return SignFunction::regular(Automaton(table.size(), a.alphabet(), std::move(delta), State{0}, std::move(accepting)));
}

Automaton begins_with_monitor(const std::vector<std::string>& alphabet, const std::vector<std::string>& first) {
  // 0: nothing read yet, 1: accepted prefix, 2: rejected prefix.
  std::vector<State> delta;
  for (State s = 0; s < 3; ++s) {
    for (const auto& name : alphabet) {
      if (s == 0) {
        delta.push_back(std::find(first.begin(), first.end(), name) != first.end() ? 1 : 2);
      } else {
        delta.push_back(s);
      }
    }
  }
  for (const auto& name : first) {
    if (std::find(alphabet.begin(), alphabet.end(), name) == alphabet.end()) {
      throw Error(ErrorCode::invalid_word, "unknown symbol '" + name + "'");
    }
  }
  return Automaton(3, alphabet, std::move(delta), State{0}, std::vector<State>{1}, {"start", "yes", "no"});
}

namespace {

Automaton trivial_monitor(const Automaton& a) {
  return Automaton(1, a.alphabet(), std::vector<State>(a.alphabet_size(), 0), State{0}, std::vector<State>{0});
}

std::optional<OrderingViolation> check_preservation(const Automaton& a, const Automaton& monitor,
                                                    const StateOrder& order) {
  const std::size_t n = a.size();
  const std::size_t m = monitor.size();
  const std::uint64_t total = std::uint64_t{n} * n * m;
  if (total > (std::uint64_t{1} << 28)) throw Error(ErrorCode::cap_exceeded, "order check state space too large");
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> parent(total, kUnseen);
  std::vector<Symbol> via(total, 0);
  std::deque<std::uint32_t> queue;
  auto encode = [&](State p, State q, State s) { return static_cast<std::uint32_t>((std::uint64_t{p} * n + q) * m + s); };
  for (auto [p, q] : order.strict_pairs()) {
    const auto id = encode(p, q, *monitor.start());
    parent[id] = id;
    queue.push_back(id);
  }
  while (!queue.empty()) {
    const std::uint32_t cur = queue.front();
    queue.pop_front();
    const State s = cur % m;
    const State q = (cur / m) % n;
    const State p = static_cast<State>(cur / m / n);
    for (Symbol c = 0; c < a.alphabet_size(); ++c) {
      const State np = a.next(p, c);
      const State nq = a.next(q, c);
      const State ns = monitor.next(s, c);
      const auto id = encode(np, nq, ns);
      if (parent[id] != kUnseen) continue;
      parent[id] = cur;
      via[id] = c;
      if (monitor.is_accepting(ns) && !order.leq(np, nq)) {
        Word w;
        std::uint32_t t = id;
        for (; parent[t] != t; t = parent[t]) w.push_back(via[t]);
        std::reverse(w.begin(), w.end());
        const State p0 = static_cast<State>(t / m / n);
        const State q0 = (t / m) % n;
        return OrderingViolation{1,
                                 "positive word maps " + std::to_string(p0) + " <= " + std::to_string(q0) + " to " +
                                     std::to_string(np) + ", " + std::to_string(nq) + " out of order",
                                 {p0, q0, np, nq},
                                 std::move(w)};
      }
      queue.push_back(id);
    }
  }
  return std::nullopt;
}

std::optional<State> unreachable_from(const Automaton& a, const SignFunction& f, State m) {
  for (State q = 0; q < a.size(); ++q) {
    if (positive_distance(a, f, q, m).distance == kInfinity) return q;
  }
  return std::nullopt;
}

}  // namespace

FOrderingReport verify_f_ordering(const Automaton& a, const SignFunction& f, const StateOrder& order) {
  if (f.kind() == SignKind::geometric) {
    throw Error(ErrorCode::invalid_argument, "order preservation is not decidable for geometric sign functions");
  }
  if (order.size() != a.size()) throw Error(ErrorCode::invalid_argument, "order size differs from automaton");
  const Automaton monitor = f.as_regular() ? f.as_regular()->monitor : trivial_monitor(a);
  check_monitor(a, monitor);

  FOrderingReport report;
  auto v1 = check_preservation(a, monitor, order);
  report.order_preserved = !v1.has_value();
  if (v1) report.violation = std::move(v1);

  if (order.universal()) {
    const State u = *order.universal();
    report.has_universal = true;
    for (State q = 0; q < a.size(); ++q) {
      if (!order.comparable(u, q)) {
        report.has_universal = false;
        if (!report.violation) {
          report.violation = OrderingViolation{
              2, "designated element " + std::to_string(u) + " is incomparable to " + std::to_string(q), {u, q}, {}};
        }
        break;
      }
    }
    if (report.has_universal) report.universal = u;
  } else {
    report.universal = order.find_universal();
    report.has_universal = report.universal.has_value();
    if (!report.has_universal && !report.violation) {
      report.violation = OrderingViolation{2, "no state is comparable to every state", {}, {}};
    }
  }

  std::vector<State> candidates = order.maximal() ? std::vector<State>{*order.maximal()} : order.maximal_elements();
  std::optional<OrderingViolation> v3;
  for (State m : candidates) {
    if (!order.is_maximal(m)) {
      if (!v3) v3 = OrderingViolation{3, "designated element " + std::to_string(m) + " is not maximal", {m}, {}};
      continue;
    }
    if (auto q = unreachable_from(a, f, m)) {
      if (!v3) {
        v3 = OrderingViolation{3, "no positive word maps " + std::to_string(*q) + " to " + std::to_string(m), {*q, m}, {}};
      }
      continue;
    }
    report.maximal = m;
    report.maximal_reachable = true;
    break;
  }
  if (!report.maximal_reachable && !report.violation) {
    report.violation = v3 ? v3 : OrderingViolation{3, "order has no maximal element", {}, {}};
  }
  return report;
}

}  // namespace syncword
