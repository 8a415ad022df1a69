#include "syncword/geometry.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "syncword/monoid.hpp"

namespace syncword {

DifferenceAutomaton::DifferenceAutomaton(Automaton base, std::size_t dim, std::vector<Point> points,
                                         std::vector<Point> vectors)
    : base_(std::move(base)), dim_(dim), points_(std::move(points)), vectors_(std::move(vectors)) {}

DifferenceAutomaton DifferenceAutomaton::from_geometry(std::vector<Point> points, std::vector<Point> vectors,
                                                       std::vector<std::string> names,
                                                       const std::function<bool(State, Symbol)>& blocked) {
  if (points.empty()) throw Error(ErrorCode::invalid_argument, "difference automaton needs at least one point");
  const std::size_t dim = points.front().size();
  std::map<Point, State> index;
  for (State q = 0; q < points.size(); ++q) index.emplace(points[q], q);
  std::vector<State> delta(points.size() * vectors.size());
  for (State q = 0; q < points.size(); ++q) {
    for (Symbol c = 0; c < vectors.size(); ++c) {
      State target = q;
      if (!blocked || !blocked(q, c)) {
        auto it = index.find(add(points[q], vectors[c]));
        if (it != index.end()) target = it->second;
      }
      delta[q * vectors.size() + c] = target;
    }
  }
  Automaton base(points.size(), std::move(names), std::move(delta));
  return DifferenceAutomaton(std::move(base), dim, std::move(points), std::move(vectors));
}

std::optional<State> DifferenceAutomaton::find_point(const Point& p) const {
  for (State q = 0; q < points_.size(); ++q) {
    if (points_[q] == p) return q;
  }
  return std::nullopt;
}

DifferenceAutomaton DifferenceAutomaton::with_base(Automaton base) const {
  return DifferenceAutomaton(std::move(base), dim_, points_, vectors_);
}

Point add(const Point& p, const Point& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::invalid_argument, "dimension mismatch");
  Point out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] + q[i];
  return out;
}

Point subtract(const Point& p, const Point& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::invalid_argument, "dimension mismatch");
  Point out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] - q[i];
  return out;
}

Rational dot(const std::vector<std::int64_t>& a, const Point& p) {
  if (a.size() != p.size()) throw Error(ErrorCode::invalid_argument, "dimension mismatch");
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) sum += Rational(a[i]) * p[i];
  return sum;
}

namespace {

std::string point_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].to_string();
  return s + ")";
}

}  // namespace

std::optional<Violation> validate(const DifferenceAutomaton& d) {
  const Automaton& a = d.base();
  if (d.dim() == 0) return Violation{"dimension must be positive", {}, {}};
  if (d.points().size() != a.size()) return Violation{"one point per state required", {}, {}};
  if (d.vectors().size() != a.alphabet_size()) return Violation{"one vector per symbol required", {}, {}};
  for (State q = 0; q < a.size(); ++q) {
    if (d.points()[q].size() != d.dim()) return Violation{"point has wrong dimension", q, {}};
  }
  for (Symbol c = 0; c < a.alphabet_size(); ++c) {
    const auto& v = d.vectors()[c];
    if (v.size() != d.dim()) return Violation{"vector has wrong dimension", {}, c};
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); })) {
      return Violation{"vector for symbol '" + a.alphabet()[c] + "' is zero", {}, c};
    }
  }
  std::map<Point, State> seen;
  for (State q = 0; q < a.size(); ++q) {
    auto [it, inserted] = seen.emplace(d.points()[q], q);
    if (!inserted) {
      return Violation{"states " + std::to_string(it->second) + " and " + std::to_string(q) + " share point " +
                           point_string(d.points()[q]),
                       q, {}};
    }
  }
  // A moving transition certifies its vector as a point difference; symbols
  // that never move are exempt from that requirement.
  for (State q = 0; q < a.size(); ++q) {
    for (Symbol c = 0; c < a.alphabet_size(); ++c) {
      const State r = a.next(q, c);
      if (r == q) continue;
      if (d.points()[r] != add(d.points()[q], d.vectors()[c])) {
        return Violation{"delta(" + std::to_string(q) + ", '" + a.alphabet()[c] + "') = " + std::to_string(r) +
                             " is neither the state itself nor its translate",
                         q, c};
      }
    }
  }
  return std::nullopt;
}

CornerCertificate choose_corner(const DifferenceAutomaton& d) {
  if (d.size() == 0) throw Error(ErrorCode::invalid_argument, "empty point set");
  const auto& pts = d.points();
  State best = 0;
  for (State q = 1; q < pts.size(); ++q) {
    if (pts[q] > pts[best]) best = q;
  }
  std::int64_t scale = 1;
  for (const auto& p : pts) {
    for (const auto& x : p) scale = std::lcm(scale, x.den());
  }
  std::int64_t spread = 0;
  for (std::size_t i = 0; i < d.dim(); ++i) {
    Rational lo = pts[0][i];
    Rational hi = pts[0][i];
    for (const auto& p : pts) {
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    const Rational width = (hi - lo) * Rational(scale);
    spread = std::max(spread, width.num());
  }
  const std::int64_t weight = 1 + 2 * spread;
  CornerCertificate cert{best, std::vector<std::int64_t>(d.dim(), 1)};
  for (std::size_t i = d.dim(); i-- > 1;) {
    if (cert.direction[i] > std::numeric_limits<std::int64_t>::max() / weight) {
      throw Error(ErrorCode::overflow, "corner direction overflows 64 bits");
    }
    cert.direction[i - 1] = cert.direction[i] * weight;
  }
  if (!verify_corner_certificate(d, cert)) throw Error(ErrorCode::internal, "lexicographic corner failed certification");
  return cert;
}

bool verify_corner_certificate(const DifferenceAutomaton& d, const CornerCertificate& cert) {
  if (cert.direction.size() != d.dim()) throw Error(ErrorCode::invalid_argument, "certificate dimension mismatch");
  if (cert.corner >= d.size()) throw Error(ErrorCode::invalid_argument, "certificate corner out of range");
  const Rational top = dot(cert.direction, d.point(cert.corner));
  for (State q = 0; q < d.size(); ++q) {
    if (q != cert.corner && !(dot(cert.direction, d.point(q)) < top)) return false;
  }
  return true;
}

UnitaryEmbedding embed_unitary(const Automaton& a) {
  if (!is_unitary(a)) throw Error(ErrorCode::precondition, "automaton is not unitary");
  if (a.size() > 62) throw Error(ErrorCode::overflow, "Sidon embedding supports at most 62 states");
  std::vector<Point> points;
  for (State q = 0; q < a.size(); ++q) points.push_back({Rational(std::int64_t{1} << q)});
  std::vector<Point> vectors;
  std::int64_t identity_count = 0;
  for (Symbol c = 0; c < a.alphabet_size(); ++c) {
    std::optional<State> mover;
    for (State q = 0; q < a.size(); ++q) {
      if (a.next(q, c) != q) mover = q;
    }
    if (mover) {
      vectors.push_back({points[a.next(*mover, c)][0] - points[*mover][0]});
    } else {
      vectors.push_back({Rational(3 * identity_count + 1, 3)});
      ++identity_count;
    }
  }
  auto diff = DifferenceAutomaton::from_geometry(points, vectors, a.alphabet());
  UnitaryEmbedding e{diff.with_base(diff.base().with_start(a.start()).with_accepting(a.accepting())), all_states(a), {}};
  for (Symbol c = 0; c < a.alphabet_size(); ++c) e.symbol_map.push_back(c);
  if (!check_isomorphism(a, e)) throw Error(ErrorCode::internal, "Sidon embedding is not an isomorphism");
  return e;
}

bool check_isomorphism(const Automaton& a, const UnitaryEmbedding& e) {
  const Automaton& b = e.automaton.base();
  if (b.size() != a.size() || b.alphabet_size() != a.alphabet_size()) return false;
  std::set<State> images(e.state_map.begin(), e.state_map.end());
  std::set<Symbol> symbols(e.symbol_map.begin(), e.symbol_map.end());
  if (images.size() != a.size() || symbols.size() != a.alphabet_size()) return false;
  for (State q = 0; q < a.size(); ++q) {
    for (Symbol c = 0; c < a.alphabet_size(); ++c) {
      if (e.state_map[a.next(q, c)] != b.next(e.state_map[q], e.symbol_map[c])) return false;
    }
  }
  return true;
}

BoxConstruction box_construction(const Automaton& a, std::size_t cap) {
  if (!a.start() || !a.has_accepting()) throw Error(ErrorCode::missing_acceptance, "box construction needs start and accepting data");
  if (!is_commutative(a)) throw Error(ErrorCode::precondition, "transition monoid is not commutative");
  const std::uint32_t m = aperiodicity_index(a);
  const std::size_t r = a.alphabet_size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (count > cap / (m + 1)) throw Error(ErrorCode::cap_exceeded, "box has more than " + std::to_string(cap) + " states");
    count *= m + 1;
  }
  std::vector<Point> points;
  points.reserve(count);
  std::vector<std::uint32_t> digits(r, 0);
  std::vector<State> accepting;
  for (std::size_t idx = 0; idx < count; ++idx) {
    Point p;
    State q = *a.start();
    for (std::size_t i = 0; i < r; ++i) {
      p.push_back(Rational(digits[i]));
      for (std::uint32_t j = 0; j < digits[i]; ++j) q = a.next(q, static_cast<Symbol>(i));
    }
    if (a.is_accepting(q)) accepting.push_back(static_cast<State>(idx));
    points.push_back(std::move(p));
    for (std::size_t i = r; i-- > 0;) {
      if (++digits[i] <= m) break;
      digits[i] = 0;
    }
  }
  std::vector<Point> vectors;
  for (std::size_t c = 0; c < r; ++c) {
    Point e(r, Rational(0));
    e[c] = Rational(1);
    vectors.push_back(std::move(e));
  }
  auto box = DifferenceAutomaton::from_geometry(std::move(points), std::move(vectors), a.alphabet());
  return {box.with_base(box.base().with_start(State{0}).with_accepting(std::move(accepting))), m};
}

DifferenceAutomaton minimize_difference(const DifferenceAutomaton& d) {
  if (auto v = validate(d)) throw Error(ErrorCode::precondition, "invalid difference automaton: " + v->message);
  const Automaton& a = d.base();
  if (!a.start() || !a.has_accepting()) throw Error(ErrorCode::missing_acceptance, "minimization needs start and accepting data");
  if (!is_strongly_connected(a)) throw Error(ErrorCode::precondition, "difference minimization needs a strongly connected automaton");

  const auto cls = indistinguishability_classes(a);
  const std::size_t k = class_count(cls);
  std::vector<std::vector<State>> members(k);
  for (State q = 0; q < a.size(); ++q) members[cls[q]].push_back(q);

  std::vector<State> delta(k * a.alphabet_size());
  for (std::uint32_t K = 0; K < k; ++K) {
    for (Symbol c = 0; c < a.alphabet_size(); ++c) {
      std::optional<std::uint32_t> target;
      bool any_cross = false;
      for (State q : members[K]) {
        if (cls[a.next(q, c)] != K) any_cross = true;
      }
      if (!any_cross) {
        delta[K * a.alphabet_size() + c] = K;
        continue;
      }
      for (State q : members[K]) {
        const State r = a.next(q, c);
        if (cls[r] == K || r == q || (target && cls[r] != *target)) {
          throw Error(ErrorCode::precondition, "class of state " + std::to_string(q) + " does not shift as a whole under '" +
                                                   a.alphabet()[c] + "'");
        }
        target = cls[r];
      }
      if (members[*target].size() != members[K].size()) {
        throw Error(ErrorCode::precondition, "class of state " + std::to_string(members[K].front()) +
                                                 " is not a translate of its successor under '" + a.alphabet()[c] + "'");
      }
      delta[K * a.alphabet_size() + c] = *target;
    }
  }

  std::vector<Point> centroids;
  for (const auto& group : members) {
    Point sum(d.dim(), Rational(0));
    for (State q : group) sum = add(sum, d.point(q));
    for (auto& x : sum) x /= Rational(static_cast<std::int64_t>(group.size()));
    centroids.push_back(std::move(sum));
  }
  std::vector<State> accepting;
  for (std::uint32_t K = 0; K < k; ++K) {
    if (a.is_accepting(members[K].front())) accepting.push_back(K);
  }
  Automaton base(k, a.alphabet(), std::move(delta), cls[*a.start()], std::move(accepting));
  DifferenceAutomaton out(std::move(base), d.dim(), std::move(centroids), d.vectors());
  if (auto v = validate(out)) throw Error(ErrorCode::internal, "minimized automaton is invalid: " + v->message);
  return out;
}

MergeWitness largest_preimage(const Automaton& a) {
  MergeWitness best;
  for (Symbol c = 0; c < a.alphabet_size(); ++c) {
    std::vector<std::vector<State>> pre(a.size());
    for (State q = 0; q < a.size(); ++q) pre[a.next(q, c)].push_back(q);
    for (State t = 0; t < a.size(); ++t) {
      if (pre[t].size() > best.preimage.size()) best = {c, t, pre[t]};
    }
  }
  return best;
}

std::optional<MergeWitness> representability_obstruction(const Automaton& a) {
  if (!a.start() || !a.has_accepting() || !is_minimal(a)) throw Error(ErrorCode::precondition, "automaton must be minimal");
  if (!is_strongly_connected(a)) throw Error(ErrorCode::precondition, "automaton must be strongly connected");
  auto w = largest_preimage(a);
  if (w.preimage.size() >= 3) return w;
  return std::nullopt;
}

DegreeDiameterBounds degree_diameter_bounds(std::int64_t n, std::int64_t k) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "n must be positive");
  if (k < 2) throw Error(ErrorCode::invalid_argument, "degree bound needs k >= 2");
  const Rational rn(n);
  const Rational rk1(k + 1);
  DegreeDiameterBounds out;
  out.diameter_bound = Rational(3) * rn / rk1 - Rational(1);
  out.word_bound = (Rational(9) * rn * rn * rn - Rational(9) * rn * rn) / (Rational(2) * rk1 * rk1) +
                   (Rational(3) * rn - Rational(3) * rn * rn) / (Rational(2) * rk1);
  // k + 1 >= 3 sqrt(n/2)  <=>  2 (k+1)^2 >= 9 n, both sides nonnegative.
  out.cerny_flag = n >= 5 && Rational(2) * rk1 * rk1 >= Rational(9) * rn;
  return out;
}

}  // namespace syncword
