#include "syncword/order.hpp"

#include <string>

namespace syncword {

StateOrder StateOrder::from_pairs(std::size_t n, const std::vector<std::pair<State, State>>& pairs,
                                  std::optional<State> universal, std::optional<State> maximal) {
  StateOrder o;
  o.n_ = n;
  o.rel_.assign(n * n, 0);
  for (State q = 0; q < n; ++q) o.rel_[q * n + q] = 1;
  for (auto [p, q] : pairs) {
    if (p >= n || q >= n) {
      throw Error(ErrorCode::invalid_argument,
                  "order pair (" + std::to_string(p) + ", " + std::to_string(q) + ") out of range");
    }
    o.rel_[p * n + q] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!o.rel_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (o.rel_[k * n + j]) o.rel_[i * n + j] = 1;
      }
    }
  }
  for (State p = 0; p < n; ++p) {
    for (State q = p + 1; q < n; ++q) {
      if (o.leq(p, q) && o.leq(q, p)) {
        throw Error(ErrorCode::invalid_argument,
                    "order is not antisymmetric: " + std::to_string(p) + " and " + std::to_string(q));
      }
    }
  }
  for (auto s : {universal, maximal}) {
    if (s && *s >= n) throw Error(ErrorCode::invalid_argument, "designated element out of range");
  }
  o.universal_ = universal;
  o.maximal_ = maximal;
  o.finish();
  return o;
}

StateOrder StateOrder::from_relation(std::size_t n, const std::function<bool(State, State)>& leq,
                                     std::optional<State> universal, std::optional<State> maximal) {
  std::vector<std::pair<State, State>> pairs;
  for (State p = 0; p < n; ++p) {
    for (State q = 0; q < n; ++q) {
      if (p != q && leq(p, q)) pairs.emplace_back(p, q);
    }
  }
  return from_pairs(n, pairs, universal, maximal);
}

StateOrder StateOrder::discrete(std::size_t n) { return from_pairs(n, {}); }

StateOrder StateOrder::total(std::size_t n) {
  std::vector<std::pair<State, State>> pairs;
  for (State q = 0; q + 1 < n; ++q) pairs.emplace_back(q, q + 1);
  return from_pairs(n, pairs, n ? std::optional<State>(0) : std::nullopt,
                    n ? std::optional<State>(static_cast<State>(n - 1)) : std::nullopt);
}

StateOrder StateOrder::star(std::size_t n, State top) {
  std::vector<std::pair<State, State>> pairs;
  for (State q = 0; q < n; ++q) {
    if (q != top) pairs.emplace_back(q, top);
  }
  return from_pairs(n, pairs, top, top);
}

void StateOrder::finish() {
  minimal_.clear();
  minimal_ = minimal_among(all_states_of());
}

std::vector<State> StateOrder::minimal_among(const std::vector<State>& subset) const {
  std::vector<State> out;
  for (State q : subset) {
    bool minimal = true;
    for (State p : subset) {
      if (less(p, q)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(q);
  }
  return out;
}

StateOrder StateOrder::with_designated(std::optional<State> universal, std::optional<State> maximal) const {
  for (auto s : {universal, maximal}) {
    if (s && *s >= n_) throw Error(ErrorCode::invalid_argument, "designated element out of range");
  }
  StateOrder o = *this;
  o.universal_ = universal;
  o.maximal_ = maximal;
  return o;
}

std::optional<State> StateOrder::find_universal() const {
  for (State u = 0; u < n_; ++u) {
    bool all = true;
    for (State q = 0; q < n_ && all; ++q) all = comparable(u, q);
    if (all) return u;
  }
  return std::nullopt;
}

bool StateOrder::is_maximal(State m) const {
  for (State q = 0; q < n_; ++q) {
    if (less(m, q)) return false;
  }
  return true;
}

std::vector<State> StateOrder::maximal_elements() const {
  std::vector<State> out;
  for (State q = 0; q < n_; ++q) {
    if (is_maximal(q)) out.push_back(q);
  }
  return out;
}

std::vector<std::pair<State, State>> StateOrder::strict_pairs() const {
  std::vector<std::pair<State, State>> out;
  for (State p = 0; p < n_; ++p) {
    for (State q = 0; q < n_; ++q) {
      if (less(p, q)) out.emplace_back(p, q);
    }
  }
  return out;
}

std::vector<State> StateOrder::all_states_of() const {
  std::vector<State> s(n_);
  for (State q = 0; q < n_; ++q) s[q] = q;
  return s;
}

}  // namespace syncword
