#pragma once

// Interning table for state subsets stored as fixed-width bitmasks. Shared by
// the oracle and the subset monitor construction.

#include <bit>
#include <cstdint>
#include <vector>

#include "syncword/core.hpp"

namespace syncword::detail {

class SubsetTable {
 public:
  explicit SubsetTable(std::size_t states) : words_((states + 63) / 64), index_(1024, kEmpty) {}

  std::size_t words() const noexcept { return words_; }
  std::size_t size() const noexcept { return count_; }
  const std::uint64_t* get(std::uint32_t id) const noexcept { return pool_.data() + std::size_t{id} * words_; }

  // Returns {id, inserted}.
  std::pair<std::uint32_t, bool> insert(const std::uint64_t* bits) {
    if ((count_ + 1) * 2 > index_.size()) grow();
    std::size_t slot = hash(bits) & (index_.size() - 1);
    while (index_[slot] != kEmpty) {
      if (equal(get(index_[slot]), bits)) return {index_[slot], false};
      slot = (slot + 1) & (index_.size() - 1);
    }
    const auto id = static_cast<std::uint32_t>(count_++);
    pool_.insert(pool_.end(), bits, bits + words_);
    index_[slot] = id;
    return {id, true};
  }

  static std::size_t popcount(const std::uint64_t* bits, std::size_t words) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words; ++i) c += static_cast<std::size_t>(std::popcount(bits[i]));
    return c;
  }

  static State first_state(const std::uint64_t* bits, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) {
      if (bits[i]) return static_cast<State>(i * 64 + std::countr_zero(bits[i]));
    }
    return 0;
  }

  // Writes the image of `bits` under symbol c into `out` (words() entries).
  static void image(const Automaton& a, const std::uint64_t* bits, Symbol c, std::uint64_t* out, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) out[i] = 0;
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t w = bits[i];
      while (w) {
        const auto q = static_cast<State>(i * 64 + std::countr_zero(w));
        w &= w - 1;
        const State r = a.next(q, c);
        out[r / 64] |= std::uint64_t{1} << (r % 64);
      }
    }
  }

  static std::vector<std::uint64_t> full(std::size_t states) {
    std::vector<std::uint64_t> bits((states + 63) / 64, 0);
    for (std::size_t q = 0; q < states; ++q) bits[q / 64] |= std::uint64_t{1} << (q % 64);
    return bits;
  }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  std::size_t hash(const std::uint64_t* bits) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::size_t i = 0; i < words_; ++i) {
      h ^= bits[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }

  bool equal(const std::uint64_t* x, const std::uint64_t* y) const noexcept {
    for (std::size_t i = 0; i < words_; ++i) {
      if (x[i] != y[i]) return false;
    }
    return true;
  }

  void grow() {
    std::vector<std::uint32_t> bigger(index_.size() * 2, kEmpty);
    for (std::uint32_t id = 0; id < count_; ++id) {
      std::size_t slot = hash(get(id)) & (bigger.size() - 1);
      while (bigger[slot] != kEmpty) slot = (slot + 1) & (bigger.size() - 1);
      bigger[slot] = id;
    }
    index_.swap(bigger);
  }

  std::size_t words_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> pool_;
  std::vector<std::uint32_t> index_;
};

}  // namespace syncword::detail
