#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "ringlab/types.hpp"

namespace ringlab {

/// Bitset over the dense index universe of one ring.
///
/// Houses Id(R), U(R), U_n(R), the nilradical and J(R). Binary operations
/// require both operands to come from the same ring and throw
/// RingMismatchError otherwise.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(RingId ring, Index universe);

  static ElementSet full(RingId ring, Index universe);

  RingId ring_id() const noexcept { return ring_; }
  Index universe() const noexcept { return universe_; }

  bool contains(Index i) const noexcept {
    return i < universe_ && ((words_[i >> 6] >> (i & 63)) & 1u) != 0;
  }
  void insert(Index i);
  void erase(Index i);
  void clear() noexcept;

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return count() == universe_; }

  /// Smallest member, if any.
  std::optional<Index> first() const noexcept;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Index>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  /// Members in increasing index order.
  std::vector<Index> to_vector() const;

  bool is_subset_of(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;

 private:
  void require_same(const ElementSet& other) const;

  RingId ring_ = 0;
  Index universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ringlab
