#include "ringlab/element_set.hpp"

#include <stdexcept>

#include "ringlab/error.hpp"

namespace ringlab {

ElementSet::ElementSet(RingId ring, Index universe)
    : ring_(ring), universe_(universe), words_((std::size_t{universe} + 63) / 64, 0) {}

ElementSet ElementSet::full(RingId ring, Index universe) {
  ElementSet s(ring, universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (const auto tail = universe % 64; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

void ElementSet::insert(Index i) {
  if (i >= universe_) throw std::out_of_range("ElementSet::insert: index outside universe");
  words_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void ElementSet::erase(Index i) {
  if (i >= universe_) return;
  words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

void ElementSet::clear() noexcept {
  for (auto& w : words_) w = 0;
}

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::optional<Index> ElementSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<Index>(w * 64 + std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<Index> ElementSet::to_vector() const {
  std::vector<Index> out;
  out.reserve(count());
  for_each([&](Index i) { out.push_back(i); });
  return out;
}

void ElementSet::require_same(const ElementSet& other) const {
  if (ring_ != other.ring_ || universe_ != other.universe_) {
    throw RingMismatchError("element sets belong to different rings");
  }
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  require_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  require_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  require_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  require_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

}  // namespace ringlab
