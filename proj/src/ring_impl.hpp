#pragma once

#include <cassert>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab::detail {

/// Rings up to this size get dense add/mul tables at construction.
inline constexpr Index kTabulateLimit = 1024;

class RingImpl {
 public:
  RingImpl(RingKind kind, Index size, RingComponents components);
  virtual ~RingImpl() = default;
  RingImpl(const RingImpl&) = delete;
  RingImpl& operator=(const RingImpl&) = delete;

  RingId id() const noexcept { return id_; }
  RingKind kind() const noexcept { return kind_; }
  Index size() const noexcept { return size_; }
  const RingComponents& components() const noexcept { return components_; }

  Index add(Index a, Index b) const {
    assert(a < size_ && b < size_);
    return add_table_.empty() ? do_add(a, b) : add_table_[std::size_t{a} * size_ + b];
  }
  Index mul(Index a, Index b) const {
    assert(a < size_ && b < size_);
    return mul_table_.empty() ? do_mul(a, b) : mul_table_[std::size_t{a} * size_ + b];
  }
  Index neg(Index a) const {
    assert(a < size_);
    return neg_table_.empty() ? do_neg(a) : neg_table_[a];
  }

  virtual Index zero() const { return 0; }
  virtual Index one() const = 0;
  virtual std::string format(Index i) const = 0;
  virtual std::vector<Index> coordinates(Index i) const = 0;
  virtual Index from_coordinates(std::span<const Index> coords) const = 0;
  virtual std::string expression() const = 0;
  /// Commutativity known from structure, if any.
  virtual std::optional<bool> structural_commutative() const { return std::nullopt; }

  /// Fills the dense tables when size <= kTabulateLimit. Called once by the
  /// factory right after construction.
  void tabulate();

  // Lazy caches. Each is built once under its own once_flag and is read-only
  // afterwards.
  bool commutative() const;
  const ElementSet& units() const;
  const ElementSet& idempotents() const;
  const std::vector<std::int64_t>& inverse_table() const;
  const ElementSet& jacobson() const;
  const Nilradical& nilradical() const;

 protected:
  virtual Index do_add(Index a, Index b) const = 0;
  virtual Index do_mul(Index a, Index b) const = 0;
  virtual Index do_neg(Index a) const = 0;

  std::vector<Index> add_table_;
  std::vector<Index> mul_table_;
  std::vector<Index> neg_table_;

 private:
  void build_units() const;

  RingId id_;
  RingKind kind_;
  Index size_;
  RingComponents components_;

  mutable std::once_flag commutative_once_;
  mutable bool commutative_ = false;
  mutable std::once_flag units_once_;
  mutable ElementSet units_;
  mutable std::vector<std::int64_t> inverse_;
  mutable std::once_flag idempotents_once_;
  mutable ElementSet idempotents_;
  mutable std::once_flag jacobson_once_;
  mutable ElementSet jacobson_;
  mutable std::once_flag nilradical_once_;
  mutable std::optional<Nilradical> nilradical_;
};

template <class Impl, class... Args>
Ring make_ring(Args&&... args) {
  auto impl = std::make_shared<Impl>(std::forward<Args>(args)...);
  impl->tabulate();
  return Ring(std::move(impl));
}

/// Multiplies sizes with overflow and cap checks; throws ConstructionError.
Index checked_size(std::uint64_t size, const std::string& what);
Index checked_power(Index base, std::uint64_t exponent, const std::string& what);

}  // namespace ringlab::detail
