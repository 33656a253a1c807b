#pragma once

#include <compare>
#include <cstdint>

namespace ringlab {

/// Dense element index inside a ring's universe.
using Index = std::uint32_t;

/// Process-unique identity of a ring descriptor.
using RingId = std::uint64_t;

/// An element of a specific ring: an opaque index tagged with the ring id.
struct Element {
  RingId ring_id = 0;
  Index index = 0;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

}  // namespace ringlab
