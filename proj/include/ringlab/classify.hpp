#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// An idempotent plus an ordered list of units: x = e + u_1 + ... + u_n.
struct Decomposition {
  Element idempotent;
  std::vector<Element> units;
  /// commutes[i] holds e u_i == u_i e.
  std::vector<bool> commutes;

  std::size_t n() const noexcept { return units.size(); }
  bool strongly() const noexcept;
  Element value(const Ring& r) const;
  /// Same decomposition with units sorted by index.
  Decomposition canonical() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Builds a decomposition and computes its commutation flags.
Decomposition make_decomposition(const Ring& r, Index e, std::vector<Index> units);

struct DecompositionCheck {
  bool idempotent_ok = false;
  bool units_ok = false;   // every unit has a two-sided inverse
  bool flags_ok = false;   // stored flags match recomputed commutation
  bool sum_ok = true;      // value == x when x was supplied
  bool strongly = false;   // all units commute with the idempotent

  bool valid() const noexcept { return idempotent_ok && units_ok && flags_ok && sum_ok; }
  bool strongly_valid() const noexcept { return valid() && strongly; }
};

/// Recomputes every invariant from scratch.
DecompositionCheck revalidate(const Ring& r, const Decomposition& d,
                              std::optional<Element> x = std::nullopt);

struct PeriodicityWitness {
  Element base;
  int n = 1;
  int m = 2;
};

ElementSet idempotents(const Ring& r);
ElementSet units(const Ring& r);
/// Commutative rings only; UnsupportedError otherwise.
Nilradical nilpotents(const Ring& r);
ElementSet jacobson_radical(const Ring& r);

/// Lexicographically minimal (n, m), m > n >= 1, with x^m = x^n.
PeriodicityWitness periodicity(const Ring& r, Element x);

/// Smallest-index idempotent e with x - e a unit; commutation not required.
std::optional<Decomposition> clean_witness(const Ring& r, Element x);

/// Decides n-strong cleanness element by element with canonical witnesses.
///
/// For each idempotent e commuting with x, the exact k-fold sumsets of
/// U(R) intersected with the centralizer of e are built lazily and reused
/// across queries. Not thread-safe; use one solver per thread.
class StronglyCleanSolver {
 public:
  explicit StronglyCleanSolver(Ring ring);

  const Ring& ring() const noexcept { return ring_; }

  /// Canonical witness with exactly n units: smallest idempotent index, then
  /// lexicographically smallest sorted unit list.
  std::optional<Decomposition> witness(Element x, int n);

  /// Least n <= n_max with an exact-n witness. PreconditionError if n_max < 1.
  std::optional<int> index(Element x, int n_max);

 private:
  struct Slot {
    Index idempotent = 0;
    std::vector<Index> gens;  // sorted units commuting with the idempotent
    ElementSet gen_set;
    std::vector<ElementSet> levels;  // exact k-fold sums, k = 1..levels.size()
  };

  Slot& slot(Index e);
  const ElementSet& level(Slot& s, int k);
  bool reconstruct(Slot& s, int k, std::size_t lo, Index target, std::vector<Index>& out,
                   std::unordered_set<std::uint64_t>& dead);

  Ring ring_;
  std::map<Index, Slot> slots_;
};

std::optional<Decomposition> n_strongly_clean_witness(const Ring& r, Element x, int n);
std::optional<int> strongly_clean_index(const Ring& r, Element x, int n_max);

/// Elements that are a sum of at most n units.
ElementSet u_n_set(const Ring& r, int n);

/// Least number of units of Z (+1, -1) that, together with an idempotent of
/// Z (0 or 1), sum to k.
int integer_strongly_clean_index(std::int64_t k);

/// Idempotent of Z achieving the index for k, and the signed unit count
/// (number of +1 minus number of -1 is k - e).
struct IntegerWitness {
  int idempotent = 0;
  int plus_ones = 0;
  int minus_ones = 0;
};
IntegerWitness integer_strongly_clean_witness(std::int64_t k);

struct SemicleanWitness {
  PeriodicityWitness periodic;
  Element unit;
};

/// x = p + u with p periodic and u a unit; canonical p is the smallest index.
std::optional<SemicleanWitness> semiclean_witness(const Ring& r, Element x);

/// Per-element classification record.
struct ElementRecord {
  Index element = 0;
  bool idempotent = false;
  bool unit = false;
  std::optional<Decomposition> clean;
  std::optional<int> index;
  /// Canonical witness for every n <= n_max at which one exists.
  std::vector<std::pair<int, Decomposition>> witnesses;
};

struct ClassifyReport {
  RingId ring_id = 0;
  int n_max = 4;
  std::vector<ElementRecord> records;
  /// index value -> element count; key 0 counts "none up to n_max".
  std::map<int, std::size_t> index_histogram;
  std::size_t clean_count = 0;
};

/// Classifies every element (or only `only` when given).
ClassifyReport classify_ring(const Ring& r, int n_max, std::optional<Index> only = std::nullopt);

}  // namespace ringlab
