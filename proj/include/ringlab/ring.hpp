#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/types.hpp"

namespace ringlab {

enum class RingKind { zmod, product, group_ring, matrix, poly_quotient, quotient, corner, table };

std::string_view to_string(RingKind kind) noexcept;

/// Upper bound on the number of elements any constructor may produce.
/// Defaults to 2^24; the RINGLAB_SIZE_CAP environment variable overrides the
/// default, and set_size_cap() overrides both.
std::uint64_t size_cap() noexcept;
void set_size_cap(std::uint64_t cap);

/// Nilradical of a commutative ring together with the largest nilpotency
/// index of its members (least k with x^k = 0, maximized over x).
struct Nilradical {
  ElementSet members;
  int index = 1;
};

namespace detail {
class RingImpl;
}

struct RingComponents;

/// Handle to an immutable finite ring with unity.
///
/// Copies share the same descriptor (and therefore the same id and lazily
/// built caches). Arithmetic on raw indices is unchecked beyond a debug
/// assertion; the Element overloads check ring identity and range.
class Ring {
 public:
  explicit Ring(std::shared_ptr<const detail::RingImpl> impl);

  RingId id() const noexcept;
  RingKind kind() const noexcept;
  Index size() const noexcept;
  bool commutative() const;

  Index zero() const noexcept;
  Index one() const noexcept;

  Index add(Index a, Index b) const;
  Index sub(Index a, Index b) const;
  Index mul(Index a, Index b) const;
  Index neg(Index a) const;
  Index pow(Index a, std::uint64_t k) const;
  /// Image of k under the unital map Z -> R.
  Index from_integer(std::int64_t k) const;

  /// Range-checked Element for index i.
  Element element(Index i) const;
  /// Throws RingMismatchError unless x belongs to this ring.
  Index index_of(Element x) const;

  /// Human-readable structural form of an element ("1 + a^2", "[[1,0],[0,1]]").
  std::string format(Index i) const;
  /// Kind-specific coordinates: factor indices, coefficients, matrix entries,
  /// coset representative, or ambient index for corners.
  std::vector<Index> coordinates(Index i) const;
  Index from_coordinates(std::span<const Index> coords) const;

  /// Canonical ring-expression text for this descriptor.
  std::string expression() const;
  const RingComponents& components() const noexcept;

  const ElementSet& units() const;
  const ElementSet& idempotents() const;
  /// Two-sided inverse; smallest index when several candidates exist.
  std::optional<Index> inverse(Index u) const;
  const ElementSet& jacobson() const;
  /// Throws UnsupportedError for noncommutative rings.
  const Nilradical& nilradical() const;

  ElementSet empty_set() const;
  ElementSet full_set() const;

  const detail::RingImpl& impl() const noexcept { return *impl_; }

  friend bool operator==(const Ring& a, const Ring& b) noexcept { return a.id() == b.id(); }

 private:
  std::shared_ptr<const detail::RingImpl> impl_;
};

/// Finite abelian group C(n1) x ... x C(nk) given by invariant factors.
struct GroupSpec {
  std::vector<Index> factors;

  Index order() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct ZmodParams {
  Index modulus = 0;
};
struct ProductParams {
  std::vector<Ring> factors;
};
struct GroupRingParams {
  std::vector<Ring> base;  // exactly one
  GroupSpec group;
};
struct MatrixParams {
  std::vector<Ring> base;  // exactly one
  Index dim = 0;
};
struct PolyQuotientParams {
  std::vector<Ring> base;  // exactly one
  /// Monic modulus, low degree first; the last entry is base.one().
  std::vector<Index> modulus;
  /// Set when the ring was built as a truncated power series R[x]/(x^m).
  std::optional<Index> series_order;
  Index degree() const { return static_cast<Index>(modulus.size() - 1); }
};
struct QuotientParams {
  std::vector<Ring> base;  // exactly one
  std::vector<Index> representatives;  // quotient index -> minimum base index of the coset
  std::vector<Index> coset_of;         // base index -> quotient index
  Index ideal_size = 0;
};
struct CornerParams {
  std::vector<Ring> base;  // exactly one
  Index idempotent = 0;
  std::vector<Index> members;  // corner index -> ambient index (sorted)
};
struct TableParams {};

struct RingComponents {
  std::variant<ZmodParams, ProductParams, GroupRingParams, MatrixParams, PolyQuotientParams,
               QuotientParams, CornerParams, TableParams>
      params;
};

// ---- ring-core operations -------------------------------------------------

enum class ArithOp { add, mul, neg };

/// Checked arithmetic on Elements. `y` must be present for add/mul and
/// absent for neg.
Element elem_arith(const Ring& r, ArithOp op, Element x, std::optional<Element> y = std::nullopt);

struct AxiomViolation {
  std::string law;
  Index x = 0;
  Index y = 0;
  Index z = 0;
};

struct AxiomReport {
  bool exhaustive = false;
  std::uint64_t triples_checked = 0;
  bool commutative = false;
  bool commutativity_exhaustive = false;
  std::uint64_t violation_count = 0;
  std::vector<AxiomViolation> violations;  // first few, with witnessing triples

  bool ok() const noexcept { return violation_count == 0; }
};

struct AxiomOptions {
  std::uint64_t budget = 100000;  // sampled triples when not exhaustive
  std::uint64_t seed = 0;
  std::uint64_t exhaustive_cap = std::uint64_t{1} << 27;  // max triples / pairs scanned
};

/// Checks the ring axioms on every triple when size^3 <= cap, otherwise on
/// `budget` seeded random triples. Violations are report content.
AxiomReport verify_axioms(const Ring& r, const AxiomOptions& options = {});

std::optional<Element> inverse(const Ring& r, Element u);

/// { y : y e = e y }.
ElementSet centralizer(const Ring& r, Element e);

/// { a + b : a in A, b in B }.
ElementSet sumset(const Ring& r, const ElementSet& a, const ElementSet& b);

/// Exact k-fold sumsets of `gens` for k = 1..n (index k-1 holds level k).
std::vector<ElementSet> sum_levels(const Ring& r, const ElementSet& gens, int n);

/// Smallest two-sided ideal containing `gens`.
ElementSet ideal_closure(const Ring& r, std::span<const Element> gens);

/// True when `s` is closed under addition, negation and two-sided
/// multiplication by every ring element, and contains zero.
bool is_two_sided_ideal(const Ring& r, const ElementSet& s);

/// Least k such that every k-fold product of members of `ideal` is zero,
/// or nullopt when the ideal is not nilpotent.
std::optional<int> ideal_nilpotency_index(const Ring& r, const ElementSet& ideal);

/// Least k >= 1 with x^k = 0, or nullopt.
std::optional<int> nilpotency_index(const Ring& r, Index x);

/// Test fixture constructor: a "ring" given by raw tables (row-major,
/// size*size entries). No axiom is checked; use verify_axioms.
Ring make_table_ring(Index size, std::vector<Index> add_table, std::vector<Index> mul_table,
                     Index one);

}  // namespace ringlab
