#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Monic polynomial over a base ring, low degree first.
struct MonicPoly {
  std::vector<Index> coefficients;

  /// Reduces integer coefficients through the unital map Z -> base.
  static MonicPoly from_integers(const Ring& base, std::span<const std::int64_t> coeffs);
  /// x^m.
  static MonicPoly monomial(const Ring& base, Index m);
};

/// Z/n. Throws ConstructionError for n < 2.
Ring zmod(std::int64_t n);

/// Componentwise product. Elements are mixed-radix tuples, first factor
/// least significant.
Ring direct_product(std::span<const Ring> factors);

/// Component i of a product element.
Element product_project(const Ring& product, std::size_t i, Element x);
/// Tuple with the given component elements.
Element product_pack(const Ring& product, std::span<const Element> components);

/// R[G] for a commutative base R and a finite abelian group G. Elements are
/// coefficient vectors indexed by group elements (mixed radix over the
/// invariant factors); multiplication is convolution over the group law.
Ring group_ring(const Ring& base, const GroupSpec& group);

/// Sum of coefficients, a ring homomorphism R[G] -> R.
Element augmentation(const Ring& group_ring, Element x);
/// The group element g (as an exponent vector) with coefficient one.
Element group_element(const Ring& group_ring, std::span<const Index> exponents);

/// k x k matrices over R, row-major, entry (0,0) least significant.
Ring matrix_ring(Index k, const Ring& base);

/// Matrix unit E_{ij} (0-based).
Element matrix_unit(const Ring& matrix_ring, Index i, Index j);

/// R[x]/(f) for monic f of degree >= 1 over a commutative base.
Ring poly_quotient(const Ring& base, const MonicPoly& f);

/// R[x]/(x^m), recording m as the truncation order.
Ring truncated_series(const Ring& base, Index m);

/// Constant polynomial r in a poly-quotient ring.
Element poly_constant(const Ring& poly_ring, Element r);
/// Constant coefficient (evaluation at x = 0 for truncated series).
Element poly_constant_term(const Ring& poly_ring, Element f);
/// The class of x.
Element poly_variable(const Ring& poly_ring);

/// A ring homomorphism given by its full index map.
struct RingHom {
  Ring source;
  Ring target;
  std::vector<Index> map;

  Element operator()(Element x) const;
};

struct QuotientRing {
  Ring ring;
  RingHom projection;
};

/// R/I for a verified two-sided ideal I. Cosets are represented by their
/// minimum index. Throws ConstructionError if I is not an ideal.
QuotientRing quotient_ring(const Ring& base, const ElementSet& ideal);

/// Result of checking that a map is a unital ring homomorphism.
struct HomCheck {
  bool exhaustive = false;
  std::uint64_t pairs_checked = 0;
  bool additive = true;
  bool multiplicative = true;
  bool unital = true;
  bool surjective = true;

  bool ok() const noexcept { return additive && multiplicative && unital && surjective; }
};

/// All pairs when |source| <= 256, otherwise `samples` seeded pairs.
HomCheck verify_homomorphism(const RingHom& hom, std::uint64_t samples = 4096,
                             std::uint64_t seed = 0);

/// Corner ring eRe with identity e, materialized over its own dense indices.
struct CornerRing {
  Ring ring;
  Ring ambient;
  Index idempotent = 0;

  Element embed(Element local) const;
  /// Throws PreconditionError when x is not of the form e y e.
  Element restrict(Element ambient_element) const;
  bool contains(Element ambient_element) const;
};

/// Throws PreconditionError when e is not idempotent.
CornerRing corner_ring(const Ring& r, Element e);

}  // namespace ringlab
