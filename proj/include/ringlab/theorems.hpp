#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringlab/classify.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// ---- products and homomorphic images ------------------------------------------

/// Componentwise decomposition in a product ring from one decomposition per
/// factor, all with the same number of units.
Decomposition product_combine(const Ring& product, std::span<const Decomposition> per_factor);

/// Projection of a product decomposition onto each factor.
std::vector<Decomposition> product_split(const Ring& product, const Decomposition& d);

struct PushResult {
  Decomposition image;
  DecompositionCheck check;  // recomputed in the target ring
};

PushResult hom_image_push(const RingHom& projection, const Decomposition& d);

// ---- lifting modulo a nil ideal -----------------------------------------------------

struct IdempotentLift {
  Element idempotent;
  int iterations = 0;
  int bound = 0;  // ceil(log2(nilpotency index of I)) + 1
};

/// Iterates e <- 3e^2 - 2e^3 from e0 until e^2 = e. Requires I to be a nil
/// ideal and e0^2 - e0 in I; the result is congruent to e0 modulo I.
IdempotentLift lift_idempotent_mod_nil(const Ring& r, const ElementSet& ideal, Element e0);

/// { r : pi(r) = 0 }.
ElementSet kernel(const RingHom& hom);

struct DecompositionLift {
  Decomposition lifted;
  DecompositionCheck check;
  IdempotentLift idempotent_lift;
  /// x - e - sum(u_i) before the final-unit correction, which lies in I.
  Element residual;
  bool residual_in_ideal = false;
};

/// Lifts a decomposition of pi(x) in R/I to a decomposition of x in R, for
/// a nil ideal I contained in J(R). The last unit absorbs the residual.
DecompositionLift lift_decomposition_mod_ideal(const QuotientRing& quotient,
                                               const Decomposition& image, Element x);

// ---- square roots of one -----------------------------------------------------------

/// y = s + v_1 + ... + v_n with s^2 = 1, the image of a decomposition
/// x = e + sum(u_i) under e -> 2e - 1, u -> 2u; here y = 2x - 1.
struct SqrtUnitForm {
  Element root;
  std::vector<Element> units;

  friend bool operator==(const SqrtUnitForm&, const SqrtUnitForm&) = default;
};

/// d decomposes x; returns (2e - 1, [2u_i]) summing to 2x - 1.
SqrtUnitForm unit_sqrt_forward(const Ring& r, const Decomposition& d);
/// Inverse direction: e = (s + 1) / 2, u_i = v_i / 2.
Decomposition unit_sqrt_backward(const Ring& r, const SqrtUnitForm& form);

// ---- U_n chains ------------------------------------------------------------------------

struct UChainReport {
  int n = 1;
  bool all_n_strongly_clean = false;  // (a)
  bool two_invertible = false;        // (b)
  bool u_next_is_universe = false;    // (c) U_{n+1}(R) = R
  std::optional<Index> not_n_clean;   // witness against (a)
  std::optional<Index> outside_u_next;

  bool implication_holds() const noexcept {
    return !(all_n_strongly_clean && two_invertible) || u_next_is_universe;
  }
  bool vacuous() const noexcept { return !(all_n_strongly_clean && two_invertible); }
};

UChainReport u_chain_check(const Ring& r, int n);

// ---- Pierce decomposition --------------------------------------------------------------

struct PierceParts {
  Element a;  // e x e
  Element b;  // e x (1 - e)
  Element c;  // (1 - e) x e
  Element d;  // (1 - e) x (1 - e)
};

PierceParts pierce_components(const Ring& r, Element e, Element x);

/// d - c u_1^{-1} b, the element the complementary corner must decompose,
/// where u_1^{-1} is the corner inverse of the first unit of d_a.
Element pierce_complement_target(const CornerRing& top, Element x, const Decomposition& d_a);

enum class InverseSource { closed_form, brute_force, none };
std::string_view to_string(InverseSource s) noexcept;

struct CombinedUnit {
  Element unit;
  std::optional<Element> inverse;
  InverseSource source = InverseSource::none;
  /// The closed-form candidate was tried and multiplied out to one.
  bool closed_form_verified = false;
  /// u_i v_i^{-1} = v_i^{-1} u_i = 0 and v_i u_i^{-1} = u_i^{-1} v_i = 0.
  bool cross_terms_vanish = false;
  bool commutes = false;
};

struct PierceCombineResult {
  Decomposition combined;
  bool idempotent_ok = false;
  bool sum_ok = false;
  std::vector<CombinedUnit> units;

  bool all_units() const noexcept;
  bool closed_forms_verified() const noexcept;
  bool cross_terms_vanish() const noexcept;
  /// Sum, idempotent law and unit-ness: an n-clean decomposition of x.
  bool n_clean() const noexcept { return idempotent_ok && sum_ok && all_units(); }
  /// Additionally every p_i commutes with e'.
  bool n_strongly_clean() const noexcept;
};

/// Combines d_a (decomposing e x e in eRe) and d_d (decomposing
/// d - c u_1^{-1} b in (1-e)R(1-e)) into a decomposition of x:
///   e' = f + g,  p_1 = u_1 + b + c + v_1 + c u_1^{-1} b,  p_i = u_i + v_i.
/// Every claimed identity is checked; commutation of e' with the p_i is
/// measured and reported.
PierceCombineResult pierce_combine(const CornerRing& top, const CornerRing& bottom, Element x,
                                   const Decomposition& d_a, const Decomposition& d_d);

/// Supplies a decomposition of `target` in `corner` with exactly n units.
using CornerDecomposer =
    std::function<std::optional<Decomposition>(const Ring& corner, Element target, int n)>;

struct OrthogonalPierceResult {
  std::optional<Decomposition> decomposition;
  std::vector<PierceCombineResult> steps;
  std::string failure;  // empty on success

  bool ok() const noexcept;
};

/// Folds pierce_combine over orthogonal idempotents e_1..e_k summing to 1:
/// the first corner is combined with the corner of e_2 + ... + e_k, which is
/// handled recursively as a ring in its own right.
OrthogonalPierceResult orthogonal_pierce(const Ring& r, std::span<const Element> idempotents,
                                         Element x, int n,
                                         const CornerDecomposer& decomposer = {});

// ---- truncated power series --------------------------------------------------------

struct SeriesLiftResult {
  Decomposition lifted;
  DecompositionCheck check;
};

/// In S = R[x]/(x^m): f = e + (u_1 + f - r_0) + u_2 + ... + u_n from a
/// decomposition d0 of the constant term r_0 in R.
SeriesLiftResult series_lift(const Ring& series, Element f, const Decomposition& d0);

/// Image of a decomposition under x -> 0.
Decomposition series_constant_part(const Ring& series, const Decomposition& d);

// ---- polynomial rings R[x] -----------------------------------------------------

/// Polynomials over R as coefficient lists, low degree first.
using Poly = std::vector<Index>;

Poly poly_multiply(const Ring& r, const Poly& f, const Poly& g);
void poly_trim(const Ring& r, Poly& f);

/// Searches g with deg g <= D and f g = 1 in R[x] (exact product). The
/// search assigns g_0, g_1, ... in turn and prunes a branch as soon as a
/// coefficient of f g is determined and wrong.
std::optional<Poly> poly_unit_check(const Ring& r, const Poly& f, int degree_bound);

/// Closed-form criterion: constant term a unit, higher coefficients nilpotent.
bool poly_unit_criterion(const Ring& r, const Poly& f);

struct PolyUnitCharacterization {
  int d = 0;
  int degree_bound = 0;
  int ideal_nilpotency = 1;
  std::size_t polynomials = 0;
  std::size_t units_by_search = 0;
  std::size_t units_by_criterion = 0;
  std::vector<Poly> mismatches;

  bool holds() const noexcept { return mismatches.empty(); }
};

/// Compares search and criterion over every f with deg f <= d. D defaults
/// to d * k + d where k is the nilpotency index of the nilradical ideal.
PolyUnitCharacterization poly_unit_characterization(const Ring& r, int d,
                                                    std::optional<int> degree_bound = {});

struct PolySigmaCertificate {
  int n_max = 0;
  int d = 0;
  int degree_bound = 0;

  // (a) structural
  bool nilradical_is_ideal = false;
  bool one_outside_nilradical = false;
  bool structural_ok() const noexcept { return nilradical_is_ideal && one_outside_nilradical; }

  // (b) exhaustive, over units of degree <= d
  std::size_t unit_polynomials = 0;
  std::size_t idempotents = 0;
  bool idempotents_are_constants = false;  // Id(R[x]) = Id(R) checked up to degree d
  bool units_confirmed_by_search = false;
  std::size_t combinations_ruled_out = 0;  // (f, n) pairs with x - f outside the n-fold sumset
  std::optional<std::pair<Index, int>> counterexample;  // (idempotent, n)
  bool exhaustive_ok() const noexcept {
    return units_confirmed_by_search && !counterexample.has_value();
  }

  bool ok() const noexcept { return structural_ok() && exhaustive_ok(); }
};

/// Certifies that the polynomial x in R[x] is not n-strongly clean for any
/// n <= n_max, structurally (1 is not nilpotent) and by exhaustion over units
/// of degree <= d.
PolySigmaCertificate poly_x_not_sigma_witness(const Ring& r, int n_max, int d,
                                              std::optional<int> degree_bound = {});

// ---- semiclean route -----------------------------------------------------------

struct SemicleanRoute {
  SemicleanWitness semiclean;
  Decomposition periodic_part;  // p = e + v
  Decomposition result;         // x = e + v + u
  DecompositionCheck check;
};

/// x = p + u (p periodic, u a unit), then p = e + v, giving x = e + v + u.
SemicleanRoute semiclean_route_two_decomposition(const Ring& r, Element x);

}  // namespace ringlab
