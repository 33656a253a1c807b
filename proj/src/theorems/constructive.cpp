#include <bit>
#include <stdexcept>

#include "ringlab/error.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab {

namespace {

void require_valid(const Ring& r, const Decomposition& d, std::optional<Element> x,
                   const char* what) {
  if (!revalidate(r, d, x).valid()) {
    throw PreconditionError(std::string(what) + ": input decomposition is not valid");
  }
}

std::vector<Index> indices_of(const Ring& r, const std::vector<Element>& xs) {
  std::vector<Index> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(r.index_of(x));
  return out;
}

}  // namespace

// ---- products -----------------------------------------------------------------

Decomposition product_combine(const Ring& product, std::span<const Decomposition> per_factor) {
  if (product.kind() != RingKind::product) {
    throw PreconditionError("product_combine: ring is not a direct product");
  }
  const auto& factors = std::get<ProductParams>(product.components().params).factors;
  if (per_factor.size() != factors.size()) {
    throw PreconditionError("product_combine: one decomposition per factor required");
  }
  const std::size_t n = per_factor.front().n();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (per_factor[i].n() != n) {
      throw PreconditionError("product_combine: unit counts differ across factors");
    }
    require_valid(factors[i], per_factor[i], std::nullopt, "product_combine");
  }
  std::vector<Element> parts(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) parts[i] = per_factor[i].idempotent;
  const Index e = product.index_of(product_pack(product, parts));
  std::vector<Index> units;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < factors.size(); ++i) parts[i] = per_factor[i].units[j];
    units.push_back(product.index_of(product_pack(product, parts)));
  }
  return make_decomposition(product, e, std::move(units));
}

std::vector<Decomposition> product_split(const Ring& product, const Decomposition& d) {
  if (product.kind() != RingKind::product) {
    throw PreconditionError("product_split: ring is not a direct product");
  }
  const auto& factors = std::get<ProductParams>(product.components().params).factors;
  std::vector<Decomposition> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<Index> units;
    for (const auto& u : d.units) units.push_back(product_project(product, i, u).index);
    out.push_back(make_decomposition(
        factors[i], product_project(product, i, d.idempotent).index, std::move(units)));
  }
  return out;
}

PushResult hom_image_push(const RingHom& projection, const Decomposition& d) {
  require_valid(projection.source, d, std::nullopt, "hom_image_push");
  std::vector<Index> units;
  for (const auto& u : d.units) units.push_back(projection(u).index);
  Decomposition image =
      make_decomposition(projection.target, projection(d.idempotent).index, std::move(units));
  const Element target_value = projection(d.value(projection.source));
  return PushResult{image, revalidate(projection.target, image, target_value)};
}

// ---- lifting ----------------------------------------------------------------------

ElementSet kernel(const RingHom& hom) {
  ElementSet k = hom.source.empty_set();
  for (Index r = 0; r < hom.source.size(); ++r) {
    if (hom.map[r] == hom.target.zero()) k.insert(r);
  }
  return k;
}

IdempotentLift lift_idempotent_mod_nil(const Ring& r, const ElementSet& ideal, Element e0) {
  if (ideal.ring_id() != r.id()) throw RingMismatchError("ideal belongs to a different ring");
  int nil_index = 1;
  bool nil = true;
  ideal.for_each([&](Index i) {
    if (auto k = nilpotency_index(r, i)) {
      nil_index = std::max(nil_index, *k);
    } else {
      nil = false;
    }
  });
  if (!nil) throw PreconditionError("lift_idempotent_mod_nil: ideal is not nil");
  Index e = r.index_of(e0);
  if (!ideal.contains(r.sub(r.mul(e, e), e))) {
    throw PreconditionError("lift_idempotent_mod_nil: e0^2 - e0 is not in the ideal");
  }
  // Each step squares the defect e^2 - e (up to a unit factor).
  const int bound = std::bit_width(static_cast<unsigned>(nil_index - 1)) + 1;
  IdempotentLift lift{e0, 0, bound};
  const Index three = r.from_integer(3);
  const Index two = r.from_integer(2);
  while (r.mul(e, e) != e) {
    if (lift.iterations >= bound) {
      throw PreconditionError("lift_idempotent_mod_nil: no convergence within the bound");
    }
    const Index sq = r.mul(e, e);
    e = r.sub(r.mul(three, sq), r.mul(two, r.mul(sq, e)));
    ++lift.iterations;
  }
  lift.idempotent = r.element(e);
  return lift;
}

DecompositionLift lift_decomposition_mod_ideal(const QuotientRing& quotient,
                                               const Decomposition& image, Element x) {
  const Ring& r = quotient.projection.source;
  const Ring& q = quotient.ring;
  const ElementSet ideal = kernel(quotient.projection);
  if (image.n() == 0) throw PreconditionError("lift_decomposition_mod_ideal: need n >= 1 units");
  if (!ideal.is_subset_of(r.jacobson())) {
    throw PreconditionError("lift_decomposition_mod_ideal: ideal is not contained in J(R)");
  }
  if (quotient.projection(x) != image.value(q)) {
    throw PreconditionError("lift_decomposition_mod_ideal: decomposition does not sum to pi(x)");
  }
  require_valid(q, image, std::nullopt, "lift_decomposition_mod_ideal");

  auto representative = [&](Element y) { return q.coordinates(q.index_of(y))[0]; };

  DecompositionLift out;
  out.idempotent_lift = lift_idempotent_mod_nil(r, ideal, r.element(representative(image.idempotent)));
  const Index e = out.idempotent_lift.idempotent.index;

  std::vector<Index> units;
  Index sum = e;
  for (const auto& u : image.units) {
    const Index lifted = representative(u);
    // u v = 1 + t with t in I inside J(R), so any preimage is a unit.
    if (!r.units().contains(lifted)) {
      throw std::logic_error("preimage of a unit modulo a radical ideal is not a unit");
    }
    units.push_back(lifted);
    sum = r.add(sum, lifted);
  }
  const Index residual = r.sub(r.index_of(x), sum);
  out.residual = r.element(residual);
  out.residual_in_ideal = ideal.contains(residual);
  units.back() = r.add(units.back(), residual);
  out.lifted = make_decomposition(r, e, std::move(units));
  out.check = revalidate(r, out.lifted, x);
  return out;
}

// ---- square roots of one ------------------------------------------------------

namespace {

Index half_of_one(const Ring& r) {
  const auto h = r.inverse(r.from_integer(2));
  if (!h) throw PreconditionError("2 is not invertible in this ring");
  return *h;
}

}  // namespace

SqrtUnitForm unit_sqrt_forward(const Ring& r, const Decomposition& d) {
  half_of_one(r);
  require_valid(r, d, std::nullopt, "unit_sqrt_forward");
  const Index two = r.from_integer(2);
  const Index e = r.index_of(d.idempotent);
  SqrtUnitForm form{r.element(r.sub(r.mul(two, e), r.one())), {}};
  if (r.mul(form.root.index, form.root.index) != r.one()) {
    throw std::logic_error("(2e - 1)^2 != 1 for an idempotent e");
  }
  for (Index u : indices_of(r, d.units)) {
    const Index v = r.mul(two, u);
    if (!r.units().contains(v)) throw std::logic_error("2u is not a unit although 2 and u are");
    form.units.push_back(r.element(v));
  }
  return form;
}

Decomposition unit_sqrt_backward(const Ring& r, const SqrtUnitForm& form) {
  const Index half = half_of_one(r);
  const Index s = r.index_of(form.root);
  if (r.mul(s, s) != r.one()) throw PreconditionError("unit_sqrt_backward: s^2 != 1");
  const Index e = r.mul(r.add(s, r.one()), half);
  if (r.mul(e, e) != e) throw std::logic_error("(s + 1) / 2 is not idempotent");
  std::vector<Index> units;
  for (Index v : indices_of(r, form.units)) {
    if (!r.units().contains(v)) throw PreconditionError("unit_sqrt_backward: v_i is not a unit");
    units.push_back(r.mul(v, half));
  }
  return make_decomposition(r, e, std::move(units));
}

// ---- U_n chains ------------------------------------------------------------------

UChainReport u_chain_check(const Ring& r, int n) {
  if (n < 1) throw PreconditionError("u_chain_check requires n >= 1");
  UChainReport rep;
  rep.n = n;
  StronglyCleanSolver solver(r);
  rep.all_n_strongly_clean = true;
  for (Index x = 0; x < r.size(); ++x) {
    if (!solver.witness(r.element(x), n)) {
      rep.all_n_strongly_clean = false;
      rep.not_n_clean = x;
      break;
    }
  }
  rep.two_invertible = r.units().contains(r.from_integer(2));
  const ElementSet u_next = u_n_set(r, n + 1);
  rep.u_next_is_universe = u_next.is_full();
  if (!rep.u_next_is_universe) rep.outside_u_next = (r.full_set() - u_next).first();
  return rep;
}

// ---- truncated power series -------------------------------------------------------

SeriesLiftResult series_lift(const Ring& series, Element f, const Decomposition& d0) {
  if (series.kind() != RingKind::poly_quotient) {
    throw PreconditionError("series_lift: ring is not a truncated series");
  }
  const auto& params = std::get<PolyQuotientParams>(series.components().params);
  const Ring& base = params.base.front();
  const Element r0 = poly_constant_term(series, f);
  if (d0.n() == 0) throw PreconditionError("series_lift: need n >= 1 units");
  require_valid(base, d0, r0, "series_lift");

  auto embed = [&](Element y) { return poly_constant(series, y).index; };
  const Index tail = series.sub(series.index_of(f), embed(r0));
  std::vector<Index> units;
  for (const auto& u : d0.units) units.push_back(embed(u));
  units.front() = series.add(units.front(), tail);
  SeriesLiftResult out;
  out.lifted = make_decomposition(series, embed(d0.idempotent), std::move(units));
  out.check = revalidate(series, out.lifted, f);
  return out;
}

Decomposition series_constant_part(const Ring& series, const Decomposition& d) {
  const Ring& base = std::get<PolyQuotientParams>(series.components().params).base.front();
  std::vector<Index> units;
  for (const auto& u : d.units) units.push_back(poly_constant_term(series, u).index);
  return make_decomposition(base, poly_constant_term(series, d.idempotent).index,
                            std::move(units));
}

// ---- semiclean route --------------------------------------------------------------

SemicleanRoute semiclean_route_two_decomposition(const Ring& r, Element x) {
  if (!r.commutative()) {
    throw PreconditionError("semiclean route requires a commutative ring");
  }
  auto semi = semiclean_witness(r, x);
  if (!semi) throw PreconditionError("no semiclean witness");
  auto clean = clean_witness(r, semi->periodic.base);
  if (!clean) throw PreconditionError("periodic part has no clean decomposition");
  SemicleanRoute route{*semi, *clean, {}, {}};
  route.result = make_decomposition(r, clean->idempotent.index,
                                    {clean->units.front().index, semi->unit.index});
  route.check = revalidate(r, route.result, x);
  return route;
}

}  // namespace ringlab
