#include <algorithm>
#include <stdexcept>

#include "ringlab/error.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab {

std::string_view to_string(InverseSource s) noexcept {
  switch (s) {
    case InverseSource::closed_form: return "closed_form";
    case InverseSource::brute_force: return "brute_force";
    case InverseSource::none: return "none";
  }
  return "none";
}

bool PierceCombineResult::all_units() const noexcept {
  return std::all_of(units.begin(), units.end(), [](const CombinedUnit& u) { return u.inverse.has_value(); });
}

bool PierceCombineResult::closed_forms_verified() const noexcept {
  return std::all_of(units.begin(), units.end(),
                     [](const CombinedUnit& u) { return u.closed_form_verified; });
}

bool PierceCombineResult::cross_terms_vanish() const noexcept {
  return std::all_of(units.begin(), units.end(),
                     [](const CombinedUnit& u) { return u.cross_terms_vanish; });
}

bool PierceCombineResult::n_strongly_clean() const noexcept {
  return n_clean() &&
         std::all_of(units.begin(), units.end(), [](const CombinedUnit& u) { return u.commutes; });
}

bool OrthogonalPierceResult::ok() const noexcept {
  return decomposition.has_value() && failure.empty() &&
         std::all_of(steps.begin(), steps.end(),
                     [](const PierceCombineResult& s) { return s.n_clean(); });
}

PierceParts pierce_components(const Ring& r, Element e, Element x) {
  const Index idem = r.index_of(e);
  if (r.mul(idem, idem) != idem) throw PreconditionError("pierce_components: e is not idempotent");
  const Index ebar = r.sub(r.one(), idem);
  const Index v = r.index_of(x);
  const Index a = r.mul(r.mul(idem, v), idem);
  const Index b = r.mul(r.mul(idem, v), ebar);
  const Index c = r.mul(r.mul(ebar, v), idem);
  const Index d = r.mul(r.mul(ebar, v), ebar);
  if (r.add(r.add(a, b), r.add(c, d)) != v) {
    throw std::logic_error("Pierce components do not sum to x");
  }
  return PierceParts{r.element(a), r.element(b), r.element(c), r.element(d)};
}

namespace {

// Inverse of a unit of a corner ring, expressed in the ambient ring.
Index corner_inverse(const CornerRing& corner, Element local_unit) {
  const auto inv = corner.ring.inverse(corner.ring.index_of(local_unit));
  if (!inv) throw PreconditionError("corner decomposition lists a non-unit");
  return corner.embed(corner.ring.element(*inv)).index;
}

}  // namespace

Element pierce_complement_target(const CornerRing& top, Element x, const Decomposition& d_a) {
  const Ring& r = top.ambient;
  if (d_a.n() == 0) throw PreconditionError("Pierce combination needs n >= 1 units");
  const auto parts = pierce_components(r, r.element(top.idempotent), x);
  const Index u1_inv = corner_inverse(top, d_a.units.front());
  const Index correction = r.mul(r.mul(parts.c.index, u1_inv), parts.b.index);
  return r.element(r.sub(parts.d.index, correction));
}

PierceCombineResult pierce_combine(const CornerRing& top, const CornerRing& bottom, Element x,
                                   const Decomposition& d_a, const Decomposition& d_d) {
  const Ring& r = top.ambient;
  if (!(bottom.ambient == r)) throw RingMismatchError("corners of different rings");
  const Index e = top.idempotent;
  const Index ebar = bottom.idempotent;
  if (r.add(e, ebar) != r.one() || r.mul(e, ebar) != r.zero()) {
    throw PreconditionError("pierce_combine: corners are not complementary");
  }
  if (d_a.n() != d_d.n()) {
    throw PreconditionError("pierce_combine: unit counts differ between corners");
  }
  if (d_a.n() == 0) throw PreconditionError("pierce_combine: need n >= 1 units");

  const auto parts = pierce_components(r, r.element(e), x);
  const Element target = pierce_complement_target(top, x, d_a);
  if (!revalidate(top.ring, d_a, top.restrict(parts.a)).valid()) {
    throw PreconditionError("pierce_combine: d_a does not decompose e x e in eRe");
  }
  if (!revalidate(bottom.ring, d_d, bottom.restrict(target)).valid()) {
    throw PreconditionError("pierce_combine: d_d does not decompose d - c u1^-1 b");
  }

  const Index b = parts.b.index;
  const Index c = parts.c.index;
  const Index f = top.embed(d_a.idempotent).index;
  const Index g = bottom.embed(d_d.idempotent).index;
  const Index e_new = r.add(f, g);
  const std::size_t n = d_a.n();

  PierceCombineResult out;
  std::vector<Index> ps;
  for (std::size_t i = 0; i < n; ++i) {
    const Index u = top.embed(d_a.units[i]).index;
    const Index v = bottom.embed(d_d.units[i]).index;
    const Index u_inv = corner_inverse(top, d_a.units[i]);
    const Index v_inv = corner_inverse(bottom, d_d.units[i]);

    Index p = r.add(u, v);
    Index candidate = r.add(u_inv, v_inv);
    if (i == 0) {
      p = r.add(r.add(p, r.add(b, c)), r.mul(r.mul(c, u_inv), b));
      // Block inverse of [[u, b], [c, v + c u^-1 b]] via the Schur complement v.
      const Index ub = r.mul(u_inv, b);
      const Index cu = r.mul(c, u_inv);
      candidate = r.add(u_inv, r.mul(r.mul(ub, v_inv), cu));
      candidate = r.sub(candidate, r.mul(ub, v_inv));
      candidate = r.sub(candidate, r.mul(v_inv, cu));
      candidate = r.add(candidate, v_inv);
    }
    ps.push_back(p);

    CombinedUnit cu;
    cu.unit = r.element(p);
    cu.cross_terms_vanish = r.mul(u, v_inv) == r.zero() && r.mul(v_inv, u) == r.zero() &&
                            r.mul(v, u_inv) == r.zero() && r.mul(u_inv, v) == r.zero();
    cu.closed_form_verified =
        r.mul(p, candidate) == r.one() && r.mul(candidate, p) == r.one();
    if (cu.closed_form_verified) {
      cu.inverse = r.element(candidate);
      cu.source = InverseSource::closed_form;
    } else if (auto brute = r.inverse(p)) {
      cu.inverse = r.element(*brute);
      cu.source = InverseSource::brute_force;
    }
    cu.commutes = r.mul(e_new, p) == r.mul(p, e_new);
    out.units.push_back(cu);
  }

  out.combined = make_decomposition(r, e_new, ps);
  out.idempotent_ok = r.mul(e_new, e_new) == e_new;
  out.sum_ok = out.combined.value(r) == x;
  return out;
}

OrthogonalPierceResult orthogonal_pierce(const Ring& r, std::span<const Element> idempotents,
                                         Element x, int n, const CornerDecomposer& decomposer) {
  if (idempotents.empty()) throw PreconditionError("orthogonal_pierce: no idempotents");
  if (n < 1) throw PreconditionError("orthogonal_pierce: need n >= 1");
  std::vector<Index> es;
  Index total = r.zero();
  for (const auto& e : idempotents) {
    const Index i = r.index_of(e);
    if (r.mul(i, i) != i) throw PreconditionError("orthogonal_pierce: element is not idempotent");
    es.push_back(i);
    total = r.add(total, i);
  }
  if (total != r.one()) throw PreconditionError("orthogonal_pierce: idempotents do not sum to 1");
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (i != j && r.mul(es[i], es[j]) != r.zero()) {
        throw PreconditionError("orthogonal_pierce: idempotents are not orthogonal");
      }
    }
  }

  const CornerDecomposer decompose =
      decomposer ? decomposer : [](const Ring& ring, Element t, int k) {
        return n_strongly_clean_witness(ring, t, k);
      };

  OrthogonalPierceResult out;
  if (es.size() == 1) {
    const CornerRing whole = corner_ring(r, idempotents.front());
    auto d = decompose(whole.ring, whole.restrict(x), n);
    if (!d) {
      out.failure = "no decomposition in the corner of the last idempotent";
      return out;
    }
    std::vector<Index> units;
    for (const auto& u : d->units) units.push_back(whole.embed(u).index);
    out.decomposition = make_decomposition(r, whole.embed(d->idempotent).index, std::move(units));
    return out;
  }

  const CornerRing top = corner_ring(r, idempotents.front());
  const CornerRing bottom = corner_ring(r, r.element(r.sub(r.one(), es.front())));
  const auto parts = pierce_components(r, idempotents.front(), x);
  auto d_a = decompose(top.ring, top.restrict(parts.a), n);
  if (!d_a) {
    out.failure = "no decomposition of e x e in the first corner";
    return out;
  }
  const Element target = pierce_complement_target(top, x, *d_a);

  std::vector<Element> rest;
  for (std::size_t i = 1; i < es.size(); ++i) rest.push_back(bottom.restrict(r.element(es[i])));
  auto sub = orthogonal_pierce(bottom.ring, rest, bottom.restrict(target), n, decompose);
  out.steps = std::move(sub.steps);
  if (!sub.ok()) {
    out.failure = sub.failure.empty() ? "complementary corner fold failed" : sub.failure;
    return out;
  }
  auto step = pierce_combine(top, bottom, x, *d_a, *sub.decomposition);
  out.decomposition = step.combined;
  if (!step.n_clean()) out.failure = "combined decomposition failed verification";
  out.steps.push_back(std::move(step));
  return out;
}

}  // namespace ringlab
