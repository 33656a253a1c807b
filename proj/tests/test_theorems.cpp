#include <gtest/gtest.h>

#include <random>

#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"
#include "ringlab/theorems.hpp"

using namespace ringlab;

namespace {

std::vector<Index> idx(const std::vector<Element>& xs) {
  std::vector<Index> out;
  for (const auto& x : xs) out.push_back(x.index);
  return out;
}

ElementSet set_of(const Ring& r, std::initializer_list<Index> xs) {
  ElementSet s = r.empty_set();
  for (Index x : xs) s.insert(x);
  return s;
}

}  // namespace

// ---- products and images -----------------------------------------------------

TEST(ProductCombine, Example) {
  const std::vector<Ring> f{zmod(4), zmod(9)};
  const Ring p = direct_product(f);
  const std::vector<Decomposition> per{make_decomposition(f[0], 1, {1}),
                                       make_decomposition(f[1], 0, {4})};
  const auto d = product_combine(p, per);
  EXPECT_EQ(d.idempotent.index, 1u);
  EXPECT_EQ(idx(d.units), std::vector<Index>{1 + 4 * 4});
  EXPECT_TRUE(revalidate(p, d, p.element(2 + 4 * 4)).strongly_valid());

  const auto back = product_split(p, d);
  EXPECT_EQ(back[0], per[0]);
  EXPECT_EQ(back[1], per[1]);
}

TEST(ProductCombine, TwoAsOnePlusOne) {
  const std::vector<Ring> f{zmod(3), zmod(5)};
  const Ring p = direct_product(f);
  const std::vector<Decomposition> per{make_decomposition(f[0], 1, {1}),
                                       make_decomposition(f[1], 1, {1})};
  const auto d = product_combine(p, per);
  EXPECT_EQ(d.value(p).index, p.from_integer(2));
  const std::vector<Decomposition> mismatched{make_decomposition(f[0], 1, {1}),
                                              make_decomposition(f[1], 0, {1, 1})};
  EXPECT_THROW(product_combine(p, mismatched), PreconditionError);
}

TEST(HomImagePush, Examples) {
  const Ring z6 = zmod(6);
  const auto q = quotient_ring(z6, set_of(z6, {0, 3}));
  auto push = hom_image_push(q.projection, make_decomposition(z6, 0, {5}));
  EXPECT_EQ(push.image.idempotent.index, 0u);
  EXPECT_EQ(idx(push.image.units), std::vector<Index>{2});
  EXPECT_TRUE(push.check.valid());

  const Ring z8 = zmod(8);
  const auto q8 = quotient_ring(z8, set_of(z8, {0, 4}));
  push = hom_image_push(q8.projection, make_decomposition(z8, 1, {5}));
  EXPECT_EQ(push.image.idempotent.index, 1u);
  EXPECT_EQ(idx(push.image.units), std::vector<Index>{1});
  EXPECT_EQ(push.image.value(q8.ring).index, 2u);

  const auto id = quotient_ring(z8, set_of(z8, {0}));
  const auto d = make_decomposition(z8, 1, {5});
  const auto same = hom_image_push(id.projection, d).image;
  EXPECT_EQ(same.idempotent.index, d.idempotent.index);
  EXPECT_EQ(idx(same.units), idx(d.units));
}

// ---- lifting ---------------------------------------------------------------------

TEST(LiftIdempotent, Examples) {
  const Ring z8 = zmod(8);
  const auto lift = lift_idempotent_mod_nil(z8, set_of(z8, {0, 4}), z8.element(4));
  EXPECT_EQ(lift.idempotent.index, 0u);
  EXPECT_LE(lift.iterations, lift.bound);

  const auto fixed = lift_idempotent_mod_nil(z8, set_of(z8, {0, 4}), z8.element(1));
  EXPECT_EQ(fixed.iterations, 0);
  EXPECT_EQ(fixed.idempotent.index, 1u);

  const Ring r = truncated_series(zmod(2), 4);
  const std::vector<Element> x2{r.element(4)};
  const ElementSet i = ideal_closure(r, x2);
  const auto p = lift_idempotent_mod_nil(r, i, r.element(1 + 4));  // 1 + x^2
  EXPECT_EQ(p.idempotent.index, 1u);
  EXPECT_LE(p.iterations, p.bound);

  EXPECT_THROW(lift_idempotent_mod_nil(z8, set_of(z8, {0, 4}), z8.element(2)), PreconditionError);
  const Ring z6 = zmod(6);
  EXPECT_THROW(lift_idempotent_mod_nil(z6, set_of(z6, {0, 3}), z6.element(0)), PreconditionError);
}

TEST(LiftDecomposition, Examples) {
  const Ring z8 = zmod(8);
  const auto q = quotient_ring(z8, set_of(z8, {0, 4}));
  const auto lift = lift_decomposition_mod_ideal(q, make_decomposition(q.ring, 1, {1}), z8.element(6));
  EXPECT_EQ(lift.lifted.idempotent.index, 1u);
  EXPECT_EQ(idx(lift.lifted.units), std::vector<Index>{5});
  EXPECT_TRUE(lift.check.strongly_valid());
  EXPECT_TRUE(lift.residual_in_ideal);

  const auto trivial = quotient_ring(z8, set_of(z8, {0}));
  const auto same = lift_decomposition_mod_ideal(trivial, make_decomposition(trivial.ring, 1, {5}),
                                                 z8.element(6));
  EXPECT_EQ(same.lifted, make_decomposition(z8, 1, {5}));

  // Z/2[x]/(x^2) modulo (x): x + 1 = 0 + (x + 1).
  const Ring s = truncated_series(zmod(2), 2);
  const std::vector<Element> gx{poly_variable(s)};
  const auto qs = quotient_ring(s, ideal_closure(s, gx));
  const auto ls = lift_decomposition_mod_ideal(qs, make_decomposition(qs.ring, 0, {1}), s.element(3));
  EXPECT_EQ(ls.lifted.idempotent.index, 0u);
  EXPECT_EQ(idx(ls.lifted.units), std::vector<Index>{3});
  EXPECT_EQ(s.mul(3, 3), s.one());
}

TEST(LiftDecomposition, RejectsIdealOutsideJacobson) {
  const Ring z6 = zmod(6);
  const auto q = quotient_ring(z6, set_of(z6, {0, 3}));
  EXPECT_THROW(lift_decomposition_mod_ideal(q, make_decomposition(q.ring, 0, {1}), z6.element(1)),
               PreconditionError);
}

// ---- square roots of one -----------------------------------------------------

TEST(UnitSqrt, Examples) {
  const Ring z9 = zmod(9);
  const auto f = unit_sqrt_forward(z9, make_decomposition(z9, 0, {4}));
  EXPECT_EQ(f.root.index, 8u);
  EXPECT_EQ(idx(f.units), std::vector<Index>{8});
  EXPECT_EQ(z9.add(8, 8), z9.sub(z9.mul(2, 4), 1));

  const Ring z25 = zmod(25);
  const auto g = unit_sqrt_forward(z25, make_decomposition(z25, 1, {12}));
  EXPECT_EQ(g.root.index, 1u);
  EXPECT_EQ(idx(g.units), std::vector<Index>{24});
  EXPECT_EQ(z25.add(1, 24), z25.sub(z25.mul(2, 13), 1));
  EXPECT_EQ(unit_sqrt_backward(z25, g), make_decomposition(z25, 1, {12}));

  const Ring z6 = zmod(6);
  EXPECT_THROW(unit_sqrt_forward(z6, make_decomposition(z6, 1, {1})), PreconditionError);
}

// ---- U_n chains ------------------------------------------------------------------

TEST(UChain, Examples) {
  auto rep = u_chain_check(zmod(9), 1);
  EXPECT_TRUE(rep.all_n_strongly_clean);
  EXPECT_TRUE(rep.two_invertible);
  EXPECT_TRUE(rep.u_next_is_universe);
  EXPECT_FALSE(rep.vacuous());

  rep = u_chain_check(zmod(6), 1);
  EXPECT_FALSE(rep.two_invertible);
  EXPECT_FALSE(rep.u_next_is_universe);  // 3 is not a sum of two units
  EXPECT_EQ(rep.outside_u_next, 3u);
  EXPECT_TRUE(rep.implication_holds());
  EXPECT_TRUE(rep.vacuous());

  rep = u_chain_check(zmod(2), 1);
  EXPECT_FALSE(rep.two_invertible);
  EXPECT_TRUE(rep.implication_holds());
  EXPECT_THROW(u_chain_check(zmod(2), 0), PreconditionError);
}

// ---- Pierce ----------------------------------------------------------------------

TEST(Pierce, Components) {
  const Ring m = matrix_ring(2, zmod(2));
  const Element e11 = matrix_unit(m, 0, 0);
  const Element all = m.element(15);
  const auto p = pierce_components(m, e11, all);
  EXPECT_EQ(p.a, e11);
  EXPECT_EQ(p.b, matrix_unit(m, 0, 1));
  EXPECT_EQ(p.c, matrix_unit(m, 1, 0));
  EXPECT_EQ(p.d, matrix_unit(m, 1, 1));

  const auto one = pierce_components(m, m.element(m.one()), all);
  EXPECT_EQ(one.a, all);
  EXPECT_EQ(one.d.index, 0u);
  const auto zero = pierce_components(m, m.element(0), all);
  EXPECT_EQ(zero.d, all);
  EXPECT_EQ(zero.a.index, 0u);
}

TEST(Pierce, IdentityCase) {
  const Ring m = matrix_ring(2, zmod(2));
  const auto top = corner_ring(m, matrix_unit(m, 0, 0));
  const auto bottom = corner_ring(m, matrix_unit(m, 1, 1));
  const auto d_a = make_decomposition(top.ring, 0, {top.ring.one()});
  const auto d_d = make_decomposition(bottom.ring, 0, {bottom.ring.one()});
  const auto res = pierce_combine(top, bottom, m.element(m.one()), d_a, d_d);
  EXPECT_EQ(res.combined.idempotent.index, 0u);
  EXPECT_EQ(idx(res.combined.units), std::vector<Index>{m.one()});
  EXPECT_TRUE(res.n_clean());
  EXPECT_TRUE(res.closed_forms_verified());
  EXPECT_TRUE(res.cross_terms_vanish());
  EXPECT_EQ(res.units.front().source, InverseSource::closed_form);
}

TEST(Pierce, OrthogonalFoldMatchesDirectCombine) {
  const Ring m = matrix_ring(2, zmod(2));
  const std::vector<Element> es{matrix_unit(m, 0, 0), matrix_unit(m, 1, 1)};
  const auto top = corner_ring(m, es[0]);
  const auto bottom = corner_ring(m, es[1]);
  for (Index x = 0; x < m.size(); ++x) {
    const auto fold = orthogonal_pierce(m, es, m.element(x), 1);
    ASSERT_TRUE(fold.ok()) << x << ": " << fold.failure;
    const auto parts = pierce_components(m, es[0], m.element(x));
    const auto d_a = *n_strongly_clean_witness(top.ring, top.restrict(parts.a), 1);
    const Element target = pierce_complement_target(top, m.element(x), d_a);
    const auto d_d = *n_strongly_clean_witness(bottom.ring, bottom.restrict(target), 1);
    EXPECT_EQ(*fold.decomposition, pierce_combine(top, bottom, m.element(x), d_a, d_d).combined);
  }
}

TEST(Pierce, SingleIdempotentIsIdentityFold) {
  const Ring z6 = zmod(6);
  const std::vector<Element> es{z6.element(1)};
  const auto fold = orthogonal_pierce(z6, es, z6.element(2), 1);
  ASSERT_TRUE(fold.ok());
  EXPECT_EQ(*fold.decomposition, *n_strongly_clean_witness(z6, z6.element(2), 1));
}

TEST(Pierce, SeededMatrixOverZ3) {
  const Ring m = matrix_ring(2, zmod(3));
  const std::vector<Element> es{matrix_unit(m, 0, 0), matrix_unit(m, 1, 1)};
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const Element x = m.element(static_cast<Index>(rng() % m.size()));
    const auto fold = orthogonal_pierce(m, es, x, 1 + t % 2);
    ASSERT_TRUE(fold.ok()) << fold.failure;
    EXPECT_TRUE(revalidate(m, *fold.decomposition, x).valid());
    for (const auto& step : fold.steps) {
      EXPECT_TRUE(step.closed_forms_verified());
      EXPECT_TRUE(step.cross_terms_vanish());
    }
  }
}

TEST(Pierce, Preconditions) {
  const Ring m = matrix_ring(2, zmod(2));
  const std::vector<Element> not_sum{matrix_unit(m, 0, 0)};
  EXPECT_THROW(orthogonal_pierce(m, not_sum, m.element(0), 1), PreconditionError);
  const std::vector<Element> not_orth{matrix_unit(m, 0, 0), m.element(m.one())};
  EXPECT_THROW(orthogonal_pierce(m, not_orth, m.element(0), 1), PreconditionError);
  EXPECT_THROW(pierce_components(m, matrix_unit(m, 0, 1), m.element(0)), PreconditionError);
}

// ---- series ------------------------------------------------------------------------

TEST(SeriesLift, Examples) {
  const Ring z4 = zmod(4);
  const Ring s2 = truncated_series(z4, 2);
  const Element f = s2.element(2 + 3 * 4);  // 2 + 3x
  const auto lift = series_lift(s2, f, make_decomposition(z4, 1, {1}));
  EXPECT_EQ(lift.lifted.idempotent.index, 1u);
  EXPECT_EQ(idx(lift.lifted.units), std::vector<Index>{1 + 3 * 4});
  EXPECT_EQ(s2.mul(1 + 3 * 4, 1 + 1 * 4), s2.one());
  EXPECT_TRUE(lift.check.strongly_valid());

  const Element c = s2.element(3);
  const auto flat = series_lift(s2, c, make_decomposition(z4, 0, {3}));
  EXPECT_EQ(idx(flat.lifted.units), std::vector<Index>{3});

  const Ring s3 = truncated_series(z4, 3);
  const Index g = 3 + 2 * 4 + 2 * 16;
  const auto l3 = series_lift(s3, s3.element(g), make_decomposition(z4, 0, {3}));
  EXPECT_EQ(idx(l3.lifted.units), std::vector<Index>{g});
  EXPECT_TRUE(s3.units().contains(g));
  EXPECT_EQ(series_constant_part(s3, l3.lifted), make_decomposition(z4, 0, {3}));
}

// ---- polynomials ---------------------------------------------------------------------

TEST(PolyUnits, Examples) {
  const Ring z4 = zmod(4);
  const auto inv = poly_unit_check(z4, Poly{1, 2}, 4);
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, (Poly{1, 2}));
  EXPECT_FALSE(poly_unit_check(z4, Poly{1, 1}, 6));
  EXPECT_FALSE(poly_unit_criterion(z4, Poly{1, 1}));
  EXPECT_EQ(*poly_unit_check(z4, Poly{1}, 0), Poly{1});
  EXPECT_TRUE(poly_unit_criterion(z4, Poly{3, 2, 2}));
  EXPECT_THROW(poly_unit_check(matrix_ring(2, zmod(2)), Poly{1}, 1), UnsupportedError);
}

TEST(PolyUnits, CharacterizationHolds) {
  for (const Ring& r : {zmod(4), zmod(6), zmod(8)}) {
    const auto rep = poly_unit_characterization(r, 2);
    EXPECT_TRUE(rep.holds()) << r.expression();
    EXPECT_EQ(rep.units_by_search, rep.units_by_criterion);
  }
}

TEST(PolySigma, Certificates) {
  for (const Ring& r : {zmod(4), zmod(6), zmod(12)}) {
    const auto cert = poly_x_not_sigma_witness(r, 3, 2);
    EXPECT_TRUE(cert.structural_ok()) << r.expression();
    EXPECT_TRUE(cert.exhaustive_ok()) << r.expression();
    EXPECT_TRUE(cert.idempotents_are_constants);
  }
  // Reduced ring: units of R[x] are exactly the constant units.
  const auto z6 = poly_x_not_sigma_witness(zmod(6), 2, 2);
  EXPECT_EQ(z6.unit_polynomials, 2u);
}

// ---- semiclean route ---------------------------------------------------------------

TEST(SemicleanRoute, Examples) {
  const Ring g = group_ring(zmod(2), GroupSpec{{3}});
  const auto route = semiclean_route_two_decomposition(g, g.element(0b010));
  EXPECT_TRUE(route.check.strongly_valid());
  EXPECT_EQ(route.result.n(), 2u);

  const Ring g3 = group_ring(zmod(3), GroupSpec{{3}});
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Element x = g3.element(static_cast<Index>(rng() % g3.size()));
    EXPECT_TRUE(semiclean_route_two_decomposition(g3, x).check.strongly_valid());
  }
  const Ring z5 = zmod(5);
  z5.idempotents().for_each([&](Index e) {
    const Element x = z5.element(z5.add(e, z5.from_integer(2)));
    EXPECT_TRUE(semiclean_route_two_decomposition(z5, x).check.valid());
  });
  EXPECT_THROW(semiclean_route_two_decomposition(matrix_ring(2, zmod(2)), Element{}),
               PreconditionError);
}
