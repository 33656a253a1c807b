#include <gtest/gtest.h>

#include "oracle.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"

using namespace ringlab;

namespace {

// Compares full addition and multiplication tables with an oracle ring.
void expect_same_tables(const Ring& r, const oracle::Naive& n) {
  ASSERT_EQ(r.size(), n.size);
  EXPECT_EQ(r.one(), n.one);
  for (Index a = 0; a < r.size(); ++a)
    for (Index b = 0; b < r.size(); ++b) {
      ASSERT_EQ(r.add(a, b), n.add(a, b)) << a << " + " << b;
      ASSERT_EQ(r.mul(a, b), n.mul(a, b)) << a << " * " << b;
    }
}

std::size_t unit_count(const Ring& r) { return r.units().count(); }

}  // namespace

TEST(Zmod, Basics) {
  EXPECT_EQ(zmod(6).size(), 6u);
  const Ring f2 = zmod(2);
  EXPECT_EQ(f2.units().to_vector(), std::vector<Index>{1});
  EXPECT_THROW(zmod(1), ConstructionError);
  EXPECT_THROW(zmod(0), ConstructionError);
  EXPECT_THROW(zmod(-4), ConstructionError);
  expect_same_tables(zmod(12), oracle::zmod(12));
}

TEST(DirectProduct, Basics) {
  const std::vector<Ring> f{zmod(4), zmod(9)};
  const Ring p = direct_product(f);
  EXPECT_EQ(p.size(), 36u);
  EXPECT_EQ(product_project(p, 0, p.element(p.one())).index, 1u);
  EXPECT_EQ(product_project(p, 1, p.element(p.one())).index, 1u);
  expect_same_tables(p, oracle::zmod_product({4, 9}));

  const std::vector<Ring> crt{zmod(2), zmod(3)};
  EXPECT_EQ(unit_count(direct_product(crt)), unit_count(zmod(6)));
  EXPECT_THROW(direct_product(std::vector<Ring>{}), ConstructionError);
}

TEST(DirectProduct, PackAndProject) {
  const std::vector<Ring> f{zmod(4), zmod(9)};
  const Ring p = direct_product(f);
  const std::vector<Element> parts{f[0].element(2), f[1].element(4)};
  const Element x = product_pack(p, parts);
  EXPECT_EQ(x.index, 2u + 4u * 4u);
  EXPECT_EQ(product_project(p, 0, x), parts[0]);
  EXPECT_EQ(product_project(p, 1, x), parts[1]);
}

TEST(GroupRing, CyclicThreeOverZ2) {
  const Ring g = group_ring(zmod(2), GroupSpec{{3}});
  EXPECT_EQ(g.size(), 8u);
  expect_same_tables(g, oracle::group_ring(2, {3}));
  // a + a^2 is the coefficient vector (0,1,1).
  const Index s = 0b110;
  EXPECT_EQ(g.mul(s, s), s);
  EXPECT_EQ(g.format(s), "a + a^2");
  const std::vector<Index> exps{1};
  EXPECT_EQ(group_element(g, exps).index, 0b010u);
  EXPECT_EQ(augmentation(g, g.element(0b111)).index, 1u);
}

TEST(GroupRing, TrivialAndProductGroups) {
  const Ring t = group_ring(zmod(3), GroupSpec{});
  EXPECT_EQ(t.size(), 3u);
  expect_same_tables(t, oracle::zmod(3));
  const Ring k = group_ring(zmod(3), GroupSpec{{2, 2}});
  EXPECT_EQ(k.size(), 81u);
  expect_same_tables(k, oracle::group_ring(3, {2, 2}));
  EXPECT_THROW(group_ring(zmod(2), GroupSpec{{1}}), ConstructionError);
  EXPECT_THROW(group_ring(matrix_ring(2, zmod(2)), GroupSpec{{2}}), UnsupportedError);
}

TEST(MatrixRing, Basics) {
  const Ring m = matrix_ring(2, zmod(2));
  EXPECT_EQ(m.size(), 16u);
  EXPECT_EQ(unit_count(m), 6u);
  EXPECT_EQ(matrix_ring(2, zmod(4)).size(), 256u);
  expect_same_tables(matrix_ring(1, zmod(5)), oracle::zmod(5));
  expect_same_tables(matrix_ring(2, zmod(3)), oracle::matrices(2, 3));
  EXPECT_EQ(m.format(m.one()), "[[1,0],[0,1]]");
  EXPECT_THROW(matrix_ring(0, zmod(2)), ConstructionError);
}

TEST(PolyQuotient, Basics) {
  const Ring z4 = zmod(4);
  const std::vector<std::int64_t> x2{0, 0, 1};
  const Ring r = poly_quotient(z4, MonicPoly::from_integers(z4, x2));
  EXPECT_EQ(r.size(), 16u);
  const Index x = poly_variable(r).index;
  EXPECT_EQ(r.mul(x, x), r.zero());
  expect_same_tables(r, oracle::polys(4, {0, 0, 1}));

  const Ring z2 = zmod(2);
  const std::vector<std::int64_t> f{1, 1, 1};
  const Ring f4 = poly_quotient(z2, MonicPoly::from_integers(z2, f));
  EXPECT_EQ(f4.size(), 4u);
  EXPECT_EQ(unit_count(f4), 3u);
  expect_same_tables(f4, oracle::polys(2, {1, 1, 1}));

  EXPECT_EQ(poly_quotient(z4, MonicPoly::monomial(z4, 3)).size(), 64u);
  const std::vector<std::int64_t> not_monic{1, 2};
  EXPECT_THROW(poly_quotient(z4, MonicPoly::from_integers(z4, not_monic)), ConstructionError);
  const std::vector<std::int64_t> constant{1};
  EXPECT_THROW(poly_quotient(z4, MonicPoly::from_integers(z4, constant)), ConstructionError);
}

TEST(PolyQuotient, NegativeCoefficientsReduce) {
  const Ring z3 = zmod(3);
  const std::vector<std::int64_t> f{-1, 0, 1};  // x^2 - 1 = x^2 + 2
  const Ring r = poly_quotient(z3, MonicPoly::from_integers(z3, f));
  expect_same_tables(r, oracle::polys(3, {2, 0, 1}));
}

TEST(TruncatedSeries, Basics) {
  const Ring z4 = zmod(4);
  EXPECT_EQ(truncated_series(z4, 3).size(), 64u);
  expect_same_tables(truncated_series(z4, 1), oracle::zmod(4));
  const Ring s = truncated_series(z4, 2);
  const Index one_plus_2x = 1 + 2 * 4;
  EXPECT_TRUE(s.units().contains(one_plus_2x));
  EXPECT_EQ(s.mul(one_plus_2x, one_plus_2x), s.one());
  EXPECT_EQ(s.expression(), "series(Zmod(4),2)");
  EXPECT_EQ(poly_constant_term(s, s.element(one_plus_2x)).index, 1u);
  EXPECT_EQ(poly_constant(s, z4.element(3)).index, 3u);
}

TEST(QuotientRing, Examples) {
  const Ring z6 = zmod(6);
  ElementSet i3 = z6.empty_set();
  i3.insert(0);
  i3.insert(3);
  const auto q = quotient_ring(z6, i3);
  EXPECT_EQ(q.ring.size(), 3u);
  expect_same_tables(q.ring, oracle::zmod(3));
  EXPECT_TRUE(verify_homomorphism(q.projection).ok());

  ElementSet zero = z6.empty_set();
  zero.insert(0);
  const auto same = quotient_ring(z6, zero);
  expect_same_tables(same.ring, oracle::zmod(6));

  const Ring z8 = zmod(8);
  ElementSet i4 = z8.empty_set();
  i4.insert(0);
  i4.insert(4);
  const auto q8 = quotient_ring(z8, i4);
  expect_same_tables(q8.ring, oracle::zmod(4));

  ElementSet not_ideal = z6.empty_set();
  not_ideal.insert(0);
  not_ideal.insert(1);
  EXPECT_THROW(quotient_ring(z6, not_ideal), ConstructionError);
}

TEST(CornerRing, Examples) {
  const Ring m = matrix_ring(2, zmod(2));
  const auto c = corner_ring(m, matrix_unit(m, 0, 0));
  EXPECT_EQ(c.ring.size(), 2u);
  expect_same_tables(c.ring, oracle::zmod(2));
  EXPECT_EQ(corner_ring(m, m.element(m.one())).ring.size(), 16u);
  EXPECT_EQ(corner_ring(m, m.element(0)).ring.size(), 1u);
  EXPECT_THROW(corner_ring(m, matrix_unit(m, 0, 1)), PreconditionError);
  EXPECT_THROW(c.restrict(matrix_unit(m, 0, 1)), PreconditionError);
  EXPECT_EQ(c.embed(c.ring.element(c.ring.one())), matrix_unit(m, 0, 0));
}

TEST(Homomorphism, BrokenMapDetected) {
  const Ring z6 = zmod(6), z3 = zmod(3);
  RingHom bad{z6, z3, {0, 1, 1, 0, 1, 2}};
  EXPECT_FALSE(verify_homomorphism(bad).ok());
}

TEST(Constructors, AxiomsHoldOnSmallRings) {
  const std::vector<std::int64_t> x3{0, 0, 0, 1};
  const std::vector<Ring> rings{
      zmod(12),
      direct_product(std::vector<Ring>{zmod(2), zmod(3)}),
      group_ring(zmod(3), GroupSpec{{3}}),
      matrix_ring(2, zmod(2)),
      poly_quotient(zmod(2), MonicPoly::from_integers(zmod(2), x3)),
      truncated_series(zmod(3), 2),
  };
  for (const auto& r : rings) {
    const auto rep = verify_axioms(r);
    EXPECT_TRUE(rep.exhaustive) << r.expression();
    EXPECT_TRUE(rep.ok()) << r.expression();
  }
}
