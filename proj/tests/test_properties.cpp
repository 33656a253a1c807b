// Seeded property tests. Each generator draws from a fixed mt19937_64 seed so
// failures reproduce exactly; assertions print the offending ring.
#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "suite.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/theorems.hpp"

using namespace ringlab;

namespace {

using Rng = std::mt19937_64;

std::uint64_t draw(Rng& g, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(g);
}

// A random small ring together with an independently computed oracle.
struct Sample {
  std::string expression;
  Ring ring;
  oracle::Naive naive;
};

Sample random_ring(Rng& g, std::uint64_t max_size = 64) {
  for (;;) {
    switch (draw(g, 0, 4)) {
      case 0: {
        const auto n = draw(g, 2, std::min<std::uint64_t>(max_size, 40));
        const std::string e = "Zmod(" + std::to_string(n) + ")";
        return {e, parse_ring(e), oracle::zmod(n)};
      }
      case 1: {
        const auto a = draw(g, 2, 8), b = draw(g, 2, 8);
        if (a * b > max_size) continue;
        const std::string e = "prod(Zmod(" + std::to_string(a) + "),Zmod(" + std::to_string(b) + "))";
        return {e, parse_ring(e), oracle::zmod_product({oracle::Idx(a), oracle::Idx(b)})};
      }
      case 2: {
        const auto q = draw(g, 2, 4), k = draw(g, 2, 4);
        std::uint64_t size = 1;
        for (std::uint64_t i = 0; i < k; ++i) size *= q;
        if (size > max_size) continue;
        const std::string e = "gring(Zmod(" + std::to_string(q) + "),C" + std::to_string(k) + ")";
        return {e, parse_ring(e), oracle::group_ring(q, {oracle::Idx(k)})};
      }
      case 3: {
        const auto q = draw(g, 2, 3);
        if (q * q * q * q > max_size) continue;
        const std::string e = "M(2,Zmod(" + std::to_string(q) + "))";
        return {e, parse_ring(e), oracle::matrices(2, q)};
      }
      default: {
        const auto q = draw(g, 2, 4), d = draw(g, 1, 3);
        std::uint64_t size = 1;
        for (std::uint64_t i = 0; i < d; ++i) size *= q;
        if (size > max_size) continue;
        std::vector<oracle::Idx> f;
        std::string e = "polyq(Zmod(" + std::to_string(q) + "),[";
        for (std::uint64_t i = 0; i <= d; ++i) {
          f.push_back(i == d ? 1 : draw(g, 0, q - 1));
          e += (i ? "," : "") + std::to_string(f.back());
        }
        e += "])";
        return {e, parse_ring(e), oracle::polys(q, f)};
      }
    }
  }
}

ElementSet random_set(Rng& g, const Ring& r, double density) {
  ElementSet s = r.empty_set();
  std::bernoulli_distribution pick(density);
  for (Index i = 0; i < r.size(); ++i)
    if (pick(g)) s.insert(i);
  return s;
}

std::vector<Index> to_vec(const std::set<oracle::Idx>& s) {
  return std::vector<Index>(s.begin(), s.end());
}

std::vector<Ring> suite_rings() {
  std::vector<Ring> out;
  for (const auto& e : suite::expressions()) out.push_back(parse_ring(e));
  return out;
}

}  // namespace

TEST(Property, RandomRingsMatchOracleTables) {
  Rng g(1);
  for (int t = 0; t < 40; ++t) {
    const Sample s = random_ring(g);
    ASSERT_EQ(s.ring.size(), s.naive.size) << s.expression;
    EXPECT_EQ(s.ring.one(), s.naive.one) << s.expression;
    for (Index a = 0; a < s.ring.size(); ++a)
      for (Index b = 0; b < s.ring.size(); ++b) {
        ASSERT_EQ(s.ring.add(a, b), s.naive.add(a, b)) << s.expression;
        ASSERT_EQ(s.ring.mul(a, b), s.naive.mul(a, b)) << s.expression;
      }
  }
}

TEST(Property, AxiomsHoldOnRandomRings) {
  Rng g(2);
  for (int t = 0; t < 40; ++t) {
    const Sample s = random_ring(g);
    const auto rep = verify_axioms(s.ring);
    EXPECT_TRUE(rep.exhaustive) << s.expression;
    EXPECT_TRUE(rep.ok()) << s.expression;
    EXPECT_NE(s.ring.zero(), s.ring.one()) << s.expression;
  }
}

TEST(Property, AxiomsHoldOnSuiteInFullMode) {
  for (const Ring& r : suite_rings()) {
    const auto rep = verify_axioms(r);
    EXPECT_TRUE(rep.exhaustive) << r.expression();
    EXPECT_EQ(rep.violation_count, 0u) << r.expression();
  }
}

TEST(Property, InverseIsSymmetric) {
  for (const Ring& r : suite_rings()) {
    r.units().for_each([&](Index u) {
      const auto v = inverse(r, r.element(u));
      ASSERT_TRUE(v) << r.expression() << " " << u;
      const auto back = inverse(r, *v);
      ASSERT_TRUE(back);
      EXPECT_EQ(back->index, u);
      EXPECT_EQ(r.mul(u, v->index), r.one());
      EXPECT_EQ(r.mul(v->index, u), r.one());
    });
    for (Index x = 0; x < r.size(); ++x)
      if (!r.units().contains(x)) EXPECT_FALSE(inverse(r, r.element(x))) << r.expression() << " " << x;
  }
}

TEST(Property, CachedSetsAreSound) {
  Rng g(3);
  for (int t = 0; t < 30; ++t) {
    const Sample s = random_ring(g);
    const Ring& r = s.ring;
    EXPECT_EQ(r.units().to_vector(), to_vec(oracle::units(s.naive))) << s.expression;
    EXPECT_EQ(r.idempotents().to_vector(), to_vec(oracle::idempotents(s.naive))) << s.expression;
    r.idempotents().for_each([&](Index e) { EXPECT_EQ(r.mul(e, e), e); });
    if (r.commutative()) {
      EXPECT_EQ(r.nilradical().members.to_vector(), to_vec(oracle::nilpotents(s.naive))) << s.expression;
    }
  }
}

TEST(Property, CentralizerIsClosedSubring) {
  Rng g(4);
  for (int t = 0; t < 20; ++t) {
    const Sample s = random_ring(g, 81);
    const Ring& r = s.ring;
    const Index e = static_cast<Index>(draw(g, 0, r.size() - 1));
    const ElementSet c = centralizer(r, r.element(e));
    EXPECT_TRUE(c.contains(r.zero()));
    EXPECT_TRUE(c.contains(r.one()));
    EXPECT_TRUE(c.contains(e));
    for (Index y = 0; y < r.size(); ++y)
      EXPECT_EQ(c.contains(y), r.mul(y, e) == r.mul(e, y)) << s.expression;
    c.for_each([&](Index a) {
      c.for_each([&](Index b) {
        ASSERT_TRUE(c.contains(r.add(a, b))) << s.expression << " e=" << e;
        ASSERT_TRUE(c.contains(r.mul(a, b))) << s.expression << " e=" << e;
      });
    });
  }
}

TEST(Property, SumsetCommutesAndMatchesDoubleLoop) {
  Rng g(5);
  for (int t = 0; t < 50; ++t) {
    const Sample s = random_ring(g);
    const Ring& r = s.ring;
    const ElementSet a = random_set(g, r, 0.2), b = random_set(g, r, 0.2);
    const ElementSet ab = sumset(r, a, b);
    EXPECT_EQ(ab, sumset(r, b, a)) << s.expression;
    std::set<Index> naive;
    a.for_each([&](Index x) { b.for_each([&](Index y) { naive.insert(r.add(x, y)); }); });
    EXPECT_EQ(ab.to_vector(), std::vector<Index>(naive.begin(), naive.end()));
    ab.for_each([&](Index x) { EXPECT_LT(x, r.size()); });
  }
}

TEST(Property, ElementSetMatchesStdSet) {
  Rng g(6);
  const Ring r = zmod(200);
  for (int t = 0; t < 50; ++t) {
    const ElementSet a = random_set(g, r, 0.3), b = random_set(g, r, 0.3);
    std::set<Index> sa, sb;
    a.for_each([&](Index i) { sa.insert(i); });
    b.for_each([&](Index i) { sb.insert(i); });
    EXPECT_EQ(a.count(), sa.size());
    std::set<Index> u = sa, in, d;
    u.insert(sb.begin(), sb.end());
    for (Index i : sa) (sb.count(i) ? in : d).insert(i);
    EXPECT_EQ((a | b).to_vector(), std::vector<Index>(u.begin(), u.end()));
    EXPECT_EQ((a & b).to_vector(), std::vector<Index>(in.begin(), in.end()));
    EXPECT_EQ((a - b).to_vector(), std::vector<Index>(d.begin(), d.end()));
    EXPECT_EQ((a & b).is_subset_of(a), true);
  }
}

TEST(Property, IdealClosureIsAnIdeal) {
  Rng g(7);
  for (int t = 0; t < 30; ++t) {
    const Sample s = random_ring(g, 256);
    const Ring& r = s.ring;
    std::vector<Element> gens;
    for (std::uint64_t k = draw(g, 1, 2); k > 0; --k) gens.push_back(r.element(draw(g, 0, r.size() - 1)));
    const ElementSet i = ideal_closure(r, gens);
    for (const auto& x : gens) EXPECT_TRUE(i.contains(x.index));
    i.for_each([&](Index a) {
      for (Index x = 0; x < r.size(); ++x) {
        ASSERT_TRUE(i.contains(r.mul(x, a))) << s.expression;
        ASSERT_TRUE(i.contains(r.mul(a, x))) << s.expression;
      }
      i.for_each([&](Index b) { ASSERT_TRUE(i.contains(r.add(a, b))) << s.expression; });
    });
    EXPECT_TRUE(is_two_sided_ideal(r, i));
  }
}

TEST(Property, NilradicalInsideJacobson) {
  for (const Ring& r : suite_rings()) {
    if (!r.commutative()) continue;
    const ElementSet& j = r.jacobson();
    EXPECT_TRUE(r.nilradical().members.is_subset_of(j)) << r.expression();
    EXPECT_TRUE(is_two_sided_ideal(r, j)) << r.expression();
  }
}

TEST(Property, WitnessesRevalidateAcrossSuite) {
  for (const Ring& r : suite_rings()) {
    StronglyCleanSolver solver(r);
    for (Index x = 0; x < r.size(); ++x) {
      const auto k = solver.index(r.element(x), 4);
      ASSERT_TRUE(k) << r.expression() << " " << x;
      const auto w = n_strongly_clean_witness(r, r.element(x), *k);
      ASSERT_TRUE(w);
      EXPECT_TRUE(revalidate(r, *w, r.element(x)).strongly_valid()) << r.expression() << " " << x;
      if (*k > 1) EXPECT_FALSE(n_strongly_clean_witness(r, r.element(x), *k - 1));
    }
  }
}

TEST(Property, ExactWitnessesMatchOracle) {
  Rng g(8);
  for (int t = 0; t < 25; ++t) {
    const Sample s = random_ring(g, 36);
    const Ring& r = s.ring;
    for (int n = 1; n <= 3; ++n) {
      for (Index x = 0; x < r.size(); ++x) {
        const auto w = n_strongly_clean_witness(r, r.element(x), n);
        const auto o = oracle::strongly_clean(s.naive, x, n);
        ASSERT_EQ(w.has_value(), o.has_value()) << s.expression << " x=" << x << " n=" << n;
        if (!w) continue;
        EXPECT_EQ(w->idempotent.index, o->idempotent) << s.expression << " x=" << x << " n=" << n;
        std::vector<Index> units;
        for (const auto& u : w->units) units.push_back(u.index);
        EXPECT_EQ(units, o->units) << s.expression << " x=" << x << " n=" << n;
      }
    }
  }
}

TEST(Property, ClassificationIsDeterministic) {
  Rng g(9);
  for (int t = 0; t < 10; ++t) {
    const Sample s = random_ring(g);
    const Ring again = parse_ring(s.expression);
    const auto a = classify_ring(s.ring, 3), b = classify_ring(again, 3);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      EXPECT_EQ(a.records[i].index, b.records[i].index);
      ASSERT_EQ(a.records[i].witnesses.size(), b.records[i].witnesses.size());
      for (std::size_t k = 0; k < a.records[i].witnesses.size(); ++k) {
        const auto& da = a.records[i].witnesses[k].second;
        const auto& db = b.records[i].witnesses[k].second;
        EXPECT_EQ(da.idempotent.index, db.idempotent.index);
        ASSERT_EQ(da.units.size(), db.units.size());
        for (std::size_t j = 0; j < da.units.size(); ++j) EXPECT_EQ(da.units[j].index, db.units[j].index);
      }
    }
  }
}

TEST(Property, UnSetsMonotoneAndMatchOracle) {
  Rng g(10);
  for (int t = 0; t < 20; ++t) {
    const Sample s = random_ring(g, 36);
    ElementSet previous = s.ring.empty_set();
    for (int n = 1; n <= 4; ++n) {
      const ElementSet un = u_n_set(s.ring, n);
      EXPECT_EQ(un.to_vector(), to_vec(oracle::u_n(s.naive, n))) << s.expression << " n=" << n;
      EXPECT_TRUE(previous.is_subset_of(un));
      previous = un;
    }
  }
}

TEST(Property, IntegerIndexMatchesOracle) {
  for (std::int64_t k = -60; k <= 60; ++k) {
    const int index = integer_strongly_clean_index(k);
    EXPECT_EQ(index, oracle::integer_index(k)) << k;
    EXPECT_GE(index, std::llabs(k) - 1) << k;
    const auto w = integer_strongly_clean_witness(k);
    EXPECT_EQ(w.idempotent + w.plus_ones - w.minus_ones, k);
    EXPECT_EQ(w.plus_ones + w.minus_ones, index);
  }
}

TEST(Property, CoordinatesRoundTrip) {
  Rng g(11);
  for (int t = 0; t < 30; ++t) {
    const Sample s = random_ring(g, 256);
    for (Index i = 0; i < s.ring.size(); ++i) {
      const auto c = s.ring.coordinates(i);
      ASSERT_EQ(s.ring.from_coordinates(c), i) << s.expression;
    }
  }
}

TEST(Property, LiftThenPushRecoversImage) {
  Rng g(12);
  for (int t = 0; t < 12; ++t) {
    const std::uint64_t p = draw(g, 0, 1) ? 2 : 3;
    const std::uint64_t k = draw(g, 2, p == 2 ? 5 : 3);
    std::uint64_t n = 1;
    for (std::uint64_t i = 0; i < k; ++i) n *= p;
    std::uint64_t gen = 1;
    for (std::uint64_t i = draw(g, 1, k - 1); i > 0; --i) gen *= p;
    const Ring r = zmod(static_cast<std::int64_t>(n));
    const std::vector<Element> gens{r.element(gen)};
    const auto q = quotient_ring(r, ideal_closure(r, gens));
    for (Index x = 0; x < r.size(); ++x) {
      const Element image = q.projection(r.element(x));
      const auto w = n_strongly_clean_witness(q.ring, image, 1);
      ASSERT_TRUE(w);
      const auto lift = lift_decomposition_mod_ideal(q, *w, r.element(x));
      EXPECT_TRUE(lift.check.strongly_valid()) << n << " / " << gen << " x=" << x;
      EXPECT_TRUE(lift.residual_in_ideal);
      const auto push = hom_image_push(q.projection, lift.lifted);
      EXPECT_TRUE(push.check.valid());
      EXPECT_EQ(push.image.value(q.ring).index, image.index);
      EXPECT_EQ(push.image.idempotent.index, w->idempotent.index);
    }
  }
}

TEST(Property, ProjectionIsHomomorphism) {
  Rng g(13);
  for (int t = 0; t < 15; ++t) {
    const Sample s = random_ring(g, 81);
    const std::vector<Element> gens{s.ring.element(draw(g, 0, s.ring.size() - 1))};
    const ElementSet ideal = ideal_closure(s.ring, gens);
    const auto q = quotient_ring(s.ring, ideal);
    EXPECT_EQ(q.ring.size() * ideal.count(), s.ring.size()) << s.expression;
    for (Index a = 0; a < s.ring.size(); ++a)
      for (Index b = 0; b < s.ring.size(); ++b) {
        const Element pa = q.projection(s.ring.element(a)), pb = q.projection(s.ring.element(b));
        ASSERT_EQ(q.projection(s.ring.element(s.ring.add(a, b))).index, q.ring.add(pa.index, pb.index));
        ASSERT_EQ(q.projection(s.ring.element(s.ring.mul(a, b))).index, q.ring.mul(pa.index, pb.index));
      }
    EXPECT_EQ(q.projection(s.ring.element(s.ring.one())).index, q.ring.one());
  }
}

TEST(Property, SqrtRoundTripOnOddModuli) {
  for (int n : {3, 5, 7, 9, 15, 25, 27}) {
    const Ring r = zmod(n);
    for (Index x = 0; x < r.size(); ++x) {
      const auto d = *n_strongly_clean_witness(r, r.element(x), 1);
      const auto f = unit_sqrt_forward(r, d);
      EXPECT_EQ(r.mul(f.root.index, f.root.index), r.one());
      Index sum = f.root.index;
      for (const auto& v : f.units) sum = r.add(sum, v.index);
      EXPECT_EQ(sum, r.sub(r.add(x, x), r.one()));
      EXPECT_EQ(unit_sqrt_backward(r, f).canonical(), d.canonical()) << n << " " << x;
    }
  }
}
