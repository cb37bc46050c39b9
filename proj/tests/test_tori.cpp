#include <gtest/gtest.h>

#include <random>

#include "ppav/exact_linalg.hpp"
#include "ppav/tori.hpp"

using namespace ppav;

namespace {

const QuadOrder kOrders[] = {QuadOrder::integers(), QuadOrder::gaussian(), QuadOrder::eisenstein()};

OrderMatrix random_order_matrix(std::mt19937_64& rng, QuadOrder order, std::size_t g, long bound) {
  std::uniform_int_distribution<long> e(-bound, bound);
  OrderMatrix m(order, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) m.set(i, j, OrderElem(e(rng), order.has_generator() ? e(rng) : 0));
  return m;
}

}  // namespace

TEST(RationalRep, IdentityOverEveryOrder) {
  for (QuadOrder o : kOrders)
    for (std::size_t g = 1; g <= 3; ++g)
      EXPECT_EQ(rational_rep(OrderMatrix::identity(o, g)), IntMatrix::identity(2 * g));
}

TEST(RationalRep, GaussianUnit) {
  EXPECT_EQ(rational_rep(OrderMatrix(QuadOrder::gaussian(), {{{0, 1}}})), (IntMatrix{{0, -1}, {1, 0}}));
}

TEST(RationalRep, EisensteinGenerator) {
  EXPECT_EQ(rational_rep(OrderMatrix(QuadOrder::eisenstein(), {{{0, 1}}})), (IntMatrix{{0, -1}, {1, -1}}));
}

TEST(RationalRep, OmegaPartOverIntegersRejected) {
  try {
    OrderMatrix(QuadOrder::integers(), {{{0, 1}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderMismatch);
  }
}

TEST(RationalRep, MinimalPolynomialOfJ) {
  for (QuadOrder o : {QuadOrder::gaussian(), QuadOrder::eisenstein()})
    for (std::size_t g = 1; g <= 3; ++g) {
      const IntMatrix j = complex_structure(Torus(o, g));
      const IntMatrix id = IntMatrix::identity(2 * g);
      EXPECT_EQ(j * j, Integer(o.u()) * j + Integer(o.v()) * id);
    }
  EXPECT_THROW(complex_structure(Torus(QuadOrder::integers(), 2)), Error);
}

TEST(RationalRep, RingHomomorphismOnRandomPairs) {
  std::mt19937_64 rng(21);
  for (QuadOrder o : kOrders)
    for (int t = 0; t < 100; ++t) {
      const std::size_t g = 1 + t % 3;
      const OrderMatrix a = random_order_matrix(rng, o, g, 4);
      const OrderMatrix b = random_order_matrix(rng, o, g, 4);
      EXPECT_EQ(rational_rep(a * b), rational_rep(a) * rational_rep(b));
      EXPECT_EQ(rational_rep(a + b), rational_rep(a) + rational_rep(b));
    }
}

TEST(Conjugation, ExplicitBaseChangeIdentity) {
  std::mt19937_64 rng(22);
  for (QuadOrder o : {QuadOrder::gaussian(), QuadOrder::eisenstein()})
    for (int t = 0; t < 50; ++t) {
      const std::size_t g = 1 + t % 3;
      const OrderMatrix m = random_order_matrix(rng, o, g, 5);
      const IntMatrix c = conjugation_matrix(Torus(o, g));
      EXPECT_EQ(c * c, IntMatrix::identity(2 * g));
      EXPECT_EQ(rational_rep(conj(m)), c * rational_rep(m) * c);
      EXPECT_EQ(conj(conj(m)), m);
    }
}

TEST(Conjugation, ElementLevel) {
  const QuadOrder z3 = QuadOrder::eisenstein();
  // conj(w) = -1 - w and w * conj(w) = 1
  EXPECT_EQ(z3.conj(OrderElem(0, 1)), OrderElem(-1, -1));
  EXPECT_EQ(z3.norm(OrderElem(0, 1)), 1);
  EXPECT_EQ(QuadOrder::gaussian().norm(OrderElem(1, 1)), 2);
}

TEST(AnalyticRank, Examples) {
  const QuadOrder zi = QuadOrder::gaussian();
  EXPECT_EQ(analytic_rank_minus_id(OrderMatrix::identity(zi, 2)), 0u);
  const OrderMatrix swap(QuadOrder::integers(), {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}});
  EXPECT_EQ(analytic_rank_minus_id(swap), 1u);
  const OrderMatrix m(zi, {{{0, -1}, {-1, 1}}, {{0, 0}, {0, 1}}});
  EXPECT_EQ(analytic_rank_minus_id(m), 2u);
}

TEST(AnalyticRank, TwiceAnalyticRankIsRationalRank) {
  std::mt19937_64 rng(23);
  for (QuadOrder o : kOrders)
    for (int t = 0; t < 100; ++t) {
      const std::size_t g = 2 + t % 2;
      OrderMatrix m = random_order_matrix(rng, o, g, 3);
      if (t % 3 == 0) {
        // force a dependent row: row1 = x * row0
        const OrderElem x(1 + t % 2, o.has_generator() ? 1 : 0);
        for (std::size_t j = 0; j < g; ++j) m.set(1, j, o.mul(x, m(0, j)));
      }
      EXPECT_EQ(2 * analytic_rank(m), rank_over_field(rational_rep(m)));
      const OrderMatrix shifted = m - OrderMatrix::identity(o, g);
      EXPECT_EQ(2 * analytic_rank_minus_id(m), rank_over_field(rational_rep(shifted)));
    }
}

TEST(Sublattices, StabilityAndAdaptedBasis) {
  const Torus t(QuadOrder::gaussian(), 2);
  // span of (1,1) over Z[i]: lattice vectors (1,1,0,0) and i*(1,1) = (0,0,1,1)
  const IntMatrix diag{{1, 0}, {1, 0}, {0, 1}, {0, 1}};
  EXPECT_TRUE(is_stable(t, diag));
  EXPECT_FALSE(is_stable(t, IntMatrix{{1}, {1}, {0}, {0}}));
  EXPECT_EQ(stable_hull(t, IntMatrix{{1}, {1}, {0}, {0}}).cols(), 2u);
  const IntMatrix a = adapted_basis(t, diag);
  EXPECT_EQ(a.cols(), 2u);
  // second column is w times the first
  EXPECT_EQ(a.column(1), complex_structure(t) * a.column(0));
  try {
    adapted_basis(t, IntMatrix{{2, 0}, {2, 0}, {0, 2}, {0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSaturated);
  }
}

TEST(Sublattices, ProductIndexIsAPermutation) {
  const auto a = product_index(2, 3, false);
  const auto b = product_index(2, 3, true);
  std::vector<std::size_t> all(a);
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k) EXPECT_EQ(all[k], k);
  EXPECT_EQ(a, (std::vector<std::size_t>{0, 1, 5, 6}));
}
