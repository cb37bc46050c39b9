#include <gtest/gtest.h>

#include <functional>

#include "ppav/error.hpp"
#include "ppav/jacobian_feasibility.hpp"

using namespace ppav;

namespace {

// Smallest number of branch points realizing r, by exhaustive search over
// multisets of divisors d >= 2 of n; -1 if none with at most max_points.
long brute_min_points(long n, long r, long max_points) {
  std::vector<long> contrib;
  for (long d = 2; d <= n; ++d)
    if (n % d == 0) contrib.push_back(n / d * (d - 1));
  long best = -1;
  std::function<void(std::size_t, long, long)> rec = [&](std::size_t from, long left, long used) {
    if (left == 0) {
      if (best < 0 || used < best) best = used;
      return;
    }
    if (used == max_points) return;
    for (std::size_t k = from; k < contrib.size(); ++k)
      if (contrib[k] <= left) rec(k, left - contrib[k], used + 1);
  };
  rec(0, r, 0);
  return best;
}

}  // namespace

TEST(Residual, Examples) {
  EXPECT_EQ(rh_residual(2, 1, 2).value, 2);
  EXPECT_EQ(rh_residual(3, 2, 2).value, 0);
  EXPECT_EQ(rh_residual(3, 2, 3).value, -2);
  EXPECT_FALSE(rh_residual(3, 2, 3).feasible());
  EXPECT_EQ(rh_residual(3, 1, 4).value, 4);
  EXPECT_EQ(rh_residual(2, 0, 2).value, 6);
  EXPECT_THROW(rh_residual(-1, 0, 2), Error);
  EXPECT_THROW(rh_residual(2, 1, 1), Error);
}

TEST(Residual, ParityAndFormula) {
  for (long g = 0; g <= 8; ++g)
    for (long gp = 0; gp <= g; ++gp)
      for (long n = 2; n <= 12; ++n) {
        const long r = rh_residual(g, gp, n).value;
        EXPECT_EQ(r % 2, 0);
        EXPECT_EQ(2 * g - 2, n * (2 * gp - 2) + r);
      }
}

TEST(Ramification, SumAndValidation) {
  EXPECT_EQ(ramification_sum(2, {2, 2}), 2);
  EXPECT_EQ(ramification_sum(6, {2, 3, 6}), 3 + 4 + 5);
  EXPECT_THROW(ramification_sum(6, {4}), Error);
  EXPECT_THROW(ramification_sum(6, {1}), Error);
  EXPECT_TRUE(is_consistent({2, 1, 2, {2, 2}}));
  EXPECT_FALSE(is_consistent({2, 1, 2, {2}}));
  EXPECT_TRUE(is_consistent({3, 2, 2, {}}));
}

TEST(Ramification, RealizationMatchesExhaustiveSearch) {
  for (long n = 2; n <= 12; ++n)
    for (long r = 0; r <= 30; ++r) {
      const auto got = realize_ramification(n, r, 8);
      const long best = brute_min_points(n, r, 8);
      if (best < 0) {
        EXPECT_FALSE(got.has_value()) << n << " " << r;
        continue;
      }
      ASSERT_TRUE(got.has_value()) << n << " " << r;
      EXPECT_EQ(static_cast<long>(got->size()), best);
      EXPECT_EQ(ramification_sum(n, *got), r);
    }
  // every point of an order 3 cover contributes 2
  EXPECT_FALSE(realize_ramification(3, 3).has_value());
  EXPECT_EQ(realize_ramification(2, 3)->size(), 3u);
  EXPECT_FALSE(realize_ramification(2, 10, 4).has_value());
}

TEST(GenusBound, MaximumIsThree) {
  const GenusBound b = pseudoreflection_genus_bound();
  EXPECT_EQ(b.g_max, 3);
  // independent: g' = g - 1 with some n >= 2 needs 2g - 2 >= 2 (2g - 4)
  long expected = 0;
  for (long g = 2; g <= kMaxScanGenus; ++g)
    if (2 * g - 2 >= 2 * (2 * g - 4)) expected = g;
  EXPECT_EQ(b.g_max, expected);
  const std::vector<std::pair<long, long>> cases{{3, 2}, {3, 1}, {3, 0}, {2, 1}, {2, 0}};
  EXPECT_EQ(b.cases, cases);
}

TEST(Case31, EveryBranchEliminated) {
  const Case31Report r = case31_contradictions();
  ASSERT_EQ(r.branches.size(), 3u);
  EXPECT_TRUE(r.all_eliminated());
  EXPECT_EQ(r.branches[0].group, "(Z/2)^2");
  EXPECT_EQ(r.branches[0].lhs, 16);
  EXPECT_EQ(r.branches[0].rhs, 4);
  for (std::size_t k = 1; k < 3; ++k) {
    EXPECT_EQ(r.branches[k].group, "S3");
    EXPECT_EQ(r.branches[k].lhs, -2);
  }
  // the residuals behind the S3 branches
  EXPECT_EQ(rh_residual(0, 1, 2).value, -2);
  EXPECT_EQ(rh_residual(3, 2, 3).value, -2);
  EXPECT_FALSE(r.assumptions.empty());
}

TEST(Cases, SurvivorsAreTheDoubleCovers) {
  const JacobianReport rep = jacobian_cases();
  EXPECT_EQ(rep.cases.size(), 6u);
  const auto s = rep.survivors();
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].g, 3);
  EXPECT_EQ(s[0].g_prime, 2);
  EXPECT_EQ(s[0].group_order, 2);
  EXPECT_EQ(s[0].residual, 0);
  EXPECT_EQ(s[1].g, 2);
  EXPECT_EQ(s[1].g_prime, 1);
  EXPECT_EQ(s[1].group_order, 2);
  EXPECT_EQ(s[1].residual, 2);
  for (const auto& row : rep.cases) {
    EXPECT_FALSE(row.reason.empty());
    if (row.g_prime == 0) EXPECT_FALSE(row.survives);
  }
}
