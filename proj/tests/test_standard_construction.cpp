#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ppav/checks.hpp"
#include "ppav/standard_construction.hpp"

using namespace ppav;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

std::vector<Integer> to_integers(const std::vector<long>& xs) { return std::vector<Integer>(xs.begin(), xs.end()); }

const std::vector<std::vector<std::size_t>> kGrid{{1}, {2}, {1, 1}, {2, 3}};

std::size_t divisor_count(const std::vector<std::size_t>& factors) {
  std::vector<Integer> ms;
  for (std::size_t g : factors) ms.emplace_back(static_cast<unsigned long>(g + 1));
  return elementary_divisors(ms).size();
}

}  // namespace

TEST(ElementaryDivisors, Examples) {
  EXPECT_EQ(elementary_divisors(to_integers({2, 3})), to_integers({6}));
  EXPECT_EQ(elementary_divisors(to_integers({2, 2})), to_integers({2, 2}));
  EXPECT_EQ(elementary_divisors(to_integers({3, 4, 6})), to_integers({6, 12}));
  EXPECT_TRUE(elementary_divisors(to_integers({1, 1})).empty());
}

TEST(ElementaryDivisors, MatchPrimaryDecomposition) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> e(1, 30);
  for (int t = 0; t < 100; ++t) {
    const std::vector<long> ms{e(rng), e(rng), e(rng), e(rng)};
    std::vector<long> expected;
    for (long d : oracle::invariant_factors(ms))
      if (d != 1) expected.push_back(d);
    EXPECT_EQ(elementary_divisors(to_integers(ms)), to_integers(expected));
  }
}

TEST(SymplecticBasis, SmallKernels) {
  EXPECT_EQ(symplectic_basis(kernel_group(theta_g(2))).size(), 0u);
  const SymplecticBasis b1 = symplectic_basis(kernel_group(xi_g(1)));
  EXPECT_EQ(b1.orders, to_integers({2}));
  const SymplecticBasis b2 = symplectic_basis(kernel_group(xi_g(2)));
  EXPECT_EQ(b2.orders, to_integers({3}));
  const SymplecticBasis b4 = symplectic_basis(kernel_group(scale(theta_g(2), 2)));
  EXPECT_EQ(b4.orders, to_integers({2, 2}));
}

TEST(SymplecticBasis, InvariantsOnRandomKernels) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 40; ++t) {
    const FiniteSymplecticGroup k = kernel_group(from_symmetric_block(random_positive_block(rng, 1 + t % 3, 4)));
    const SymplecticBasis b = symplectic_basis(k);
    Integer prod = 1;
    std::vector<RatVector> all;
    for (std::size_t j = 0; j < b.size(); ++j) {
      EXPECT_EQ(FiniteSymplecticGroup::element_order(b.x[j]), b.orders[j]);
      EXPECT_EQ(FiniteSymplecticGroup::element_order(b.y[j]), b.orders[j]);
      if (j + 1 < b.size()) EXPECT_EQ(b.orders[j + 1] % b.orders[j], 0);
      for (std::size_t l = 0; l < b.size(); ++l) {
        EXPECT_TRUE(k.pairing(b.x[j], b.x[l]).is_zero());
        EXPECT_TRUE(k.pairing(b.y[j], b.y[l]).is_zero());
        Rational expected = j == l ? Rational(1) / Rational(b.orders[j]) : Rational(0);
        EXPECT_EQ(k.pairing(b.x[j], b.y[l]), QmodZ(expected));
      }
      prod *= b.orders[j] * b.orders[j];
      all.push_back(b.x[j]);
      all.push_back(b.y[j]);
    }
    EXPECT_EQ(prod, k.order());
    if (k.order() <= 400)
      EXPECT_EQ(oracle::subgroup(all, k.lattice_rank()), oracle::subgroup(k.generators(), k.lattice_rank()));
  }
}

TEST(SymplecticBasis, DegeneratePairing) {
  // an isotropic cyclic subgroup of K(2 Theta_1)
  const FiniteSymplecticGroup iso(Integer(2) * theta_g(1).form(), {RatVector{Rational(1, 2), 0}},
                                  to_integers({2}));
  EXPECT_EQ(kind_of([&] { symplectic_basis(iso); }), ErrorKind::DegeneratePairing);
}

TEST(Build, GridIsPrincipalAndConsistent) {
  for (const auto& factors : kGrid) {
    const std::size_t ydim = divisor_count(factors);
    const GluedPPAV a = build_standard(factors, ydim);
    const GluedReport r = verify_glued(a);
    EXPECT_TRUE(r.ok()) << to_string(*r.first_failure);
    EXPECT_EQ(abs(r.pfaffian), 1);
    EXPECT_EQ(abs(pfaffian(a.form)), 1);
    EXPECT_EQ(r.fixed_dim, ydim);

    Integer kx = 1;
    for (std::size_t g : factors) kx *= static_cast<unsigned long>((g + 1) * (g + 1));
    const std::size_t n = a.overlattice.rows();
    const auto gamma = oracle::subgroup(a.graph, n);
    EXPECT_EQ(Integer(static_cast<unsigned long>(gamma.size())), kx);
    EXPECT_EQ(r.index, kx);
    EXPECT_EQ(abs(determinant(a.overlattice)), Rational(1) / Rational(kx));
  }
}

TEST(Build, GraphIsIsotropicAndFixedPointwise) {
  for (const auto& factors : kGrid) {
    const GluedPPAV a = build_standard(factors, divisor_count(factors));
    const PolarizedTorus amb = glued_ambient(a);
    const auto gamma = oracle::subgroup(a.graph, a.overlattice.rows());
    for (const auto& x : a.graph)
      for (const auto& y : a.graph) {
        Rational v = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
          for (std::size_t j = 0; j < y.size(); ++j) v += x[i] * Rational(amb.form()(i, j)) * y[j];
        EXPECT_EQ(frac(v), 0);
      }
    for (const auto& r : a.ambient_actions)
      for (const auto& x : gamma) {
        RatVector y = to_rational(r) * x;
        EXPECT_EQ(oracle::mod_one(y), x);
      }
  }
}

TEST(Build, DecompositionTypes) {
  for (const auto& factors : kGrid) {
    const std::size_t ydim = divisor_count(factors);
    const GluedPPAV a = build_standard(factors, ydim);
    const Decomposition d = decompose_glued(a);
    std::vector<Integer> y_expected(ydim - a.divisors.size(), Integer(1));
    y_expected.insert(y_expected.end(), a.divisors.begin(), a.divisors.end());
    EXPECT_EQ(d.y_type, y_expected);
    std::vector<Integer> x_orders;
    for (std::size_t g : factors) {
      x_orders.insert(x_orders.end(), g - 1, Integer(1));
      x_orders.emplace_back(static_cast<unsigned long>(g + 1));
    }
    EXPECT_EQ(primary_parts(d.x_type), primary_parts(x_orders));
    Integer px = 1;
    for (const auto& t : d.x_type) px *= t;
    EXPECT_EQ(d.quotient_order, px * px);
  }
  EXPECT_EQ(decompose_glued(build_standard({2, 3}, 1)).x_type, to_integers({1, 1, 1, 1, 12}));
}

TEST(Build, LargerYKeepsPrincipality) {
  const GluedPPAV a = build_standard({1}, 3);
  const GluedReport r = verify_glued(a);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.fixed_dim, 3u);
  EXPECT_EQ(decompose_glued(a).y_type, to_integers({1, 1, 2}));
}

TEST(Build, Errors) {
  EXPECT_EQ(kind_of([] { build_standard({2, 3}, 0); }), ErrorKind::TypeMismatch);
  EXPECT_EQ(kind_of([] { build_standard({1, 1}, 1); }), ErrorKind::TypeMismatch);
  EXPECT_EQ(kind_of([] { build_standard({}, 1); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { build_standard({0}, 1); }), ErrorKind::InvalidArgument);
}

TEST(Verify, PerturbationsAreReported) {
  for (const auto& factors : kGrid) {
    const GluedPPAV a = build_standard(factors, divisor_count(factors));

    GluedPPAV sym = a;
    sym.form(0, 1) += 1;
    EXPECT_EQ(verify_glued(sym).first_failure, ErrorKind::NotAlternating);

    GluedPPAV doubled = a;
    doubled.form = Integer(2) * a.form;
    EXPECT_EQ(verify_glued(doubled).first_failure, ErrorKind::IntegralityFailure);

    GluedPPAV trivial_action = a;
    for (auto& m : trivial_action.actions) m = IntMatrix::identity(m.rows());
    EXPECT_FALSE(verify_glued(trivial_action).ok());

    EXPECT_EQ(kind_of([&] { decompose_glued(sym); }), ErrorKind::NotAlternating);
  }
}

TEST(Parts, RoundTrip) {
  for (const auto& factors : kGrid) {
    const GluedPPAV a = build_standard(factors, divisor_count(factors));
    const auto [num, den] = overlattice_fraction(a);
    GluedPPAV b = glued_from_parts(a.factors, a.y_dim, num, den, a.form, a.actions);
    // the graph comes back as another generating set of the same subgroup
    const std::size_t n = a.overlattice.rows();
    EXPECT_EQ(oracle::subgroup(b.graph, n), oracle::subgroup(a.graph, n));
    b.graph = a.graph;
    EXPECT_EQ(b, a);
    EXPECT_TRUE(verify_glued(b).ok());
  }
}
