#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ppav/polarizations.hpp"
#include "ppav/tori.hpp"

namespace ppav {

/// A finite group of automorphisms of E^g fixing the origin, stored by its
/// analytic representation. Elements are ordered by (word length in the
/// generators, lexicographic entries); element 0 is the identity.
class MatrixGroup {
 public:
  MatrixGroup(Torus torus, std::vector<OrderMatrix> generators, std::vector<OrderMatrix> elements);

  const Torus& torus() const noexcept { return torus_; }
  const std::vector<OrderMatrix>& generators() const noexcept { return generators_; }
  const std::vector<OrderMatrix>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(const OrderMatrix& m) const;

 private:
  Torus torus_;
  std::vector<OrderMatrix> generators_;
  std::vector<OrderMatrix> elements_;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Breadth-first product closure. Throws NotInvertible for a non-unit
/// generator and CapExceeded once more than `cap` elements appear.
MatrixGroup closure(const Torus& torus, std::span<const OrderMatrix> generators,
                    std::size_t cap = kDefaultClosureCap);

/// rho(g)^t form rho(g) == form for every element. Throws DimensionMismatch
/// if the tori differ.
bool invariant_form(const MatrixGroup& group, const PolarizedTorus& p);
bool invariant_form(const MatrixGroup& group, const IntMatrix& form);

struct ReflectionSummary {
  bool generated = false;
  std::size_t pseudoreflections = 0;
};

/// Pseudoreflections are the elements with analytic rank(g - I) == 1.
ReflectionSummary pseudoreflection_generated(const MatrixGroup& group);

/// Saturated basis of the sublattice fixed by the whole group.
IntMatrix fixed_sublattice(const MatrixGroup& group);
std::size_t fixed_dim(const MatrixGroup& group);

struct NsFixed {
  std::size_t rank = 0;
  std::vector<IntMatrix> basis;
};

/// Integral basis of the G-invariant compatible alternating forms. A rank
/// one generator is primitive and sign-normalized to be positive.
NsFixed ns_fixed(const MatrixGroup& group);

struct AveragedForm {
  IntMatrix primitive;
  Integer multiplier;
};

/// sum_g rho(g)^t form rho(g) = multiplier * primitive, primitive of content 1.
AveragedForm average_pullback(const MatrixGroup& group, const PolarizedTorus& p);

/// True iff rho(g) x == x mod Z^{2g} for all g and all x in K. Throws
/// NotInvariant if the group does not preserve K's form.
bool action_on_kernel(const MatrixGroup& group, const FiniteSymplecticGroup& kernel);

struct GroupWithPolarization {
  MatrixGroup group;
  PolarizedTorus polarization;
};

/// Which primitive root of unity generates C in example (a).
enum class RootChoice { Standard, Conjugate };

/// C^g x| S_g on E^g with C cyclic of order m in {2, 3, 4, 6}; paired with Theta_g.
/// m = 2 uses the generic curve, m = 4 Z[i], m = 3, 6 Z[w].
GroupWithPolarization example_a(std::size_t g, int m, RootChoice root = RootChoice::Standard);

/// S_{g+1} acting on {x_1 + ... + x_{g+1} = 0} written in x_1..x_g; paired with Xi_g.
GroupWithPolarization example_b(std::size_t g);
/// Generators of example (b): adjacent transpositions in the x_1..x_g coordinates.
std::vector<OrderMatrix> example_b_generators(std::size_t g);

/// The order 16 subgroup of GL_2(Z[i]) with its invariant primitive polarization.
GroupWithPolarization example_c();
std::vector<OrderMatrix> example_c_generators();

}  // namespace ppav
