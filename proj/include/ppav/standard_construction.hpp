#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppav/group_actions.hpp"
#include "ppav/polarizations.hpp"

namespace ppav {

/// Invariant factors (d_1 | ... | d_s) of the sum of the Z/m_i, ones dropped.
std::vector<Integer> elementary_divisors(const std::vector<Integer>& ms);

/// Pairs (x_j, y_j) with <x_j, y_k> = delta_jk / d_j, <x_j, x_k> = <y_j, y_k> = 0
/// and ord(x_j) = ord(y_j) = d_j; orders ascending in divisibility order.
struct SymplecticBasis {
  std::vector<RatVector> x;
  std::vector<RatVector> y;
  std::vector<Integer> orders;

  std::size_t size() const noexcept { return orders.size(); }
};

/// Greedy reduction: take an element of maximal order, pair it with an
/// element of exact pairing 1/d, split off the orthogonal complement and
/// repeat. Throws DegeneratePairing if the pairing is degenerate on K.
SymplecticBasis symplectic_basis(const FiniteSymplecticGroup& k);

/// (X x Y) / Gamma with X the box product of the Xi_{g_i}, Y generic of
/// block form diag(1, ..., 1, d_1, ..., d_s) and Gamma the graph of the
/// factor-exchanging isomorphism K(Xi_X) -> K(Xi_Y). All lattice data lives
/// in Z^{2N}, N = dim X + dim Y, with coordinates ordered as in box_product.
struct GluedPPAV {
  std::vector<std::size_t> factors;
  std::size_t x_dim = 0;
  std::size_t y_dim = 0;
  std::vector<Integer> divisors;
  /// Columns: HNF basis of the overlattice.
  RatMatrix overlattice;
  /// P^t (M_X (+) M_Y) P; principal.
  IntMatrix form;
  /// rho(h) on Z^{2N} for the generators h of prod S_{g_i + 1}.
  std::vector<IntMatrix> ambient_actions;
  /// P^{-1} rho(h) P.
  std::vector<IntMatrix> actions;
  /// Generators of Gamma in Q^{2N}.
  std::vector<RatVector> graph;

  friend bool operator==(const GluedPPAV&, const GluedPPAV&) = default;
};

/// Throws TypeMismatch if y_dim < s, IntegralityFailure if the pulled back
/// form is not integral, InvalidArgument for an empty or zero factor list.
GluedPPAV build_standard(const std::vector<std::size_t>& factor_genera, std::size_t y_dim);

/// Unpolarized inputs of the construction: X (+) Y on Z^{2N} with its form.
PolarizedTorus glued_ambient(const GluedPPAV& a);

/// The overlattice written with a common denominator: P = num / den.
std::pair<IntMatrix, Integer> overlattice_fraction(const GluedPPAV& a);
/// Inverse of overlattice_fraction, rebuilding the derived fields
/// (ambient actions, graph generators) from P, the form and the actions.
GluedPPAV glued_from_parts(std::vector<std::size_t> factors, std::size_t y_dim,
                           const IntMatrix& overlattice_num, const Integer& overlattice_den,
                           IntMatrix form, std::vector<IntMatrix> actions);

struct GluedCheck {
  ErrorKind kind;
  bool passed = false;
};

struct GluedReport {
  /// In evaluation order; the first failing entry is the reported one.
  std::vector<GluedCheck> checks;
  std::optional<ErrorKind> first_failure;
  Integer pfaffian = 0;
  Integer index = 0;
  std::size_t fixed_dim = 0;

  bool ok() const noexcept { return !first_failure.has_value(); }
};

/// Re-derives every invariant of a GluedPPAV from the stored data.
GluedReport verify_glued(const GluedPPAV& a);

struct Decomposition {
  IntMatrix y_lattice;  // overlattice coordinates
  IntMatrix x_lattice;
  std::vector<Integer> y_type;
  std::vector<Integer> x_type;
  /// |overlattice / (X (+) Y)|
  Integer quotient_order;
};

/// Y = fixed sublattice of the action, X = its complement under the form.
/// Throws the first failure of verify_glued, or IndexMismatch if the quotient
/// is not the graph of an isomorphism of the two kernel groups.
Decomposition decompose_glued(const GluedPPAV& a);

}  // namespace ppav
