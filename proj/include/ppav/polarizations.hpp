#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ppav/exact_linalg.hpp"
#include "ppav/tori.hpp"

namespace ppav {

/// A value of Q/Z stored as a reduced rational in [0, 1).
class QmodZ {
 public:
  QmodZ() = default;
  explicit QmodZ(const Rational& x) : value_(frac(x)) {}

  const Rational& value() const noexcept { return value_; }
  bool is_zero() const { return value_ == 0; }
  /// Order of the value in Q/Z (its reduced denominator).
  Integer order() const { return value_.get_den(); }

  friend QmodZ operator+(const QmodZ& a, const QmodZ& b) { return QmodZ(a.value_ + b.value_); }
  friend QmodZ operator-(const QmodZ& a) { return QmodZ(-a.value_); }
  friend bool operator==(const QmodZ& a, const QmodZ& b) { return a.value_ == b.value_; }

 private:
  Rational value_ = 0;
};

/// A complex torus with a polarization, given as the integral alternating
/// form E = c_1 on the lattice (basis e_1..e_g, w e_1..w e_g).
///
/// Construction validates the form: alternating, nondegenerate, compatible
/// with the complex structure and positive. Positivity means the symmetric
/// matrix form * J_w - Re(w) * form is positive definite (for the generic
/// kind: form = [[0, B], [-B, 0]] with B symmetric positive definite).
class PolarizedTorus {
 public:
  PolarizedTorus(Torus torus, IntMatrix form);

  const Torus& torus() const noexcept { return torus_; }
  const IntMatrix& form() const noexcept { return form_; }
  std::size_t dim() const noexcept { return torus_.g; }
  QuadOrder order() const noexcept { return torus_.order; }

  friend bool operator==(const PolarizedTorus&, const PolarizedTorus&) = default;

 private:
  Torus torus_;
  IntMatrix form_;
};

/// Checks used by the constructor, exposed for forms that are not (yet)
/// polarizations, e.g. Neron-Severi basis elements.
bool is_compatible_form(const Torus& torus, const IntMatrix& form);
/// Symmetric matrix whose positive definiteness is the positivity condition,
/// scaled by 2 to stay integral: 2 * form * J - u * form (generic kind: B (+) B).
IntMatrix positivity_matrix(const Torus& torus, const IntMatrix& form);
bool is_positive_form(const Torus& torus, const IntMatrix& form);

/// Theta_g: sum of pullbacks of the origin; block B = I.
PolarizedTorus theta_g(std::size_t g, QuadOrder order = QuadOrder::integers());
/// Xi_g = Theta_g + ker(sum); block B = I + A with A the all-ones matrix.
PolarizedTorus xi_g(std::size_t g);
/// [[0, B], [-B, 0]] on the generic torus; B symmetric positive definite.
PolarizedTorus from_symmetric_block(const IntMatrix& b);

/// Elementary divisors (d_1 | ... | d_g) of an alternating form.
/// Throws Degenerate if det == 0.
std::vector<Integer> alternating_type(const IntMatrix& form);
std::vector<Integer> polarization_type(const PolarizedTorus& p);

/// K(Xi) = {x in Q^{2g} : form x in Z^{2g}} / Z^{2g} with the pairing
/// <x, y> = x^t form y mod 1.
class FiniteSymplecticGroup {
 public:
  FiniteSymplecticGroup(IntMatrix form, std::vector<RatVector> generators,
                        std::vector<Integer> orders);

  const IntMatrix& form() const noexcept { return form_; }
  std::size_t lattice_rank() const noexcept { return form_.rows(); }
  const std::vector<RatVector>& generators() const noexcept { return generators_; }
  const std::vector<Integer>& orders() const noexcept { return orders_; }
  Integer order() const;

  bool contains(const RatVector& x) const;
  /// Throws NotMember if either argument is outside the group.
  QmodZ pairing(const RatVector& x, const RatVector& y) const;
  /// Pairing values between generators.
  std::vector<std::vector<QmodZ>> pairing_table() const;
  /// All elements, reduced into [0,1)^{2g}; feasible for small groups only.
  std::vector<RatVector> elements() const;
  /// Order of an element of the ambient (Q/Z)^{2g}.
  static Integer element_order(const RatVector& x);

 private:
  IntMatrix form_;
  std::vector<RatVector> generators_;
  std::vector<Integer> orders_;
};

FiniteSymplecticGroup kernel_group(const PolarizedTorus& p);
/// Same construction for any nondegenerate alternating form.
FiniteSymplecticGroup kernel_group_of_form(const IntMatrix& form);

QmodZ weil_pairing(const FiniteSymplecticGroup& k, const RatVector& x, const RatVector& y);

PolarizedTorus scale(const PolarizedTorus& p, const Integer& m);
/// Product polarization on X x Y, coordinates ordered (e^X, e^Y, w e^X, w e^Y).
/// Throws OrderMismatch if the orders differ.
PolarizedTorus box_product(const PolarizedTorus& p, const PolarizedTorus& q);
/// Embeds a vector of the first (second) factor into the product lattice.
RatVector embed_in_product(const RatVector& x, std::size_t g1, std::size_t g2, bool second);

/// g! * |Pf(form)|, cross-checked against g! * prod(type).
Integer self_intersection(const PolarizedTorus& p);

/// Restriction of the polarization to a saturated stable sublattice, written
/// in the adapted basis of the sublattice.
PolarizedTorus restrict_to(const PolarizedTorus& p, const IntMatrix& sublattice);
/// {w : S^t form w = 0}: saturated, stable, of complementary rank.
IntMatrix complement(const PolarizedTorus& p, const IntMatrix& sublattice);

/// Bounded search for abelian subvarieties of (E^n, Xi_n) on which Xi_n
/// restricts to a principal polarization.
struct SublatticeType {
  IntMatrix basis;  // n x k basis L of the sublattice L (x) O of Z^n (x) O
  std::vector<Integer> type;
};

struct Prop39Report {
  std::size_t n = 0;
  long height = 0;
  std::size_t vectors_scanned = 0;
  std::vector<SublatticeType> entries;
  bool principal_found = false;
};

/// Enumerates saturations of spans of k primitive vectors with entries in
/// [-height, height], k = 1..n, deduplicated by HNF, and records the type of
/// the restricted Xi_n. Throws BudgetExceeded for n > 4, height > 5, or when
/// the number of saturations would exceed `work_cap`.
Prop39Report prop39_scan(std::size_t n, long height, std::size_t work_cap = 2'000'000);

}  // namespace ppav
