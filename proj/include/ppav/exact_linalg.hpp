#pragma once

#include <cstddef>
#include <vector>

#include "ppav/matrix.hpp"

namespace ppav {

/// Smith normal form with transforms: U * M * V == D.
///
/// U and V are unimodular, D is diagonal with nonnegative entries
/// d_1 | d_2 | ... . Pivots are chosen as the smallest nonzero absolute value
/// in the active submatrix, ties broken by row-major position, so the
/// transforms are deterministic as well as D.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

SmithForm snf(const IntMatrix& m);

/// Column-style Hermite normal form of the Z-span of the columns of m.
///
/// Returns an n x r matrix (r = rank) in column echelon form: the pivot of
/// column j sits strictly below the pivot of column j-1, pivots are positive,
/// and entries left of a pivot in its row lie in [0, pivot). For full rank
/// input the result is lower triangular. Two generating sets of the same
/// lattice give identical output.
IntMatrix column_hnf(const IntMatrix& m);

/// Canonical basis of the lattice spanned by rational columns.
/// Throws RankDeficient unless the columns span Q^n.
RatMatrix hnf_basis(const RatMatrix& columns);

Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// Pfaffian of an alternating integer matrix; Pf(M)^2 == det(M).
/// Throws NotAlternating unless M is square, even-sized and M == -M^t
/// with zero diagonal.
Integer pfaffian(const IntMatrix& m);

bool is_alternating(const IntMatrix& m);
bool is_symmetric(const RatMatrix& m);

std::size_t rank_over_field(const RatMatrix& m);
std::size_t rank_over_field(const IntMatrix& m);

/// Integral basis (column HNF) of {x in Z^n : M x = 0}. May have zero columns.
IntMatrix kernel_basis(const IntMatrix& m);

/// Basis of span_Q(columns) ∩ Z^n for an arbitrary generating set.
IntMatrix saturated_span(const IntMatrix& columns);

/// Saturation of a full-column-rank lattice basis. Throws RankDeficient.
IntMatrix saturate(const IntMatrix& basis);

bool is_saturated(const IntMatrix& basis);

/// Throws Degenerate if singular.
RatMatrix inverse(const RatMatrix& m);

/// Exact test by symmetric elimination; requires a symmetric matrix.
bool is_positive_definite(const RatMatrix& m);

/// Invariant-factor decomposition of the finite group
/// (Z^n + span(generators)) / Z^n, with generators rational vectors.
/// Returns basis elements reduced into [0,1)^n paired with their orders,
/// orders ascending in divisibility order, trivial factors dropped.
struct CyclicFactor {
  RatVector generator;
  Integer order;
};
std::vector<CyclicFactor> torsion_structure(const std::vector<RatVector>& generators,
                                            std::size_t n);

/// Reduce every coordinate into [0, 1).
RatVector reduce_mod_one(const RatVector& v);
Rational frac(const Rational& x);

}  // namespace ppav
