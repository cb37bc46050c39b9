#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppav/matrix.hpp"

namespace ppav {

enum class OrderKind { RationalIntegers, Gaussian, Eisenstein };

std::string_view to_string(OrderKind kind) noexcept;
OrderKind order_kind_from_string(std::string_view name);

/// An element a + b*w of a quadratic order with generator w.
struct OrderElem {
  Integer a;
  Integer b;

  OrderElem() = default;
  OrderElem(long a_, long b_ = 0) : a(a_), b(b_) {}
  OrderElem(Integer a_, Integer b_) : a(std::move(a_)), b(std::move(b_)) {}

  friend bool operator==(const OrderElem&, const OrderElem&) = default;
  friend bool operator<(const OrderElem& x, const OrderElem& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
};

/// One of Z, Z[i], Z[w] with w^2 = u*w + v.
///
/// For Z the generator is absent and (u, v) = (0, 0); elements must have b = 0.
/// Gaussian: (u, v) = (0, -1). Eisenstein: (u, v) = (-1, -1), w = e^{2 pi i/3}.
class QuadOrder {
 public:
  constexpr QuadOrder() = default;
  constexpr explicit QuadOrder(OrderKind kind) : kind_(kind) {}

  static constexpr QuadOrder integers() { return QuadOrder(OrderKind::RationalIntegers); }
  static constexpr QuadOrder gaussian() { return QuadOrder(OrderKind::Gaussian); }
  static constexpr QuadOrder eisenstein() { return QuadOrder(OrderKind::Eisenstein); }

  constexpr OrderKind kind() const noexcept { return kind_; }
  constexpr bool has_generator() const noexcept { return kind_ != OrderKind::RationalIntegers; }
  constexpr long u() const noexcept { return kind_ == OrderKind::Eisenstein ? -1 : 0; }
  constexpr long v() const noexcept { return kind_ == OrderKind::RationalIntegers ? 0 : -1; }
  /// N(w) = -v; positive for the CM kinds.
  constexpr long generator_norm() const noexcept { return -v(); }

  bool contains(const OrderElem& x) const noexcept { return has_generator() || x.b == 0; }

  OrderElem add(const OrderElem& x, const OrderElem& y) const;
  OrderElem sub(const OrderElem& x, const OrderElem& y) const;
  OrderElem mul(const OrderElem& x, const OrderElem& y) const;
  /// The nontrivial automorphism w -> conj(w) = u - w (identity on Z).
  OrderElem conj(const OrderElem& x) const;
  /// x * conj(x) as an integer.
  Integer norm(const OrderElem& x) const;

  friend constexpr bool operator==(QuadOrder a, QuadOrder b) { return a.kind_ == b.kind_; }

 private:
  OrderKind kind_ = OrderKind::RationalIntegers;
};

/// Square g x g matrix over a quadratic order: the analytic representation
/// of an endomorphism of E^g.
class OrderMatrix {
 public:
  OrderMatrix() = default;
  OrderMatrix(QuadOrder order, std::size_t g);
  /// Throws OrderMismatch if an entry does not lie in the order.
  OrderMatrix(QuadOrder order, std::size_t g, std::vector<OrderElem> entries);
  OrderMatrix(QuadOrder order,
              std::initializer_list<std::initializer_list<std::pair<long, long>>> rows);

  static OrderMatrix identity(QuadOrder order, std::size_t g);
  static OrderMatrix scalar(QuadOrder order, std::size_t g, const OrderElem& x);
  /// Integer matrix viewed over the order.
  static OrderMatrix from_integer(QuadOrder order, const IntMatrix& m);

  QuadOrder order() const noexcept { return order_; }
  std::size_t g() const noexcept { return g_; }
  const OrderElem& operator()(std::size_t i, std::size_t j) const { return entries_[i * g_ + j]; }
  void set(std::size_t i, std::size_t j, OrderElem x);
  const std::vector<OrderElem>& entries() const noexcept { return entries_; }

  bool is_identity() const;

  friend OrderMatrix operator*(const OrderMatrix& x, const OrderMatrix& y);
  friend OrderMatrix operator+(const OrderMatrix& x, const OrderMatrix& y);
  friend OrderMatrix operator-(const OrderMatrix& x, const OrderMatrix& y);
  friend bool operator==(const OrderMatrix& x, const OrderMatrix& y) {
    return x.order_ == y.order_ && x.g_ == y.g_ && x.entries_ == y.entries_;
  }
  friend bool operator<(const OrderMatrix& x, const OrderMatrix& y);

 private:
  QuadOrder order_;
  std::size_t g_ = 0;
  std::vector<OrderElem> entries_;
};

/// E^g over the given order. Lattice basis e_1..e_g, w e_1..w e_g (for Z the
/// second block is tau e_1..tau e_g with tau a symbolic generic modulus).
struct Torus {
  QuadOrder order;
  std::size_t g = 1;

  Torus() = default;
  Torus(QuadOrder order_, std::size_t g_);

  std::size_t lattice_rank() const noexcept { return 2 * g; }
  friend bool operator==(const Torus&, const Torus&) = default;
};

/// 2g x 2g integer matrix of m acting on the lattice basis.
IntMatrix rational_rep(const OrderMatrix& m);

OrderMatrix conj(const OrderMatrix& m);

/// Matrix of w -> conj(w) on the lattice basis; an involution.
/// rational_rep(conj(m)) == C * rational_rep(m) * C.
IntMatrix conjugation_matrix(const Torus& torus);

/// Rank of m over Frac(O), i.e. the complex rank of the analytic representation.
std::size_t analytic_rank(const OrderMatrix& m);
std::size_t analytic_rank_minus_id(const OrderMatrix& m);

/// The lattice matrices whose invariant Q-subspaces are exactly the complex
/// subtori: {J_w} for CM kinds, {diag(I,0), block swap} for the generic kind.
std::vector<IntMatrix> structure_maps(const Torus& torus);

/// J_w = rational_rep(w I). Throws OrderMismatch for the generic kind.
IntMatrix complex_structure(const Torus& torus);

bool is_stable(const Torus& torus, const IntMatrix& sublattice);

/// Smallest saturated stable sublattice containing the given vectors.
IntMatrix stable_hull(const Torus& torus, const IntMatrix& vectors);

/// Lattice basis (w_1..w_k, w*w_1..w*w_k) of a saturated stable sublattice,
/// where w_1..w_k is an O-basis. Throws NotStable / NotSaturated.
IntMatrix adapted_basis(const Torus& torus, const IntMatrix& sublattice);

/// Embedding of Z^{2g1} and Z^{2g2} into Z^{2(g1+g2)} keeping the
/// (e..., w e...) ordering: returns the target index of each source index.
std::vector<std::size_t> product_index(std::size_t g1, std::size_t g2, bool second);

}  // namespace ppav
