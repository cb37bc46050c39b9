#include "ppav/tori.hpp"

#include <algorithm>

#include "ppav/exact_linalg.hpp"

namespace ppav {

namespace {

// Element of Frac(O) = Q(w) as a + b w.
struct FieldElem {
  Rational a;
  Rational b;
  bool is_zero() const { return a == 0 && b == 0; }
};

FieldElem f_mul(const QuadOrder& o, const FieldElem& x, const FieldElem& y) {
  // (a + b w)(c + d w) = ac + v bd + (ad + bc + u bd) w
  Rational bd = x.b * y.b;
  FieldElem r;
  r.a = x.a * y.a + Rational(o.v()) * bd;
  r.b = x.a * y.b + x.b * y.a + Rational(o.u()) * bd;
  return r;
}

FieldElem f_sub(const FieldElem& x, const FieldElem& y) {
  FieldElem r;
  r.a = x.a - y.a;
  r.b = x.b - y.b;
  return r;
}

FieldElem f_inv(const QuadOrder& o, const FieldElem& x) {
  // 1/x = conj(x) / N(x), conj(a + b w) = (a + b u) - b w
  Rational n = x.a * x.a + Rational(o.u()) * x.a * x.b - Rational(o.v()) * x.b * x.b;
  FieldElem c;
  c.a = (x.a + Rational(o.u()) * x.b) / n;
  c.b = -x.b / n;
  return c;
}

Integer round_div(const Integer& num, const Integer& den) {
  // nearest integer to num/den for den > 0
  Integer twice = 2 * num + den;
  Integer twice_den = 2 * den;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), twice_den.get_mpz_t());
  return q;
}

// Euclidean quotient in Z[i] or Z[w]: nearest element to x / y.
OrderElem euclid_quotient(const QuadOrder& o, const OrderElem& x, const OrderElem& y) {
  OrderElem t = o.mul(x, o.conj(y));
  Integer n = o.norm(y);
  return OrderElem(round_div(t.a, n), round_div(t.b, n));
}

using OrderColumn = std::vector<OrderElem>;

}  // namespace

std::string_view to_string(OrderKind kind) noexcept {
  switch (kind) {
    case OrderKind::RationalIntegers: return "Z";
    case OrderKind::Gaussian: return "Z[i]";
    case OrderKind::Eisenstein: return "Z[w]";
  }
  return "?";
}

OrderKind order_kind_from_string(std::string_view name) {
  if (name == "Z" || name == "RationalIntegers") return OrderKind::RationalIntegers;
  if (name == "Z[i]" || name == "Gaussian") return OrderKind::Gaussian;
  if (name == "Z[w]" || name == "Eisenstein") return OrderKind::Eisenstein;
  throw Error(ErrorKind::ParseError, "unknown order kind '" + std::string(name) + "'");
}

OrderElem QuadOrder::add(const OrderElem& x, const OrderElem& y) const {
  return OrderElem(x.a + y.a, x.b + y.b);
}

OrderElem QuadOrder::sub(const OrderElem& x, const OrderElem& y) const {
  return OrderElem(x.a - y.a, x.b - y.b);
}

OrderElem QuadOrder::mul(const OrderElem& x, const OrderElem& y) const {
  Integer bd = x.b * y.b;
  Integer a = x.a * y.a + v() * bd;
  Integer b = x.a * y.b + x.b * y.a + u() * bd;
  return OrderElem(std::move(a), std::move(b));
}

OrderElem QuadOrder::conj(const OrderElem& x) const {
  if (!has_generator()) return x;
  Integer a = x.a + u() * x.b;
  Integer b = -x.b;
  return OrderElem(std::move(a), std::move(b));
}

Integer QuadOrder::norm(const OrderElem& x) const {
  if (!has_generator()) return x.a * x.a;
  Integer n = x.a * x.a + u() * x.a * x.b - v() * x.b * x.b;
  return n;
}

OrderMatrix::OrderMatrix(QuadOrder order, std::size_t g)
    : order_(order), g_(g), entries_(g * g, OrderElem(0, 0)) {}

OrderMatrix::OrderMatrix(QuadOrder order, std::size_t g, std::vector<OrderElem> entries)
    : order_(order), g_(g), entries_(std::move(entries)) {
  if (entries_.size() != g * g) throw Error(ErrorKind::DimensionMismatch, "entry count != g*g");
  for (const auto& x : entries_)
    if (!order_.contains(x))
      throw Error(ErrorKind::OrderMismatch, "entry with w-part over the rational integers");
}

OrderMatrix::OrderMatrix(QuadOrder order,
                         std::initializer_list<std::initializer_list<std::pair<long, long>>> rows)
    : order_(order), g_(rows.size()) {
  entries_.reserve(g_ * g_);
  for (const auto& r : rows) {
    if (r.size() != g_) throw Error(ErrorKind::DimensionMismatch, "order matrix must be square");
    for (const auto& [a, b] : r) {
      OrderElem x(a, b);
      if (!order_.contains(x))
        throw Error(ErrorKind::OrderMismatch, "entry with w-part over the rational integers");
      entries_.push_back(std::move(x));
    }
  }
}

OrderMatrix OrderMatrix::identity(QuadOrder order, std::size_t g) {
  return scalar(order, g, OrderElem(1, 0));
}

OrderMatrix OrderMatrix::scalar(QuadOrder order, std::size_t g, const OrderElem& x) {
  OrderMatrix m(order, g);
  for (std::size_t i = 0; i < g; ++i) m.set(i, i, x);
  return m;
}

OrderMatrix OrderMatrix::from_integer(QuadOrder order, const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "order matrix must be square");
  OrderMatrix out(order, m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, OrderElem(m(i, j), Integer(0)));
  return out;
}

void OrderMatrix::set(std::size_t i, std::size_t j, OrderElem x) {
  if (!order_.contains(x))
    throw Error(ErrorKind::OrderMismatch, "entry with w-part over the rational integers");
  entries_[i * g_ + j] = std::move(x);
}

bool OrderMatrix::is_identity() const { return *this == identity(order_, g_); }

OrderMatrix operator*(const OrderMatrix& x, const OrderMatrix& y) {
  if (!(x.order_ == y.order_)) throw Error(ErrorKind::OrderMismatch, "product across orders");
  if (x.g_ != y.g_) throw Error(ErrorKind::DimensionMismatch, "product of different sizes");
  const QuadOrder& o = x.order_;
  OrderMatrix r(o, x.g_);
  for (std::size_t i = 0; i < x.g_; ++i)
    for (std::size_t j = 0; j < x.g_; ++j) {
      OrderElem acc(0, 0);
      for (std::size_t k = 0; k < x.g_; ++k) acc = o.add(acc, o.mul(x(i, k), y(k, j)));
      r.entries_[i * x.g_ + j] = std::move(acc);
    }
  return r;
}

OrderMatrix operator+(const OrderMatrix& x, const OrderMatrix& y) {
  if (!(x.order_ == y.order_) || x.g_ != y.g_)
    throw Error(ErrorKind::DimensionMismatch, "sum of incompatible matrices");
  OrderMatrix r = x;
  for (std::size_t k = 0; k < r.entries_.size(); ++k)
    r.entries_[k] = x.order_.add(x.entries_[k], y.entries_[k]);
  return r;
}

OrderMatrix operator-(const OrderMatrix& x, const OrderMatrix& y) {
  if (!(x.order_ == y.order_) || x.g_ != y.g_)
    throw Error(ErrorKind::DimensionMismatch, "difference of incompatible matrices");
  OrderMatrix r = x;
  for (std::size_t k = 0; k < r.entries_.size(); ++k)
    r.entries_[k] = x.order_.sub(x.entries_[k], y.entries_[k]);
  return r;
}

bool operator<(const OrderMatrix& x, const OrderMatrix& y) {
  if (x.order_.kind() != y.order_.kind()) return x.order_.kind() < y.order_.kind();
  if (x.g_ != y.g_) return x.g_ < y.g_;
  return std::lexicographical_compare(x.entries_.begin(), x.entries_.end(), y.entries_.begin(),
                                      y.entries_.end());
}

Torus::Torus(QuadOrder order_, std::size_t g_) : order(order_), g(g_) {
  if (g == 0) throw Error(ErrorKind::InvalidArgument, "torus dimension must be >= 1");
}

IntMatrix rational_rep(const OrderMatrix& m) {
  const std::size_t g = m.g();
  const QuadOrder o = m.order();
  IntMatrix r(2 * g, 2 * g);
  // entry p + q w acts on (a, b) as [[p, v q], [q, p + u q]]
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t k = 0; k < g; ++k) {
      const OrderElem& x = m(j, k);
      if (!o.contains(x)) throw Error(ErrorKind::OrderMismatch, "entry outside the order");
      r(j, k) = x.a;
      r(j, g + k) = o.v() * x.b;
      r(g + j, k) = x.b;
      r(g + j, g + k) = x.a + o.u() * x.b;
    }
  return r;
}

OrderMatrix conj(const OrderMatrix& m) {
  OrderMatrix r(m.order(), m.g());
  for (std::size_t i = 0; i < m.g(); ++i)
    for (std::size_t j = 0; j < m.g(); ++j) r.set(i, j, m.order().conj(m(i, j)));
  return r;
}

IntMatrix conjugation_matrix(const Torus& torus) {
  const std::size_t g = torus.g;
  IntMatrix c = IntMatrix::identity(2 * g);
  if (!torus.order.has_generator()) return c;
  // a + b w -> (a + u b) - b w
  for (std::size_t k = 0; k < g; ++k) {
    c(k, g + k) = torus.order.u();
    c(g + k, g + k) = -1;
  }
  return c;
}

std::size_t analytic_rank(const OrderMatrix& m) {
  const QuadOrder o = m.order();
  const std::size_t g = m.g();
  std::vector<FieldElem> a(g * g);
  for (std::size_t k = 0; k < g * g; ++k)
    a[k] = FieldElem{Rational(m.entries()[k].a), Rational(m.entries()[k].b)};
  auto at = [&](std::size_t i, std::size_t j) -> FieldElem& { return a[i * g + j]; };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < g && rank < g; ++c) {
    std::size_t p = rank;
    while (p < g && at(p, c).is_zero()) ++p;
    if (p == g) continue;
    for (std::size_t j = 0; j < g; ++j) std::swap(at(rank, j), at(p, j));
    FieldElem inv = f_inv(o, at(rank, c));
    for (std::size_t i = rank + 1; i < g; ++i) {
      if (at(i, c).is_zero()) continue;
      FieldElem f = f_mul(o, at(i, c), inv);
      for (std::size_t j = c; j < g; ++j) at(i, j) = f_sub(at(i, j), f_mul(o, f, at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

std::size_t analytic_rank_minus_id(const OrderMatrix& m) {
  return analytic_rank(m - OrderMatrix::identity(m.order(), m.g()));
}

IntMatrix complex_structure(const Torus& torus) {
  if (!torus.order.has_generator())
    throw Error(ErrorKind::OrderMismatch, "generic modulus has no integral complex structure");
  return rational_rep(OrderMatrix::scalar(torus.order, torus.g, OrderElem(0, 1)));
}

std::vector<IntMatrix> structure_maps(const Torus& torus) {
  if (torus.order.has_generator()) return {complex_structure(torus)};
  const std::size_t g = torus.g;
  IntMatrix first(2 * g, 2 * g);
  IntMatrix swap(2 * g, 2 * g);
  for (std::size_t k = 0; k < g; ++k) {
    first(k, k) = 1;
    swap(k, g + k) = 1;
    swap(g + k, k) = 1;
  }
  return {first, swap};
}

bool is_stable(const Torus& torus, const IntMatrix& sublattice) {
  if (sublattice.rows() != torus.lattice_rank())
    throw Error(ErrorKind::DimensionMismatch, "sublattice ambient rank");
  const std::size_t r = rank_over_field(sublattice);
  for (const auto& map : structure_maps(torus))
    if (rank_over_field(hcat(sublattice, map * sublattice)) != r) return false;
  return true;
}

IntMatrix stable_hull(const Torus& torus, const IntMatrix& vectors) {
  if (vectors.rows() != torus.lattice_rank())
    throw Error(ErrorKind::DimensionMismatch, "vectors ambient rank");
  IntMatrix span = vectors;
  // The structure algebra is generated by these maps; iterate to a fixed rank.
  for (;;) {
    const std::size_t before = rank_over_field(span);
    IntMatrix grown = span;
    for (const auto& map : structure_maps(torus)) grown = hcat(grown, map * span);
    IntMatrix basis = saturated_span(grown);
    span = basis;
    if (basis.cols() == before) break;
  }
  return span;
}

IntMatrix adapted_basis(const Torus& torus, const IntMatrix& sublattice) {
  const std::size_t g = torus.g;
  if (sublattice.rows() != 2 * g) throw Error(ErrorKind::DimensionMismatch, "sublattice rank");
  if (rank_over_field(sublattice) != sublattice.cols())
    throw Error(ErrorKind::RankDeficient, "sublattice basis is not independent");
  if (!is_stable(torus, sublattice))
    throw Error(ErrorKind::NotStable, "sublattice is not closed under the complex structure");
  if (!is_saturated(sublattice)) throw Error(ErrorKind::NotSaturated, "sublattice not saturated");
  const std::size_t k = sublattice.cols() / 2;

  if (!torus.order.has_generator()) {
    // Stable means span = L (+) L with L the projection to the first block.
    IntMatrix top = sublattice.block(0, 0, g, sublattice.cols());
    IntMatrix l = column_hnf(top);
    IntMatrix out(2 * g, 2 * k);
    out.set_block(0, 0, l);
    out.set_block(g, k, l);
    return out;
  }

  // Column echelon form over the Euclidean order.
  const QuadOrder o = torus.order;
  std::vector<OrderColumn> cols;
  for (std::size_t j = 0; j < sublattice.cols(); ++j) {
    OrderColumn c(g);
    for (std::size_t i = 0; i < g; ++i) c[i] = OrderElem(sublattice(i, j), sublattice(g + i, j));
    cols.push_back(std::move(c));
  }
  std::size_t pc = 0;
  for (std::size_t i = 0; i < g && pc < cols.size(); ++i) {
    for (;;) {
      std::size_t best = cols.size();
      Integer best_norm;
      for (std::size_t j = pc; j < cols.size(); ++j) {
        Integer n = o.norm(cols[j][i]);
        if (n == 0) continue;
        if (best == cols.size() || n < best_norm) {
          best = j;
          best_norm = n;
        }
      }
      if (best == cols.size()) break;
      std::swap(cols[pc], cols[best]);
      bool done = true;
      for (std::size_t j = pc + 1; j < cols.size(); ++j) {
        if (o.norm(cols[j][i]) == 0) continue;
        OrderElem q = euclid_quotient(o, cols[j][i], cols[pc][i]);
        for (std::size_t r = 0; r < g; ++r) cols[j][r] = o.sub(cols[j][r], o.mul(q, cols[pc][r]));
        if (o.norm(cols[j][i]) != 0) done = false;
      }
      if (done) {
        ++pc;
        break;
      }
    }
  }
  if (pc != k) throw Error(ErrorKind::RankDeficient, "O-rank does not match lattice rank");
  IntMatrix out(2 * g, 2 * k);
  const OrderElem w(0, 1);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < g; ++i) {
      const OrderElem& x = cols[j][i];
      OrderElem wx = o.mul(w, x);
      out(i, j) = x.a;
      out(g + i, j) = x.b;
      out(i, k + j) = wx.a;
      out(g + i, k + j) = wx.b;
    }
  return out;
}

std::vector<std::size_t> product_index(std::size_t g1, std::size_t g2, bool second) {
  const std::size_t g = g1 + g2;
  std::vector<std::size_t> idx;
  if (!second) {
    for (std::size_t k = 0; k < g1; ++k) idx.push_back(k);
    for (std::size_t k = 0; k < g1; ++k) idx.push_back(g + k);
  } else {
    for (std::size_t k = 0; k < g2; ++k) idx.push_back(g1 + k);
    for (std::size_t k = 0; k < g2; ++k) idx.push_back(g + g1 + k);
  }
  return idx;
}

}  // namespace ppav
