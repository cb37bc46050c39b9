#include "ppav/group_actions.hpp"

#include <algorithm>
#include <set>

#include "ppav/exact_linalg.hpp"

namespace ppav {

namespace {

void check_torus(const Torus& torus, const OrderMatrix& m) {
  if (!(m.order() == torus.order)) throw Error(ErrorKind::OrderMismatch, "element over another order");
  if (m.g() != torus.g) throw Error(ErrorKind::DimensionMismatch, "element of the wrong size");
}

// Index of the unknown M(p, q), p < q, among the n(n-1)/2 upper entries.
std::size_t pair_index(std::size_t n, std::size_t p, std::size_t q) {
  return p * n - p * (p + 1) / 2 + (q - p - 1);
}

// Rows expressing (X^t M Y - c M)(r, s) = 0 for all r < s in terms of the
// upper-triangular unknowns of the alternating matrix M.
void append_congruence_rows(std::vector<IntVector>& rows, const IntMatrix& x, const Integer& c) {
  const std::size_t n = x.rows();
  const std::size_t unknowns = n * (n - 1) / 2;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s) {
      IntVector row(unknowns);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
          Integer coeff = x(p, r) * x(q, s) - x(q, r) * x(p, s);
          if (p == r && q == s) coeff -= c;
          row[pair_index(n, p, q)] = coeff;
        }
      rows.push_back(std::move(row));
    }
}

IntMatrix alternating_from_unknowns(std::size_t n, const IntVector& u) {
  IntMatrix m(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      m(p, q) = u[pair_index(n, p, q)];
      m(q, p) = -u[pair_index(n, p, q)];
    }
  return m;
}

OrderMatrix transposition(QuadOrder order, std::size_t g, std::size_t i, std::size_t j) {
  OrderMatrix m(order, g);
  for (std::size_t k = 0; k < g; ++k)
    if (k != i && k != j) m.set(k, k, OrderElem(1, 0));
  m.set(i, j, OrderElem(1, 0));
  m.set(j, i, OrderElem(1, 0));
  return m;
}

}  // namespace

MatrixGroup::MatrixGroup(Torus torus, std::vector<OrderMatrix> generators,
                         std::vector<OrderMatrix> elements)
    : torus_(torus), generators_(std::move(generators)), elements_(std::move(elements)) {
  for (const auto& m : generators_) check_torus(torus_, m);
  for (const auto& m : elements_) check_torus(torus_, m);
  if (elements_.empty() || !elements_.front().is_identity())
    throw Error(ErrorKind::InvalidArgument, "group elements must start with the identity");
}

bool MatrixGroup::contains(const OrderMatrix& m) const {
  return std::find(elements_.begin(), elements_.end(), m) != elements_.end();
}

MatrixGroup closure(const Torus& torus, std::span<const OrderMatrix> generators, std::size_t cap) {
  if (cap == 0) throw Error(ErrorKind::InvalidArgument, "closure cap must be >= 1");
  for (const auto& s : generators) {
    check_torus(torus, s);
    if (abs(determinant(rational_rep(s))) != 1)
      throw Error(ErrorKind::NotInvertible, "generator is not a unit over the order");
  }
  const OrderMatrix id = OrderMatrix::identity(torus.order, torus.g);
  std::set<OrderMatrix> seen{id};
  std::vector<OrderMatrix> elements{id};
  std::vector<OrderMatrix> level{id};
  while (!level.empty()) {
    std::vector<OrderMatrix> next;
    for (const auto& e : level)
      for (const auto& s : generators) {
        OrderMatrix p = e * s;
        if (seen.insert(p).second) {
          if (seen.size() > cap)
            throw Error(ErrorKind::CapExceeded, "group closure exceeds the element cap");
          next.push_back(std::move(p));
        }
      }
    std::sort(next.begin(), next.end());
    elements.insert(elements.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return MatrixGroup(torus, std::vector<OrderMatrix>(generators.begin(), generators.end()),
                     std::move(elements));
}

bool invariant_form(const MatrixGroup& group, const IntMatrix& form) {
  if (form.rows() != group.torus().lattice_rank() || form.cols() != form.rows())
    throw Error(ErrorKind::DimensionMismatch, "form does not live on the group's torus");
  for (const auto& g : group.elements()) {
    IntMatrix r = rational_rep(g);
    if (!(r.transpose() * form * r == form)) return false;
  }
  return true;
}

bool invariant_form(const MatrixGroup& group, const PolarizedTorus& p) {
  if (!(group.torus() == p.torus()))
    throw Error(ErrorKind::DimensionMismatch, "polarization lives on another torus");
  return invariant_form(group, p.form());
}

ReflectionSummary pseudoreflection_generated(const MatrixGroup& group) {
  std::vector<OrderMatrix> reflections;
  for (const auto& g : group.elements())
    if (analytic_rank_minus_id(g) == 1) reflections.push_back(g);
  ReflectionSummary out;
  out.pseudoreflections = reflections.size();
  MatrixGroup sub = closure(group.torus(), reflections, group.order());
  out.generated = sub.order() == group.order();
  return out;
}

IntMatrix fixed_sublattice(const MatrixGroup& group) {
  const std::size_t n = group.torus().lattice_rank();
  IntMatrix stacked(0, n);
  for (const auto& g : group.generators())
    stacked = vcat(stacked, rational_rep(g) - IntMatrix::identity(n));
  return kernel_basis(stacked);
}

std::size_t fixed_dim(const MatrixGroup& group) { return fixed_sublattice(group).cols() / 2; }

NsFixed ns_fixed(const MatrixGroup& group) {
  const Torus& torus = group.torus();
  const std::size_t g = torus.g;
  const std::size_t n = 2 * g;
  const std::size_t unknowns = n * (n - 1) / 2;
  std::vector<IntVector> rows;

  if (torus.order.has_generator()) {
    append_congruence_rows(rows, complex_structure(torus), Integer(torus.order.generator_norm()));
  } else {
    // form = [[0, B], [-B, 0]] with B symmetric
    for (std::size_t r = 0; r < g; ++r)
      for (std::size_t s = r + 1; s < g; ++s) {
        IntVector top(unknowns), bottom(unknowns), sym(unknowns);
        top[pair_index(n, r, s)] = 1;
        bottom[pair_index(n, g + r, g + s)] = 1;
        sym[pair_index(n, r, g + s)] = 1;
        sym[pair_index(n, s, g + r)] = -1;
        rows.push_back(std::move(top));
        rows.push_back(std::move(bottom));
        rows.push_back(std::move(sym));
      }
  }
  for (const auto& h : group.generators()) append_congruence_rows(rows, rational_rep(h), Integer(1));

  IntMatrix system(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < unknowns; ++j) system(i, j) = rows[i][j];
  IntMatrix kernel = kernel_basis(system);

  NsFixed out;
  out.rank = kernel.cols();
  for (std::size_t j = 0; j < kernel.cols(); ++j)
    out.basis.push_back(alternating_from_unknowns(n, kernel.column(j)));
  if (out.rank == 1) {
    IntMatrix neg = -out.basis.front();
    if (determinant(neg) != 0 && is_positive_form(torus, neg)) out.basis.front() = neg;
  }
  return out;
}

AveragedForm average_pullback(const MatrixGroup& group, const PolarizedTorus& p) {
  if (!(group.torus() == p.torus()))
    throw Error(ErrorKind::DimensionMismatch, "polarization lives on another torus");
  const std::size_t n = p.torus().lattice_rank();
  IntMatrix sum(n, n);
  for (const auto& g : group.elements()) {
    IntMatrix r = rational_rep(g);
    sum += r.transpose() * p.form() * r;
  }
  AveragedForm out;
  out.multiplier = content(sum);
  if (out.multiplier == 0) throw Error(ErrorKind::Degenerate, "averaged form vanishes");
  out.primitive = sum;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_divexact(out.primitive(i, j).get_mpz_t(),
                                                     out.primitive(i, j).get_mpz_t(),
                                                     out.multiplier.get_mpz_t());
  return out;
}

bool action_on_kernel(const MatrixGroup& group, const FiniteSymplecticGroup& kernel) {
  if (kernel.lattice_rank() != group.torus().lattice_rank())
    throw Error(ErrorKind::DimensionMismatch, "kernel group lives on another torus");
  if (!invariant_form(group, kernel.form()))
    throw Error(ErrorKind::NotInvariant, "group does not preserve the polarization");
  for (const auto& g : group.generators()) {
    RatMatrix r = to_rational(rational_rep(g));
    for (const auto& x : kernel.generators()) {
      RatVector gx = r * x;
      for (std::size_t i = 0; i < gx.size(); ++i) gx[i] -= x[i];
      if (!is_integral(gx)) return false;
    }
  }
  return true;
}

GroupWithPolarization example_a(std::size_t g, int m, RootChoice root) {
  if (g == 0) throw Error(ErrorKind::InvalidArgument, "g must be >= 1");
  QuadOrder order;
  OrderElem zeta;
  const bool conj_root = root == RootChoice::Conjugate;
  switch (m) {
    case 2:
      order = QuadOrder::integers();
      zeta = OrderElem(-1, 0);
      break;
    case 4:
      order = QuadOrder::gaussian();
      zeta = conj_root ? OrderElem(0, -1) : OrderElem(0, 1);  // -i or i
      break;
    case 3:
      order = QuadOrder::eisenstein();
      zeta = conj_root ? OrderElem(-1, -1) : OrderElem(0, 1);  // conj(w) = -1 - w, or w
      break;
    case 6:
      order = QuadOrder::eisenstein();
      zeta = conj_root ? OrderElem(1, 1) : OrderElem(0, -1);  // -conj(w) = 1 + w, or -w
      break;
    default:
      throw Error(ErrorKind::BadOrder, "cyclic automorphism order must be 2, 3, 4 or 6");
  }
  const Torus torus(order, g);
  std::vector<OrderMatrix> gens;
  OrderMatrix d = OrderMatrix::identity(order, g);
  d.set(0, 0, zeta);
  gens.push_back(d);
  for (std::size_t i = 0; i + 1 < g; ++i) gens.push_back(transposition(order, g, i, i + 1));
  return {closure(torus, gens), theta_g(g, order)};
}

std::vector<OrderMatrix> example_b_generators(std::size_t g) {
  if (g == 0) throw Error(ErrorKind::InvalidArgument, "g must be >= 1");
  const QuadOrder order = QuadOrder::integers();
  std::vector<OrderMatrix> gens;
  for (std::size_t i = 0; i + 1 < g; ++i) gens.push_back(transposition(order, g, i, i + 1));
  // (g, g+1): x_g -> x_{g+1} = -(x_1 + ... + x_g)
  OrderMatrix last = OrderMatrix::identity(order, g);
  for (std::size_t k = 0; k < g; ++k) last.set(g - 1, k, OrderElem(-1, 0));
  gens.push_back(last);
  return gens;
}

GroupWithPolarization example_b(std::size_t g) {
  return {closure(Torus(QuadOrder::integers(), g), example_b_generators(g)), xi_g(g)};
}

std::vector<OrderMatrix> example_c_generators() {
  const QuadOrder zi = QuadOrder::gaussian();
  return {
      OrderMatrix(zi, {{{-1, 0}, {1, 1}}, {{0, 0}, {1, 0}}}),
      OrderMatrix(zi, {{{0, -1}, {-1, 1}}, {{0, 0}, {0, 1}}}),
      OrderMatrix(zi, {{{-1, 0}, {0, 0}}, {{-1, 1}, {1, 0}}}),
  };
}

GroupWithPolarization example_c() {
  const Torus torus(QuadOrder::gaussian(), 2);
  MatrixGroup group = closure(torus, example_c_generators());
  AveragedForm avg = average_pullback(group, theta_g(2, QuadOrder::gaussian()));
  return {group, PolarizedTorus(torus, avg.primitive)};
}

}  // namespace ppav
