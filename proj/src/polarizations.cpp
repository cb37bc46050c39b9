#include "ppav/polarizations.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ppav {

namespace {

Integer factorial(std::size_t g) {
  Integer f = 1;
  for (std::size_t k = 2; k <= g; ++k) f *= static_cast<unsigned long>(k);
  return f;
}

IntMatrix block_form(const IntMatrix& b) {
  const std::size_t g = b.rows();
  IntMatrix m(2 * g, 2 * g);
  m.set_block(0, g, b);
  m.set_block(g, 0, -b);
  return m;
}

RatVector to_rat(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

RatVector form_times(const IntMatrix& form, const RatVector& x) {
  return to_rational(form) * x;
}

Rational bilinear(const IntMatrix& form, const RatVector& x, const RatVector& y) {
  RatVector fy = form_times(form, y);
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * fy[i];
  return s;
}

}  // namespace

bool is_compatible_form(const Torus& torus, const IntMatrix& form) {
  const std::size_t g = torus.g;
  if (form.rows() != 2 * g || !is_alternating(form)) return false;
  if (torus.order.has_generator()) {
    IntMatrix j = complex_structure(torus);
    return j.transpose() * form * j == Integer(torus.order.generator_norm()) * form;
  }
  for (std::size_t r = 0; r < g; ++r)
    for (std::size_t c = 0; c < g; ++c) {
      if (form(r, c) != 0 || form(g + r, g + c) != 0) return false;
      if (form(r, g + c) != form(c, g + r)) return false;
    }
  return true;
}

IntMatrix positivity_matrix(const Torus& torus, const IntMatrix& form) {
  const std::size_t g = torus.g;
  if (!torus.order.has_generator()) {
    IntMatrix b = form.block(0, g, g, g);
    return direct_sum(b, b);
  }
  IntMatrix j = complex_structure(torus);
  return Integer(2) * (form * j) - Integer(torus.order.u()) * form;
}

bool is_positive_form(const Torus& torus, const IntMatrix& form) {
  RatMatrix s = to_rational(positivity_matrix(torus, form));
  if (!is_symmetric(s)) return false;
  return is_positive_definite(s);
}

PolarizedTorus::PolarizedTorus(Torus torus, IntMatrix form)
    : torus_(torus), form_(std::move(form)) {
  if (form_.rows() != torus_.lattice_rank() || form_.cols() != torus_.lattice_rank())
    throw Error(ErrorKind::DimensionMismatch, "form size must be 2g x 2g");
  if (!is_alternating(form_)) throw Error(ErrorKind::NotAlternating, "form is not alternating");
  if (determinant(form_) == 0) throw Error(ErrorKind::Degenerate, "form is degenerate");
  if (!is_compatible_form(torus_, form_))
    throw Error(ErrorKind::IncompatibleForm, "form is not compatible with the complex structure");
  if (!is_positive_form(torus_, form_))
    throw Error(ErrorKind::NotPositive, "associated hermitian form is not positive definite");
}

PolarizedTorus theta_g(std::size_t g, QuadOrder order) {
  if (g == 0) throw Error(ErrorKind::InvalidArgument, "g must be >= 1");
  return PolarizedTorus(Torus(order, g), block_form(IntMatrix::identity(g)));
}

PolarizedTorus xi_g(std::size_t g) {
  if (g == 0) throw Error(ErrorKind::InvalidArgument, "g must be >= 1");
  IntMatrix b = IntMatrix::identity(g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) b(i, j) += 1;
  return PolarizedTorus(Torus(QuadOrder::integers(), g), block_form(b));
}

PolarizedTorus from_symmetric_block(const IntMatrix& b) {
  if (!b.is_square() || b.rows() == 0)
    throw Error(ErrorKind::DimensionMismatch, "block must be square and nonempty");
  return PolarizedTorus(Torus(QuadOrder::integers(), b.rows()), block_form(b));
}

std::vector<Integer> alternating_type(const IntMatrix& form) {
  if (!is_alternating(form) || form.rows() % 2 != 0)
    throw Error(ErrorKind::NotAlternating, "type of a non-alternating form");
  std::vector<Integer> d = snf(form).diagonal();
  std::vector<Integer> type;
  for (std::size_t i = 0; i < d.size(); i += 2) {
    if (d[i] == 0) throw Error(ErrorKind::Degenerate, "form is degenerate");
    if (d[i] != d[i + 1])
      throw Error(ErrorKind::NotAlternating, "elementary divisors do not come in pairs");
    type.push_back(d[i]);
  }
  return type;
}

std::vector<Integer> polarization_type(const PolarizedTorus& p) {
  return alternating_type(p.form());
}

FiniteSymplecticGroup::FiniteSymplecticGroup(IntMatrix form, std::vector<RatVector> generators,
                                             std::vector<Integer> orders)
    : form_(std::move(form)), generators_(std::move(generators)), orders_(std::move(orders)) {
  if (generators_.size() != orders_.size())
    throw Error(ErrorKind::DimensionMismatch, "one order per generator");
  for (auto& x : generators_) {
    x = reduce_mod_one(x);
    if (!contains(x)) throw Error(ErrorKind::NotMember, "generator outside the kernel group");
  }
}

Integer FiniteSymplecticGroup::order() const {
  Integer n = 1;
  for (const auto& d : orders_) n *= d;
  return n;
}

bool FiniteSymplecticGroup::contains(const RatVector& x) const {
  if (x.size() != form_.rows()) return false;
  return is_integral(form_times(form_, x));
}

QmodZ FiniteSymplecticGroup::pairing(const RatVector& x, const RatVector& y) const {
  if (!contains(x) || !contains(y))
    throw Error(ErrorKind::NotMember, "pairing argument outside the kernel group");
  return QmodZ(bilinear(form_, x, y));
}

std::vector<std::vector<QmodZ>> FiniteSymplecticGroup::pairing_table() const {
  std::vector<std::vector<QmodZ>> t(generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = 0; j < generators_.size(); ++j)
      t[i].push_back(pairing(generators_[i], generators_[j]));
  return t;
}

std::vector<RatVector> FiniteSymplecticGroup::elements() const {
  std::vector<RatVector> out{RatVector(form_.rows(), Rational(0))};
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    std::vector<RatVector> next;
    const unsigned long ord = orders_[k].get_ui();
    for (const auto& base : out)
      for (unsigned long c = 0; c < ord; ++c) {
        RatVector v = base;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += Rational(c) * generators_[k][i];
        next.push_back(reduce_mod_one(v));
      }
    out = std::move(next);
  }
  return out;
}

Integer FiniteSymplecticGroup::element_order(const RatVector& x) {
  Integer l = 1;
  for (const auto& c : x) l = lcm(l, Integer(frac(c).get_den()));
  return l;
}

FiniteSymplecticGroup kernel_group_of_form(const IntMatrix& form) {
  if (!is_alternating(form)) throw Error(ErrorKind::NotAlternating, "form is not alternating");
  SmithForm f = snf(form);
  if (f.rank() != form.rows()) throw Error(ErrorKind::Degenerate, "form is degenerate");
  // form V z in Z^n  <=>  D z in Z^n, so V e_i / d_i generate.
  std::vector<RatVector> gens;
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < form.rows(); ++i) {
    const Integer& d = f.D(i, i);
    if (d == 1) continue;
    RatVector x = to_rat(f.V.column(i));
    for (auto& c : x) c /= Rational(d);
    gens.push_back(std::move(x));
    orders.push_back(d);
  }
  return FiniteSymplecticGroup(form, std::move(gens), std::move(orders));
}

FiniteSymplecticGroup kernel_group(const PolarizedTorus& p) { return kernel_group_of_form(p.form()); }

QmodZ weil_pairing(const FiniteSymplecticGroup& k, const RatVector& x, const RatVector& y) {
  return k.pairing(x, y);
}

PolarizedTorus scale(const PolarizedTorus& p, const Integer& m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "scale factor must be >= 1");
  return PolarizedTorus(p.torus(), m * p.form());
}

PolarizedTorus box_product(const PolarizedTorus& p, const PolarizedTorus& q) {
  if (!(p.order() == q.order()))
    throw Error(ErrorKind::OrderMismatch, "box product of tori over different orders");
  const std::size_t g1 = p.dim();
  const std::size_t g2 = q.dim();
  const auto i1 = product_index(g1, g2, false);
  const auto i2 = product_index(g1, g2, true);
  IntMatrix m(2 * (g1 + g2), 2 * (g1 + g2));
  for (std::size_t r = 0; r < 2 * g1; ++r)
    for (std::size_t c = 0; c < 2 * g1; ++c) m(i1[r], i1[c]) = p.form()(r, c);
  for (std::size_t r = 0; r < 2 * g2; ++r)
    for (std::size_t c = 0; c < 2 * g2; ++c) m(i2[r], i2[c]) = q.form()(r, c);
  return PolarizedTorus(Torus(p.order(), g1 + g2), std::move(m));
}

RatVector embed_in_product(const RatVector& x, std::size_t g1, std::size_t g2, bool second) {
  const auto idx = product_index(g1, g2, second);
  if (x.size() != idx.size()) throw Error(ErrorKind::DimensionMismatch, "vector length");
  RatVector out(2 * (g1 + g2), Rational(0));
  for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = x[k];
  return out;
}

Integer self_intersection(const PolarizedTorus& p) {
  const Integer fact = factorial(p.dim());
  Integer pf = pfaffian(p.form());
  Integer via_pf = fact * abs(pf);
  Integer prod = 1;
  for (const auto& d : polarization_type(p)) prod *= d;
  Integer via_type = fact * prod;
  if (via_pf != via_type)
    throw Error(ErrorKind::IntegralityFailure, "pfaffian and type disagree on the degree");
  return via_pf;
}

PolarizedTorus restrict_to(const PolarizedTorus& p, const IntMatrix& sublattice) {
  IntMatrix basis = adapted_basis(p.torus(), sublattice);
  IntMatrix form = basis.transpose() * p.form() * basis;
  return PolarizedTorus(Torus(p.order(), basis.cols() / 2), std::move(form));
}

IntMatrix complement(const PolarizedTorus& p, const IntMatrix& sublattice) {
  if (!is_stable(p.torus(), sublattice))
    throw Error(ErrorKind::NotStable, "sublattice is not closed under the complex structure");
  if (!is_saturated(sublattice)) throw Error(ErrorKind::NotSaturated, "sublattice not saturated");
  IntMatrix c = kernel_basis(sublattice.transpose() * p.form());
  if (c.cols() + sublattice.cols() != p.torus().lattice_rank())
    throw Error(ErrorKind::Degenerate, "restricted form is degenerate");
  return c;
}

Prop39Report prop39_scan(std::size_t n, long height, std::size_t work_cap) {
  if (n == 0 || height < 1) throw Error(ErrorKind::InvalidArgument, "need n >= 1, height >= 1");
  if (n > 4 || height > 5) throw Error(ErrorKind::BudgetExceeded, "scan limited to n <= 4, height <= 5");

  Prop39Report report;
  report.n = n;
  report.height = height;

  // Primitive vectors up to sign.
  std::vector<IntMatrix> vectors;
  std::vector<long> v(n, -height);
  for (;;) {
    Integer g = 0;
    for (long c : v) g = gcd(g, Integer(c));
    std::size_t first = 0;
    while (first < n && v[first] == 0) ++first;
    if (g == 1 && first < n && v[first] > 0) {
      IntMatrix col(n, 1);
      for (std::size_t i = 0; i < n; ++i) col(i, 0) = v[i];
      vectors.push_back(std::move(col));
    }
    std::size_t i = 0;
    while (i < n && v[i] == height) v[i++] = -height;
    if (i == n) break;
    ++v[i];
  }
  report.vectors_scanned = vectors.size();

  std::set<IntMatrix> level(vectors.begin(), vectors.end());
  std::vector<IntMatrix> all(level.begin(), level.end());
  for (std::size_t k = 2; k <= n; ++k) {
    if (level.size() * vectors.size() > work_cap)
      throw Error(ErrorKind::BudgetExceeded, "sublattice enumeration exceeds the work cap");
    std::set<IntMatrix> next;
    for (const auto& l : level)
      for (const auto& w : vectors) {
        IntMatrix span = hcat(l, w);
        if (rank_over_field(span) != k) continue;
        next.insert(saturated_span(span));
      }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }

  const PolarizedTorus xi = xi_g(n);
  for (const auto& l : all) {
    const std::size_t k = l.cols();
    IntMatrix s(2 * n, 2 * k);
    s.set_block(0, 0, l);
    s.set_block(n, k, l);
    PolarizedTorus r = restrict_to(xi, s);
    std::vector<Integer> t = polarization_type(r);
    const bool principal = std::all_of(t.begin(), t.end(), [](const Integer& d) { return d == 1; });
    report.principal_found = report.principal_found || principal;
    report.entries.push_back({l, std::move(t)});
  }
  return report;
}

}  // namespace ppav
