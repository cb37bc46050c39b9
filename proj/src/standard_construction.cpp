#include "ppav/standard_construction.hpp"

#include <algorithm>
#include <functional>

#include "ppav/exact_linalg.hpp"

namespace ppav {

namespace {

Rational bilinear(const IntMatrix& m, const RatVector& x, const RatVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && y[j] != 0) s += x[i] * Rational(m(i, j)) * y[j];
  }
  return s;
}

// d * <x, y> as an integer, for a pairing value of order dividing d.
Integer scaled_pairing(const IntMatrix& m, const RatVector& x, const RatVector& y, const Integer& d) {
  Rational v = frac(bilinear(m, x, y)) * Rational(d);
  if (v.get_den() != 1) throw Error(ErrorKind::DegeneratePairing, "pairing value of unexpected order");
  return v.get_num();
}

RatVector combine(const std::vector<CyclicFactor>& basis, const std::vector<Integer>& coeffs,
                  std::size_t n) {
  RatVector y(n, Rational(0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) y[k] += Rational(coeffs[i]) * basis[i].generator[k];
  return reduce_mod_one(y);
}

RatVector add(const RatVector& a, const RatVector& b) {
  RatVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

RatVector scaled(const RatVector& a, const Integer& c) {
  RatVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] * Rational(c);
  return s;
}

PolarizedTorus x_part(const std::vector<std::size_t>& factors) {
  PolarizedTorus x = xi_g(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) x = box_product(x, xi_g(factors[i]));
  return x;
}

PolarizedTorus y_part(std::size_t y_dim, const std::vector<Integer>& divisors) {
  IntMatrix b = IntMatrix::identity(y_dim);
  const std::size_t ones = y_dim - divisors.size();
  for (std::size_t j = 0; j < divisors.size(); ++j) b(ones + j, ones + j) = divisors[j];
  return from_symmetric_block(b);
}

std::vector<Integer> divisors_of(const std::vector<std::size_t>& factors) {
  std::vector<Integer> ms;
  for (std::size_t g : factors) ms.emplace_back(static_cast<unsigned long>(g + 1));
  return elementary_divisors(ms);
}

void check_factors(const std::vector<std::size_t>& factors) {
  if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "no factors given");
  if (std::any_of(factors.begin(), factors.end(), [](std::size_t g) { return g == 0; }))
    throw Error(ErrorKind::InvalidArgument, "factor dimensions must be >= 1");
}

std::vector<IntMatrix> ambient_generators(const std::vector<std::size_t>& factors, std::size_t y_dim) {
  std::size_t x_dim = 0;
  for (std::size_t g : factors) x_dim += g;
  const std::size_t n = x_dim + y_dim;
  const QuadOrder z = QuadOrder::integers();
  std::vector<IntMatrix> out;
  std::size_t offset = 0;
  for (std::size_t g : factors) {
    for (const auto& h : example_b_generators(g)) {
      OrderMatrix big = OrderMatrix::identity(z, n);
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) big.set(offset + i, offset + j, h(i, j));
      out.push_back(rational_rep(big));
    }
    offset += g;
  }
  return out;
}

IntMatrix conjugate_into(const RatMatrix& p, const RatMatrix& p_inv, const IntMatrix& r) {
  try {
    return to_integer(p_inv * to_rational(r) * p);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::IntegralityFailure)
      throw Error(ErrorKind::NotInvariant, "action does not preserve the overlattice");
    throw;
  }
}

IntMatrix fixed_lattice(const std::vector<IntMatrix>& actions, std::size_t n) {
  IntMatrix stacked(0, n);
  for (const auto& a : actions) stacked = vcat(stacked, a - IntMatrix::identity(n));
  if (stacked.rows() == 0) return IntMatrix::identity(n);
  return kernel_basis(stacked);
}

Integer product_of_squares(const std::vector<Integer>& ds) {
  Integer p = 1;
  for (const auto& d : ds) p *= d * d;
  return p;
}

}  // namespace

std::vector<Integer> elementary_divisors(const std::vector<Integer>& ms) {
  for (const auto& m : ms)
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "cyclic orders must be >= 1");
  if (ms.empty()) return {};
  std::vector<Integer> out;
  for (auto& d : snf(IntMatrix::diagonal(ms)).diagonal())
    if (d != 1) out.push_back(d);
  return out;
}

SymplecticBasis symplectic_basis(const FiniteSymplecticGroup& k) {
  const IntMatrix& m = k.form();
  const std::size_t n = k.lattice_rank();
  std::vector<CyclicFactor> basis = torsion_structure(k.generators(), n);
  SymplecticBasis out;
  while (!basis.empty()) {
    std::size_t pick = 0;
    for (std::size_t i = 1; i < basis.size(); ++i)
      if (basis[i].order > basis[pick].order) pick = i;
    const RatVector x = basis[pick].generator;
    const Integer d = basis[pick].order;

    // y = sum t_i b_i with sum t_i c_i == 1 mod d, c_i = d <x, b_i>
    std::vector<Integer> t(basis.size(), Integer(0));
    Integer g = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Integer c = scaled_pairing(m, x, basis[i].generator, d);
      Integer g2, s, r;
      mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), r.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      for (auto& tj : t) tj *= s;
      t[i] += r;
      g = g2;
    }
    Integer unit;
    if (mpz_invert(unit.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t()) == 0)
      throw Error(ErrorKind::DegeneratePairing, "no element pairs to 1/d with a maximal element");
    for (auto& tj : t) {
      tj *= unit;
      mpz_mod(tj.get_mpz_t(), tj.get_mpz_t(), d.get_mpz_t());
    }
    const RatVector y = combine(basis, t, n);
    if (frac(bilinear(m, x, y)) != Rational(1, d))
      throw Error(ErrorKind::DegeneratePairing, "pairing reduction failed");

    Integer before = 1;
    for (const auto& f : basis) before *= f.order;
    std::vector<RatVector> rest;
    for (const auto& f : basis) {
      const RatVector& z = f.generator;
      Integer a = scaled_pairing(m, z, x, d);
      Integer b = scaled_pairing(m, z, y, d);
      rest.push_back(reduce_mod_one(add(add(z, scaled(y, a)), scaled(x, -b))));
    }
    basis = torsion_structure(rest, n);
    Integer after = 1;
    for (const auto& f : basis) after *= f.order;
    if (after * d * d != before)
      throw Error(ErrorKind::DegeneratePairing, "orthogonal complement has the wrong order");

    out.x.push_back(x);
    out.y.push_back(y);
    out.orders.push_back(d);
  }
  std::reverse(out.x.begin(), out.x.end());
  std::reverse(out.y.begin(), out.y.end());
  std::reverse(out.orders.begin(), out.orders.end());
  return out;
}

GluedPPAV build_standard(const std::vector<std::size_t>& factor_genera, std::size_t y_dim) {
  check_factors(factor_genera);
  std::vector<Integer> divisors = divisors_of(factor_genera);
  if (y_dim < divisors.size())
    throw Error(ErrorKind::TypeMismatch, "Y has fewer dimensions than elementary divisors");

  const PolarizedTorus x = x_part(factor_genera);
  const PolarizedTorus y = y_part(y_dim, divisors);
  const PolarizedTorus ambient = box_product(x, y);
  const std::size_t x_dim = x.dim();
  const std::size_t n = 2 * (x_dim + y_dim);

  const FiniteSymplecticGroup kx = kernel_group(x);
  const FiniteSymplecticGroup ky = kernel_group(y);
  const SymplecticBasis bx = symplectic_basis(kx);
  const SymplecticBasis by = symplectic_basis(ky);
  if (bx.orders != divisors || by.orders != divisors)
    throw Error(ErrorKind::TypeMismatch, "kernel groups of X and Y are not isomorphic");

  GluedPPAV out;
  out.factors = factor_genera;
  out.x_dim = x_dim;
  out.y_dim = y_dim;
  out.divisors = divisors;

  // epsilon swaps the two halves of the symplectic coordinates: x_j -> y'_j, y_j -> x'_j
  for (std::size_t j = 0; j < divisors.size(); ++j) {
    if (!(ky.pairing(by.y[j], by.x[j]) == -kx.pairing(bx.x[j], bx.y[j])))
      throw Error(ErrorKind::IntegralityFailure, "exchange map is not antisymplectic");
    out.graph.push_back(add(embed_in_product(bx.x[j], x_dim, y_dim, false),
                            embed_in_product(by.y[j], x_dim, y_dim, true)));
    out.graph.push_back(add(embed_in_product(bx.y[j], x_dim, y_dim, false),
                            embed_in_product(by.x[j], x_dim, y_dim, true)));
  }

  out.overlattice = hnf_basis(hcat(RatMatrix::identity(n), RatMatrix::from_columns(out.graph, n)));
  out.form = to_integer(out.overlattice.transpose() * to_rational(ambient.form()) * out.overlattice);

  const RatMatrix p_inv = inverse(out.overlattice);
  out.ambient_actions = ambient_generators(factor_genera, y_dim);
  for (const auto& r : out.ambient_actions)
    out.actions.push_back(conjugate_into(out.overlattice, p_inv, r));
  return out;
}

PolarizedTorus glued_ambient(const GluedPPAV& a) {
  check_factors(a.factors);
  std::vector<Integer> divisors = divisors_of(a.factors);
  if (a.y_dim < divisors.size())
    throw Error(ErrorKind::TypeMismatch, "Y has fewer dimensions than elementary divisors");
  return box_product(x_part(a.factors), y_part(a.y_dim, divisors));
}

std::pair<IntMatrix, Integer> overlattice_fraction(const GluedPPAV& a) {
  Integer den = 1;
  for (const auto& q : a.overlattice.data()) den = lcm(den, Integer(q.get_den()));
  IntMatrix num(a.overlattice.rows(), a.overlattice.cols());
  for (std::size_t i = 0; i < num.rows(); ++i)
    for (std::size_t j = 0; j < num.cols(); ++j) {
      Rational v = a.overlattice(i, j) * Rational(den);
      num(i, j) = v.get_num();
    }
  return {num, den};
}

GluedPPAV glued_from_parts(std::vector<std::size_t> factors, std::size_t y_dim,
                           const IntMatrix& overlattice_num, const Integer& overlattice_den,
                           IntMatrix form, std::vector<IntMatrix> actions) {
  check_factors(factors);
  if (overlattice_den < 1) throw Error(ErrorKind::InvalidArgument, "denominator must be positive");
  GluedPPAV out;
  out.factors = std::move(factors);
  for (std::size_t g : out.factors) out.x_dim += g;
  out.y_dim = y_dim;
  out.divisors = divisors_of(out.factors);
  const std::size_t n = 2 * (out.x_dim + y_dim);
  if (!overlattice_num.is_square() || overlattice_num.rows() != n)
    throw Error(ErrorKind::DimensionMismatch, "overlattice basis has the wrong size");
  out.overlattice = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.overlattice(i, j) = Rational(overlattice_num(i, j), overlattice_den);
      out.overlattice(i, j).canonicalize();
    }
  out.form = std::move(form);
  out.actions = std::move(actions);
  const RatMatrix p_inv = inverse(out.overlattice);
  for (const auto& act : out.actions)
    out.ambient_actions.push_back(to_integer(out.overlattice * to_rational(act) * p_inv));
  for (std::size_t j = 0; j < n; ++j) {
    RatVector c = reduce_mod_one(out.overlattice.column(j));
    if (!std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; }))
      out.graph.push_back(std::move(c));
  }
  return out;
}

GluedReport verify_glued(const GluedPPAV& a) {
  GluedReport report;
  const std::size_t n = 2 * (a.x_dim + a.y_dim);
  std::optional<PolarizedTorus> ambient;
  std::optional<RatMatrix> p_inv;
  try {
    ambient = glued_ambient(a);
    p_inv = inverse(a.overlattice);
  } catch (const Error&) {
  }
  const RatMatrix& p = a.overlattice;

  auto run = [&](ErrorKind kind, const std::function<bool()>& check) {
    bool passed = false;
    try {
      passed = check();
    } catch (const Error&) {
      passed = false;
    }
    report.checks.push_back({kind, passed});
    if (!passed && !report.first_failure) report.first_failure = kind;
  };

  run(ErrorKind::NotAlternating, [&] { return a.form.rows() == n && is_alternating(a.form); });

  run(ErrorKind::IntegralityFailure, [&] {
    if (!ambient || !p_inv || p.rows() != n) return false;
    // Z^{2N} must sit inside the overlattice and the form must be the pullback.
    if (!is_integral(*p_inv)) return false;
    RatMatrix pulled = p.transpose() * to_rational(ambient->form()) * p;
    return is_integral(pulled) && to_integer(pulled) == a.form;
  });

  run(ErrorKind::NotUnimodular, [&] {
    report.pfaffian = pfaffian(a.form);
    return abs(report.pfaffian) == 1;
  });

  run(ErrorKind::NotPositive, [&] {
    if (!ambient) return false;
    RatMatrix q = p.transpose() * to_rational(positivity_matrix(ambient->torus(), ambient->form())) * p;
    return is_symmetric(q) && is_positive_definite(q);
  });

  run(ErrorKind::IncompatibleForm, [&] {
    if (!ambient || !is_compatible_form(ambient->torus(), ambient->form())) return false;
    for (const auto& s : structure_maps(ambient->torus()))
      for (const auto& r : a.ambient_actions)
        if (!(r * s == s * r)) return false;
    return true;
  });

  run(ErrorKind::IndexMismatch, [&] {
    Rational det = determinant(p);
    if (det == 0) return false;
    Rational index = 1 / abs(det);
    if (index.get_den() != 1) return false;
    report.index = index.get_num();
    Integer prod = 1;
    for (const auto& d : a.divisors) prod *= d;
    return a.divisors == divisors_of(a.factors) && report.index == prod * prod;
  });

  run(ErrorKind::NotInvariant, [&] {
    if (!p_inv || a.actions.size() != a.ambient_actions.size() || a.actions.empty()) return false;
    for (std::size_t i = 0; i < a.actions.size(); ++i) {
      if (!(conjugate_into(p, *p_inv, a.ambient_actions[i]) == a.actions[i])) return false;
      if (!(a.actions[i].transpose() * a.form * a.actions[i] == a.form)) return false;
    }
    return true;
  });

  run(ErrorKind::GraphNotFixed, [&] {
    if (!p_inv) return false;
    for (const auto& gamma : a.graph) {
      if (!is_integral(*p_inv * gamma)) return false;
      for (const auto& r : a.ambient_actions) {
        RatVector moved = to_rational(r) * gamma;
        for (std::size_t k = 0; k < n; ++k) moved[k] -= gamma[k];
        if (!is_integral(moved)) return false;
      }
    }
    return true;
  });

  run(ErrorKind::GraphNotIsotropic, [&] {
    if (!ambient) return false;
    for (const auto& u : a.graph)
      for (const auto& v : a.graph)
        if (bilinear(ambient->form(), u, v).get_den() != 1) return false;
    return true;
  });

  run(ErrorKind::NotReflectionGenerated, [&] {
    const auto idx = product_index(a.x_dim, a.y_dim, false);
    const Torus tx(QuadOrder::integers(), a.x_dim);
    std::vector<OrderMatrix> gens;
    for (const auto& r : a.ambient_actions) {
      IntMatrix block(a.x_dim, a.x_dim);
      for (std::size_t i = 0; i < a.x_dim; ++i)
        for (std::size_t j = 0; j < a.x_dim; ++j) block(i, j) = r(idx[i], idx[j]);
      gens.push_back(OrderMatrix::from_integer(QuadOrder::integers(), block));
    }
    return pseudoreflection_generated(closure(tx, gens)).generated;
  });

  run(ErrorKind::FixedDimMismatch, [&] {
    IntMatrix fixed = fixed_lattice(a.actions, n);
    report.fixed_dim = fixed.cols() / 2;
    return fixed.cols() == 2 * a.y_dim;
  });

  return report;
}

Decomposition decompose_glued(const GluedPPAV& a) {
  GluedReport report = verify_glued(a);
  if (!report.ok()) throw Error(*report.first_failure, "glued variety fails verification");
  const std::size_t n = 2 * (a.x_dim + a.y_dim);
  Decomposition out;
  out.y_lattice = fixed_lattice(a.actions, n);
  out.x_lattice = kernel_basis(out.y_lattice.transpose() * a.form);
  out.y_type = alternating_type(out.y_lattice.transpose() * a.form * out.y_lattice);
  out.x_type = alternating_type(out.x_lattice.transpose() * a.form * out.x_lattice);
  out.quotient_order = abs(determinant(hcat(out.x_lattice, out.y_lattice)));
  // Gamma is the graph of K_X -> K_Y: one element per element of either kernel.
  if (out.quotient_order != product_of_squares(out.x_type) ||
      out.quotient_order != product_of_squares(out.y_type))
    throw Error(ErrorKind::IndexMismatch, "quotient is not the graph of an isomorphism");
  return out;
}

}  // namespace ppav
