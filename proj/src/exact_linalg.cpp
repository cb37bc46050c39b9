#include "ppav/exact_linalg.hpp"

#include <numeric>
#include <utility>

namespace ppav {

namespace {

// Floor division for the HNF reductions so that remainders land in [0, b).
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// g = s*a + t*b with g >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

struct Position {
  std::size_t row;
  std::size_t col;
  bool found;
};

Position smallest_nonzero(const IntMatrix& d, std::size_t t) {
  Position best{0, 0, false};
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best.found || a < best_abs) {
        best = {i, j, true};
        best_abs = a;
      }
    }
  return best;
}

Integer pfaffian_expand(const IntMatrix& m, std::vector<std::size_t>& idx) {
  if (idx.empty()) return 1;
  const std::size_t first = idx.front();
  Integer total = 0;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const std::size_t j = idx[k];
    if (m(first, j) == 0) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t l = 1; l < idx.size(); ++l)
      if (l != k) rest.push_back(idx[l]);
    Integer sub = pfaffian_expand(m, rest);
    // sign (-1)^(k+1) with k counted from 1 for the second index
    if (k % 2 == 1)
      total += m(first, j) * sub;
    else
      total -= m(first, j) * sub;
  }
  return total;
}

Rational pfaffian_eliminate(RatMatrix a) {
  const std::size_t n = a.rows();
  Rational result = 1;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t piv = n;
    for (std::size_t j = k + 1; j < n; ++j)
      if (a(k, j) != 0) {
        piv = j;
        break;
      }
    if (piv == n) return 0;
    if (piv != k + 1) {
      a.swap_rows(k + 1, piv);
      a.swap_cols(k + 1, piv);
      result = -result;
    }
    const Rational p = a(k, k + 1);
    result *= p;
    for (std::size_t i = k + 2; i < n; ++i) {
      if (a(k, i) != 0) {
        Rational f = a(k, i) / p;
        a.add_col_multiple(i, k + 1, -f);
        a.add_row_multiple(i, k + 1, -f);
      }
      if (a(k + 1, i) != 0) {
        Rational f = a(k + 1, i) / (-p);
        a.add_col_multiple(i, k, -f);
        a.add_row_multiple(i, k, -f);
      }
    }
  }
  return result;
}

}  // namespace

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  const std::size_t n = std::min(D.rows(), D.cols());
  d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(D.rows(), D.cols());
  while (r < n && D(r, r) != 0) ++r;
  return r;
}

SmithForm snf(const IntMatrix& m) {
  SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& D = f.D;
  const std::size_t n = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      Position p = smallest_nonzero(D, t);
      if (!p.found) return f;  // remaining block is zero
      D.swap_rows(t, p.row);
      f.U.swap_rows(t, p.row);
      D.swap_cols(t, p.col);
      f.V.swap_cols(t, p.col);

      bool clean = true;
      for (std::size_t i = t + 1; i < D.rows(); ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / D(t, t);
        D.add_row_multiple(i, t, -q);
        f.U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < D.cols(); ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / D(t, t);
        D.add_col_multiple(j, t, -q);
        f.V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column t are clear; enforce divisibility on the rest.
      bool divides = true;
      for (std::size_t i = t + 1; i < D.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < D.cols(); ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            D.add_row_multiple(t, i, Integer(1));
            f.U.add_row_multiple(t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

IntMatrix column_hnf(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t k = h.cols();
  std::size_t pc = 0;
  Integer g, s, t;
  for (std::size_t i = 0; i < h.rows() && pc < k; ++i) {
    for (std::size_t j = pc + 1; j < k; ++j) {
      if (h(i, j) == 0) continue;
      const Integer a = h(i, pc);
      const Integer b = h(i, j);
      extended_gcd(a, b, g, s, t);
      const Integer ag = a / g;
      const Integer bg = b / g;
      for (std::size_t r = 0; r < h.rows(); ++r) {
        Integer cp = h(r, pc);
        Integer cj = h(r, j);
        h(r, pc) = s * cp + t * cj;
        h(r, j) = ag * cj - bg * cp;
      }
    }
    if (h(i, pc) == 0) continue;
    if (h(i, pc) < 0) h.negate_col(pc);
    for (std::size_t j = 0; j < pc; ++j) {
      Integer q = floor_div(h(i, j), h(i, pc));
      if (q != 0) h.add_col_multiple(j, pc, -q);
    }
    ++pc;
  }
  return h.block(0, 0, h.rows(), pc);
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

bool is_integral(const RatMatrix& m) {
  for (const auto& x : m.data())
    if (x.get_den() != 1) return false;
  return true;
}

bool is_integral(const RatVector& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1)
        throw Error(ErrorKind::IntegralityFailure, "non-integral entry " + m(i, j).get_str());
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

Integer content(const IntMatrix& m) {
  Integer g = 0;
  for (const auto& x : m.data()) g = gcd(g, x);
  return g;
}

RatMatrix hnf_basis(const RatMatrix& columns) {
  Integer l = 1;
  for (const auto& x : columns.data()) l = lcm(l, Integer(x.get_den()));
  IntMatrix scaled(columns.rows(), columns.cols());
  for (std::size_t i = 0; i < columns.rows(); ++i)
    for (std::size_t j = 0; j < columns.cols(); ++j) {
      Rational v = columns(i, j) * Rational(l);
      scaled(i, j) = v.get_num();
    }
  IntMatrix h = column_hnf(scaled);
  if (h.cols() != columns.rows())
    throw Error(ErrorKind::RankDeficient, "columns do not span a full-rank lattice");
  RatMatrix out = to_rational(h);
  const Rational inv(Integer(1), l);
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) {
      Rational v = out(i, j) * inv;
      out(i, j) = v;
    }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  Integer d = a(n - 1, n - 1);
  return sign > 0 ? d : Integer(-d);
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      a.add_row_multiple(i, k, -f);
    }
  }
  return det;
}

bool is_alternating(const IntMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  }
  return true;
}

bool is_symmetric(const RatMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

Integer pfaffian(const IntMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0 || !is_alternating(m))
    throw Error(ErrorKind::NotAlternating, "pfaffian needs an even-sized alternating matrix");
  if (m.rows() <= 8) {
    std::vector<std::size_t> idx(m.rows());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return pfaffian_expand(m, idx);
  }
  Rational pf = pfaffian_eliminate(to_rational(m));
  if (pf.get_den() != 1)
    throw Error(ErrorKind::IntegralityFailure, "pfaffian elimination lost exactness");
  return pf.get_num();
}

std::size_t rank_over_field(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(rank, p);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(rank, c);
      a.add_row_multiple(i, rank, -f);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_over_field(const IntMatrix& m) { return rank_over_field(to_rational(m)); }

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithForm f = snf(m);
  const std::size_t r = f.rank();
  const std::size_t n = m.cols();
  IntMatrix k = f.V.block(0, r, n, n - r);
  return column_hnf(k);
}

IntMatrix saturated_span(const IntMatrix& columns) {
  IntMatrix normals = kernel_basis(columns.transpose());
  if (normals.cols() == 0) return IntMatrix::identity(columns.rows());
  return kernel_basis(normals.transpose());
}

IntMatrix saturate(const IntMatrix& basis) {
  if (rank_over_field(basis) != basis.cols())
    throw Error(ErrorKind::RankDeficient, "saturate needs full column rank");
  return saturated_span(basis);
}

bool is_saturated(const IntMatrix& basis) {
  if (rank_over_field(basis) != basis.cols()) return false;
  return column_hnf(basis) == saturated_span(basis);
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw Error(ErrorKind::Degenerate, "singular matrix");
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    const Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      a.add_row_multiple(i, c, -f);
      inv.add_row_multiple(i, c, -f);
    }
  }
  return inv;
}

bool is_positive_definite(const RatMatrix& m) {
  if (!is_symmetric(m)) throw Error(ErrorKind::InvalidArgument, "positivity test needs symmetry");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      a.add_row_multiple(i, k, -f);
    }
  }
  return true;
}

Rational frac(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational r = x - Rational(fl);
  return r;
}

RatVector reduce_mod_one(const RatVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(frac(x));
  return out;
}

std::vector<CyclicFactor> torsion_structure(const std::vector<RatVector>& generators,
                                            std::size_t n) {
  RatMatrix span = to_rational(IntMatrix::identity(n));
  for (const auto& g : generators) {
    if (g.size() != n) throw Error(ErrorKind::DimensionMismatch, "generator length");
    span = hcat(span, RatMatrix::from_columns({g}, n));
  }
  RatMatrix basis = hnf_basis(span);
  // Coordinates of the standard lattice in the overlattice basis are integral.
  IntMatrix coords = to_integer(inverse(basis));
  SmithForm f = snf(coords);
  IntMatrix u_inv = to_integer(inverse(to_rational(f.U)));
  RatMatrix gens = basis * to_rational(u_inv);
  std::vector<CyclicFactor> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (f.D(i, i) == 1) continue;
    out.push_back({reduce_mod_one(gens.column(i)), f.D(i, i)});
  }
  return out;
}

}  // namespace ppav
