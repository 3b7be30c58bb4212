#include "torifold/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace torifold {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the lower-right block starting at (t, t); the
// scan order makes ties resolve to the lowest (row, col).
std::optional<Position> smith_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = a;
      }
    }
  }
  return best;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && m(i, c) != 0) m.add_row_multiple(i, r, Rational(-m(i, c)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

FiniteAbelianGroup FiniteAbelianGroup::from_chain(const std::vector<Integer>& chain) {
  FiniteAbelianGroup g;
  for (const auto& f : chain) {
    if (f <= 0) throw std::invalid_argument("invariant factors must be positive");
    if (f == 1) continue;
    if (!g.factors_.empty() && f % g.factors_.back() != 0) {
      throw std::invalid_argument("invariant factors do not form a divisibility chain");
    }
    g.factors_.push_back(f);
  }
  return g;
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(const Integer& n) { return from_chain({n}); }

Integer FiniteAbelianGroup::order() const {
  Integer o = 1;
  for (const auto& f : factors_) o *= f;
  return o;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + factors_[i].get_str();
  }
  return s;
}

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

IntVector primitive_vector(const IntVector& v) {
  const Integer g = content(v);
  if (g == 0) throw std::invalid_argument("zero vector has no primitive representative");
  IntVector out = v;
  for (auto& x : out) x /= g;
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool done = false;
    while (true) {
      const auto pivot = smith_pivot(d, t);
      if (!pivot) {
        done = true;
        break;
      }
      d.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, Integer(-q));
        u.add_row_multiple(i, t, Integer(-q));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = floor_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, Integer(-q));
        v.add_col_multiple(j, t, Integer(-q));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the remaining block; otherwise fold the offending
      // row into row t and reduce again.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      d.add_row_multiple(t, *offending, Integer(1));
      u.add_row_multiple(t, *offending, Integer(1));
    }
    if (done) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

HermiteDecomposition hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < m; ++c) {
    bool has_pivot = false;
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < m; ++i) {
        if (h(i, c) != 0 && (!best || abs(h(i, c)) < abs(h(*best, c)))) best = i;
      }
      if (!best) break;
      has_pivot = true;
      h.swap_rows(r, *best);
      u.swap_rows(r, *best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        const Integer q = floor_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, Integer(-q));
        u.add_row_multiple(i, r, Integer(-q));
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!has_pivot) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(h(i, c), h(r, c));
      if (q == 0) continue;
      h.add_row_multiple(i, r, Integer(-q));
      u.add_row_multiple(i, r, Integer(-q));
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  const IntMatrix h = hermite_normal_form(generators).H;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (const auto& x : h.row(i)) zero = zero && x == 0;
    if (!zero) nonzero = i + 1;
  }
  IntMatrix out(nonzero, h.cols());
  for (std::size_t i = 0; i < nonzero; ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
  return out;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return lattice_basis(a) == lattice_basis(b);
}

IntMatrix saturate(const IntMatrix& basis) {
  const std::size_t k = basis.rows();
  if (rank(basis) != k) throw std::invalid_argument("saturate: rows are linearly dependent");
  const SmithDecomposition snf = smith_normal_form(basis);
  const IntMatrix v_inv = unimodular_inverse(snf.V);
  IntMatrix leading(k, basis.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) leading(i, j) = v_inv(i, j);
  return lattice_basis(leading);
}

FiniteAbelianGroup quotient_group(const IntMatrix& lattice, const IntMatrix& sublattice) {
  if (lattice.cols() != sublattice.cols() || lattice.rows() != sublattice.rows()) {
    throw std::invalid_argument("quotient_group: rank mismatch");
  }
  const std::size_t k = lattice.rows();
  if (rank(lattice) != k || rank(sublattice) != k) {
    throw std::invalid_argument("quotient_group: rank mismatch");
  }
  const auto coords = coordinates_in_basis(to_rational(lattice), to_rational(sublattice));
  if (!coords) throw std::invalid_argument("quotient_group: not a sublattice");
  IntMatrix x(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if ((*coords)(i, j).get_den() != 1) throw std::invalid_argument("quotient_group: not a sublattice");
      x(i, j) = (*coords)(i, j).get_num();
    }
  }
  return FiniteAbelianGroup::from_chain(smith_normal_form(x).diagonal());
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const HermiteDecomposition hnf = hermite_normal_form(a.transpose());
  const std::size_t r = rank(a);
  const std::size_t n = a.cols();
  IntMatrix kernel(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) kernel(i - r, j) = hnf.U(i, j);
  if (kernel.rows() == 0) return kernel;
  return lattice_basis(kernel);
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  const auto inv = inverse(to_rational(a));
  if (!inv) throw std::invalid_argument("unimodular_inverse: singular matrix");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if ((*inv)(i, j).get_den() != 1) throw std::invalid_argument("unimodular_inverse: matrix not unimodular");
      out(i, j) = (*inv)(i, j).get_num();
    }
  }
  return out;
}

std::size_t rank(const RatMatrix& a) {
  RatMatrix m = a;
  return row_reduce(m).size();
}

std::size_t rank(const IntMatrix& a) { return rank(to_rational(a)); }

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != a.cols() || b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = a.rows();
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

std::optional<RatMatrix> coordinates_in_basis(const RatMatrix& basis, const RatMatrix& vectors) {
  if (basis.cols() != vectors.cols()) throw std::invalid_argument("coordinates_in_basis: shape mismatch");
  const RatMatrix bt = basis.transpose();
  const auto gram_inv = inverse(basis * bt);
  if (!gram_inv) throw std::invalid_argument("coordinates_in_basis: basis rows are dependent");
  RatMatrix x = vectors * bt * *gram_inv;
  if (!(x * basis == vectors)) return std::nullopt;
  return x;
}

}  // namespace torifold
