#include "hnc/linalg.hpp"

#include <algorithm>

namespace hnc {

RationalMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(point);
  }
  return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!is_zero(b(k, j))) c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

RationalVector multiply(const RationalMatrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("multiply: shape mismatch");
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!is_zero(a(i, j)) && !is_zero(v[j])) out[i] += a(i, j) * v[j];
    }
  }
  return out;
}

RationalMatrix stack_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  return RationalMatrix::from_rows(rows, cols);
}

RrefResult rref(RationalMatrix a, std::size_t pivot_limit) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t limit = std::min(cols, pivot_limit);
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nz;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!is_zero(a(i, c))) {
        p = i;
        break;
      }
    }
    if (p == rows) continue;
    a.swap_rows(r, p);
    const Rational inv = 1 / a(r, c);
    nz.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (!is_zero(a(r, j))) {
        a(r, j) *= inv;
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Rational f = a(i, c);
      for (std::size_t j : nz) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

RationalMatrix kernel_basis(const RationalMatrix& m) {
  auto [red, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return RationalMatrix(0, n);
  auto canon = rref(stack_rows(basis, n));
  RationalMatrix out(canon.pivots.size(), n);
  for (std::size_t i = 0; i < canon.pivots.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = canon.reduced(i, j);
  }
  return out;
}

std::optional<RationalVector> solve_linear(const RationalMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_linear: rhs size mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [red, pivots] = rref(std::move(aug), m.cols());
  for (std::size_t i = pivots.size(); i < m.rows(); ++i) {
    if (!is_zero(red(i, m.cols()))) return std::nullopt;
  }
  RationalVector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
  return x;
}

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t i = c; i < n; ++i) {
      if (!is_zero(a(i, c))) {
        p = i;
        break;
      }
    }
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    const Rational inv = 1 / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      const Rational f = a(i, c) * inv;
      for (std::size_t j = c + 1; j < n; ++j) {
        if (!is_zero(a(c, j))) a(i, j) -= f * a(c, j);
      }
    }
  }
  return det;
}

std::size_t generic_rank(const PolyMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const std::size_t nv = m(0, 0).nvars();
  return fraction_free_rref(m, Polynomial::constant(nv, 1)).pivots.size();
}

std::size_t rank_over_qt(const UniPolyMatrix& m) { return fraction_free_rref(m, UniPoly(1)).pivots.size(); }

UniPolyMatrix kernel_basis_over_curve(const UniPolyMatrix& m) {
  auto ff = fraction_free_rref(m, UniPoly(1));
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ff.pivots) is_pivot[p] = true;
  std::vector<std::vector<UniPoly>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<UniPoly> v(n);
    v[f] = ff.pivot_value;
    for (std::size_t i = 0; i < ff.pivots.size(); ++i) v[ff.pivots[i]] = -ff.reduced(i, f);
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  UniPolyMatrix out(basis.size(), n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = basis[i][j];
  }
  return out;
}

UniPolyMatrix row_space_over_curve(const UniPolyMatrix& m) {
  auto ff = fraction_free_rref(m, UniPoly(1));
  UniPolyMatrix out(ff.pivots.size(), m.cols());
  for (std::size_t i = 0; i < ff.pivots.size(); ++i) {
    auto row = ff.reduced.row(i);
    make_primitive(row);
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = row[j];
  }
  return out;
}

UniPoly determinant(UniPolyMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return UniPoly(1);
  // Bareiss with row pivoting.
  UniPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return UniPoly();
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
    }
    prev = a(k, k);
  }
  UniPoly d = a(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

}  // namespace hnc
