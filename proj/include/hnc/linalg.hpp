#pragma once

// Exact linear algebra over Q, over Q[x] (fraction field Q(x)) and over
// Q[t] (fraction field Q(t)).

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "hnc/matrix.hpp"

namespace hnc {

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, in order
};

/// Gauss-Jordan with pivots normalised to 1. Pivots are only searched in
/// columns < pivot_limit (the remaining columns are carried along, which is
/// how augmented systems are solved).
RrefResult rref(RationalMatrix m, std::size_t pivot_limit = std::numeric_limits<std::size_t>::max());

std::size_t rank(const RationalMatrix& m);

/// Basis of {v : m v = 0}, returned as the rows of a matrix in reduced echelon form.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// One solution of m x = b (free variables set to zero), or nullopt when inconsistent.
std::optional<RationalVector> solve_linear(const RationalMatrix& m, std::span<const Rational> b);

Rational determinant(RationalMatrix m);

// --- fraction-free elimination over an integral domain ----------------------

template <class T>
struct FractionFreeForm {
  Matrix<T> reduced;                 // reduced rows; every pivot equals pivot_value
  std::vector<std::size_t> pivots;   // pivot column of row i
  T pivot_value;                     // common pivot (a leading minor of the input)
};

namespace detail {
inline int elimination_weight(const Polynomial& p) { return static_cast<int>(p.term_count()) + 4 * p.total_degree(); }
inline int elimination_weight(const UniPoly& p) { return p.degree(); }
}  // namespace detail

/// One-step fraction-free Gauss-Jordan elimination (Bareiss style). All
/// intermediate entries are minors of the input, so every division is exact;
/// this is checked at runtime by `exact_div`.
template <class T>
FractionFreeForm<T> fraction_free_rref(Matrix<T> a, const T& one) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  T prev = one;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    int best_weight = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (is_zero(a(i, c))) continue;
      int w = detail::elimination_weight(a(i, c));
      if (best == rows || w < best_weight) {
        best = i;
        best_weight = w;
      }
    }
    if (best == rows) continue;
    a.swap_rows(r, best);
    const T pivot = a(r, c);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const T factor = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        if (is_zero(factor)) {
          if (!is_zero(a(i, j))) a(i, j) = exact_div(pivot * a(i, j), prev);
        } else {
          a(i, j) = exact_div(pivot * a(i, j) - factor * a(r, j), prev);
        }
      }
      a(i, c) = one - one;
    }
    pivots.push_back(c);
    prev = pivot;
    ++r;
  }
  return {std::move(a), std::move(pivots), prev};
}

/// Rank over the fraction field of the polynomial ring.
std::size_t generic_rank(const PolyMatrix& m);

std::size_t rank_over_qt(const UniPolyMatrix& m);

/// Basis of the kernel over Q(t), cleared of denominators; each vector is
/// primitive (content 1). One row per basis vector.
UniPolyMatrix kernel_basis_over_curve(const UniPolyMatrix& m);

/// Polynomial rows spanning the Q(t)-row space of m (one per unit of rank), each primitive.
UniPolyMatrix row_space_over_curve(const UniPolyMatrix& m);

UniPoly determinant(UniPolyMatrix m);

}  // namespace hnc
