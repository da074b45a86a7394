#pragma once

// Hand-rolled random generators for the property tests. Every generator takes
// an explicit Rng so that a failing case can be replayed from its seed.

#include <cstddef>
#include <vector>

#include "hnc/matrix.hpp"
#include "hnc/polynomial.hpp"
#include "hnc/random.hpp"
#include "hnc/unipoly.hpp"

namespace hnc::testgen {

inline Polynomial polynomial(Rng& rng, std::size_t nvars, unsigned max_degree, std::size_t terms) {
  Polynomial p(nvars);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponent e(nvars, 0);
    const auto d = static_cast<unsigned>(rng.uniform_int(0, max_degree));
    for (unsigned k = 0; k < d; ++k) ++e[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(nvars) - 1))];
    p.add_term(e, rng.rational(7, 3));
  }
  return p;
}

inline PolyVectorField field(Rng& rng, std::size_t nvars, unsigned max_degree, std::size_t terms) {
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < nvars; ++i) c.push_back(polynomial(rng, nvars, max_degree, terms));
  return PolyVectorField(std::move(c));
}

inline UniPoly unipoly(Rng& rng, int max_degree) {
  std::vector<Rational> c;
  const long d = rng.uniform_int(0, max_degree);
  for (long k = 0; k <= d; ++k) c.push_back(rng.rational(9, 4));
  return UniPoly(std::move(c));
}

inline RationalMatrix matrix(Rng& rng, std::size_t rows, std::size_t cols, long num = 5) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational(num, 2);
  }
  return m;
}

/// rows x cols matrix of rank at most `rank`, as a product of random factors.
inline RationalMatrix low_rank_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t rank) {
  return multiply(matrix(rng, rows, rank), matrix(rng, rank, cols));
}

inline RationalVector vector(Rng& rng, std::size_t n, long num = 6) { return rng.rational_vector(n, num, 3); }

}  // namespace hnc::testgen
