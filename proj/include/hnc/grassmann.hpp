#pragma once

// Linear subspaces of Q^N in canonical form, Pluecker coordinates and exact
// limits of kernels along polynomial arcs.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hnc/linalg.hpp"
#include "hnc/matrix.hpp"
#include "hnc/polynomial.hpp"
#include "hnc/unipoly.hpp"

namespace hnc {

/// A subspace stored by its reduced echelon basis and its Pluecker vector
/// (maximal minors in lexicographic order of column subsets, scaled to a
/// primitive integer vector with positive first nonzero entry).
class Subspace {
 public:
  Subspace() = default;

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }
  const RationalVector& plucker() const { return plucker_; }
  std::vector<RationalVector> basis_vectors() const;

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.plucker_ == b.plucker_;
  }
  /// Lexicographic on (dim, Pluecker vector); gives deterministic ordering of samples.
  friend bool operator<(const Subspace& a, const Subspace& b);

  friend Subspace make_subspace(const RationalMatrix& rows);

 private:
  std::size_t ambient_ = 0;
  RationalMatrix basis_;
  RationalVector plucker_;
};

Subspace make_subspace(const RationalMatrix& rows);
/// Span of the given vectors in Q^ambient_dim.
Subspace make_subspace(const std::vector<RationalVector>& vectors, std::size_t ambient_dim);
Subspace zero_subspace(std::size_t ambient_dim);
Subspace full_space(std::size_t ambient_dim);

/// Covectors vanishing on V, in the dual of the same coordinates.
Subspace annihilator(const Subspace& v);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// Increasing k-element subsets of {0..n-1}, in lexicographic order.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);

/// Raw maximal minors of a k x N matrix (no normalisation).
RationalVector plucker_vector(const RationalMatrix& rows);
std::vector<UniPoly> plucker_vector(const UniPolyMatrix& rows);

/// Rebuilds the k-dimensional subspace with Pluecker vector p. p must be a
/// nonzero decomposable vector of length C(N, k).
Subspace from_plucker(std::span<const Rational> p, std::size_t ambient_dim, std::size_t k);

/// A polynomial arc t -> x(t) with x(0) = center.
class Curve {
 public:
  Curve(RationalVector center, std::vector<UniPoly> components, std::string label = "");

  static Curve constant(const RationalVector& m);
  /// m + t d
  static Curve ray(const RationalVector& m, const RationalVector& d);

  const RationalVector& center() const { return center_; }
  const std::vector<UniPoly>& components() const { return components_; }
  const std::string& label() const { return label_; }
  bool is_constant() const;
  std::vector<double> evaluate(double t) const;
  RationalVector evaluate(const Rational& t) const;

 private:
  RationalVector center_;
  std::vector<UniPoly> components_;
  std::string label_;
};

/// p(x(t)) for a polynomial in as many variables as the curve has components.
UniPoly substitute(const Polynomial& p, const Curve& c);
UniPolyMatrix substitute(const PolyMatrix& m, const Curve& c);

/// Everything computed on the way to a limit; used by the float oracle.
struct LimitTrace {
  Subspace limit;
  /// When the kernel is larger than half the ambient space the limit of the
  /// row space is computed instead and the kernel limit is its annihilator.
  bool via_row_space = false;
  /// Pluecker polynomials of the space actually tracked (kernel or row space).
  std::vector<UniPoly> plucker;
  std::size_t tracked_dim = 0;
  Subspace tracked_limit;
  std::size_t valuation = 0;
};

/// lim_{t->0} ker M(x(t)). Throws CurveNotGeneric if the kernel over Q(t)
/// does not have dimension expected_dim.
Subspace limit_along_curve(const PolyMatrix& m, const Curve& curve, std::size_t expected_dim);
LimitTrace trace_limit_along_curve(const PolyMatrix& m, const Curve& curve, std::size_t expected_dim);

/// Largest principal angle between two subspaces of equal dimension.
double subspace_distance(const Subspace& v, const Subspace& w);
/// Same, for float bases given as rows.
double subspace_distance(const std::vector<std::vector<double>>& v, const std::vector<std::vector<double>>& w);

std::vector<std::vector<double>> to_double_rows(const RationalMatrix& m);

/// Evaluates the Pluecker polynomials of a trace at t in floating point,
/// normalises them and rebuilds a float basis of the tracked space.
std::vector<std::vector<double>> float_tracked_basis(const LimitTrace& trace, double t);

}  // namespace hnc
