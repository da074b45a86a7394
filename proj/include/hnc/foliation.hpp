#pragma once

// Foliations presented by polynomial generators, viewed as the anchored
// bundle rho: Q^N -> TQ^n sending e_j to the j-th generator.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hnc/grassmann.hpp"
#include "hnc/matrix.hpp"
#include "hnc/polynomial.hpp"

namespace hnc {

/// c(i, j, k) with [X_i, X_j] = sum_k c(i, j, k) X_k.
class StructureFunctions {
 public:
  StructureFunctions() = default;
  StructureFunctions(std::size_t generators, std::size_t nvars);

  std::size_t size() const { return n_; }
  std::size_t nvars() const { return nvars_; }
  const Polynomial& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[index(i, j, k)]; }
  Polynomial& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[index(i, j, k)]; }

  /// Sets c(i, j, .) and c(j, i, .) = -c(i, j, .).
  void set_pair(std::size_t i, std::size_t j, const std::vector<Polynomial>& coefficients);
  int max_degree() const;

  friend bool operator==(const StructureFunctions&, const StructureFunctions&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * n_ + j) * n_ + k; }
  std::size_t n_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Polynomial> data_;
};

class FoliationPresentation {
 public:
  FoliationPresentation(std::string name, std::vector<std::string> vars, std::vector<PolyVectorField> generators,
                        std::vector<std::string> generator_names = {});

  const std::string& name() const { return name_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  const std::vector<PolyVectorField>& generators() const { return generators_; }
  const PolyVectorField& generator(std::size_t j) const { return generators_.at(j); }
  /// n, the base dimension.
  std::size_t dim() const { return vars_.size(); }
  /// N, the number of generators (rank of the trivial anchored bundle).
  std::size_t size() const { return generators_.size(); }
  int max_generator_degree() const;

  bool has_structure_functions() const { return structure_.has_value(); }
  /// Throws MissingStructureFunctions when absent.
  const StructureFunctions& structure_functions() const;
  /// Checks antisymmetry and the membership identities; throws InvariantViolation naming the failing pair.
  void set_structure_functions(StructureFunctions c);

 private:
  std::string name_;
  std::vector<std::string> vars_;
  std::vector<std::string> generator_names_;
  std::vector<PolyVectorField> generators_;
  std::optional<StructureFunctions> structure_;
};

/// Throws InvariantViolation with a description of the first failing identity.
void check_structure_functions(const FoliationPresentation& p, const StructureFunctions& c);

/// n x N matrix whose j-th column holds the components of generator j.
PolyMatrix anchor_matrix(const FoliationPresentation& p);
RationalMatrix anchor_at(const FoliationPresentation& p, std::span<const Rational> m);

struct RegularData {
  std::size_t rank = 0;  // r, the generic rank of the anchor
  PolyMatrix anchor;
  bool is_regular(std::span<const Rational> m) const;
};
RegularData regular_data(const FoliationPresentation& p);

std::size_t leaf_dimension_at(const FoliationPresentation& p, std::span<const Rational> m);
Subspace kernel_at(const FoliationPresentation& p, std::span<const Rational> m);
/// Im rho*_m in the dual of Q^N, i.e. the annihilator of ker rho_m.
Subspace dual_image_at(const FoliationPresentation& p, std::span<const Rational> m);
/// (rho*_m eta)_b = sum_i eta_i X_b^i(m).
RationalVector pullback_covector(const FoliationPresentation& p, std::span<const Rational> m,
                                 std::span<const Rational> eta);

/// Default degree bound: max generator degree + n.
unsigned default_degree_bound(const FoliationPresentation& p);

/// Polynomial syzygies f with sum_j f_j X_j = 0 and deg f_j <= degree_bound,
/// as a basis of the solution space of the coefficient system.
std::vector<std::vector<Polynomial>> syzygies(const FoliationPresentation& p, unsigned degree_bound);
/// span{ f(m) : f a syzygy of degree <= D }.
Subspace strong_kernel_at(const FoliationPresentation& p, std::span<const Rational> m, unsigned degree_bound);
Subspace strong_kernel_at(const std::vector<std::vector<Polynomial>>& syzygy_basis, std::size_t generators,
                          std::span<const Rational> m);

/// Polynomial structure functions of degree <= D, or nullopt if some bracket
/// has no such expansion at this bound.
std::optional<StructureFunctions> solve_structure_functions(const FoliationPresentation& p, unsigned degree_bound);

class IsotropyAlgebra {
 public:
  RationalVector point;
  Subspace ambient;  // ker rho_m
  Subspace sker;     // degree-bounded strong kernel
  unsigned degree_bound = 0;
  std::vector<RationalVector> quotient_basis;  // representatives in ker rho_m
  /// bracket_table[a][b] = coordinates of [q_a, q_b] in the quotient basis.
  std::vector<std::vector<RationalVector>> bracket_table;

  std::size_t dim() const { return quotient_basis.size(); }
  /// Constant-lift bracket sum_{i,j} u_i v_j c(i,j,k)(m) e_k.
  RationalVector lift_bracket(std::span<const Rational> u, std::span<const Rational> v) const;
  /// Coordinates of w in the quotient basis (its class mod sker); throws if w is not in ker rho_m.
  RationalVector quotient_coordinates(std::span<const Rational> w) const;
  /// Bracket of quotient coordinate vectors through the table.
  RationalVector bracket(std::span<const Rational> a, std::span<const Rational> b) const;

  /// c(i, j, k) evaluated at the point.
  std::vector<std::vector<RationalVector>> constants;

 private:
  friend IsotropyAlgebra isotropy_algebra(const FoliationPresentation&, std::span<const Rational>, unsigned);
  RationalMatrix decomposition_;  // rows: quotient basis then sker basis
};

IsotropyAlgebra isotropy_algebra(const FoliationPresentation& p, std::span<const Rational> m, unsigned degree_bound);

/// Cyclic sum over (i, j, l) of [[e_i, e_j], e_l] expanded through the
/// structure functions and the anchor. Indexed by the triple i < j < l.
struct JacobiDefect {
  std::size_t i, j, l;
  std::vector<Polynomial> value;
};
std::vector<JacobiDefect> jacobi_defects(const FoliationPresentation& p);
bool satisfies_jacobi(const FoliationPresentation& p);

/// The presentation with an extra generator sum_j combination[j] * X_j, and
/// the bundle map psi: Q^{N+1} -> Q^N with psi(e_j) = e_j, psi(e_N) = combination.
struct Augmentation {
  FoliationPresentation presentation;
  std::vector<Polynomial> combination;
  RationalMatrix projection_at(std::span<const Rational> m) const;
};
Augmentation augment(const FoliationPresentation& p, const std::vector<Polynomial>& combination,
                     const std::string& generator_name, unsigned structure_degree_bound);

}  // namespace hnc
