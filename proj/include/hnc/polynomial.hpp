#pragma once

// Sparse multivariate polynomials over Q and polynomial vector fields.
//
// Variables are positional; names live with whoever owns the ring (the
// foliation presentation, the parser). Terms are kept in graded
// lexicographic order with x_0 > x_1 > ... so that equal polynomials have
// identical term maps.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hnc/rational.hpp"

namespace hnc {

using Exponent = std::vector<std::uint32_t>;

unsigned total_degree(const Exponent& e);

/// Ascending graded lexicographic order.
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLexLess>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(Exponent exponent, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Lowest total degree among the terms; -1 for zero.
  int min_degree() const;
  bool is_homogeneous() const;
  /// Degree in the variables [first, first+count).
  int degree_in(std::size_t first, std::size_t count) const;

  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const;
  /// Largest term in graded-lex order. Requires !is_zero().
  const std::pair<const Exponent, Rational>& leading_term() const { return *terms_.rbegin(); }

  void add_term(const Exponent& e, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t var) const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;
  /// Substitutes values[i] for x_i; all values must share one ring.
  Polynomial substitute(std::span<const Polynomial> values) const;
  /// Substitutes the given rational values for the variables in [first, first+values.size()).
  Polynomial partial_evaluate(std::size_t first, std::span<const Rational> values) const;
  /// Re-homes the polynomial in a ring of `nvars` variables, moving x_i to x_{offset+i}.
  Polynomial embed(std::size_t nvars, std::size_t offset) const;

  /// Terms whose degree in [first, first+count) equals `degree`.
  Polynomial homogeneous_part_in(std::size_t first, std::size_t count, unsigned degree) const;

  /// Exact quotient a / b. Returns nullopt if b does not divide a.
  static std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// Exact division; throws std::domain_error if the division is not exact.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// A polynomial vector field sum_i components[i] * d/dx_i.
class PolyVectorField {
 public:
  PolyVectorField() = default;
  explicit PolyVectorField(std::size_t nvars);
  explicit PolyVectorField(std::vector<Polynomial> components);

  std::size_t nvars() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  Polynomial& operator[](std::size_t i) { return components_[i]; }

  bool is_zero() const;
  int degree() const;
  /// Every component homogeneous of one common degree (the zero field counts).
  std::optional<unsigned> homogeneous_degree() const;

  /// X[f] = sum_i X_i df/dx_i.
  Polynomial apply(const Polynomial& f) const;
  std::vector<double> evaluate(std::span<const double> point) const;
  RationalVector evaluate(std::span<const Rational> point) const;

  PolyVectorField& operator+=(const PolyVectorField& other);
  PolyVectorField& operator-=(const PolyVectorField& other);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
  friend PolyVectorField operator*(const Polynomial& f, const PolyVectorField& x);
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<Polynomial> components_;
};

/// [X, Y]_i = sum_j (X_j d_j Y_i - Y_j d_j X_i).
PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y);

/// All exponents of total degree exactly `degree` in `nvars` variables, in
/// descending graded-lex order.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned degree);
/// All exponents of total degree <= `degree`, ascending by degree.
std::vector<Exponent> monomials_up_to(std::size_t nvars, unsigned degree);

}  // namespace hnc
