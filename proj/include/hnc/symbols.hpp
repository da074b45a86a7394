#pragma once

// Longitudinal differential operators: formal words in the generators, their
// realization as differential operators, and their symbols on the dual of
// the anchored bundle.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hnc/errors.hpp"
#include "hnc/expr.hpp"
#include "hnc/foliation.hpp"
#include "hnc/hncone.hpp"

namespace hnc {

class Rng;

/// Formal sum of generator words with polynomial coefficients on the left.
class UEAElement {
 public:
  UEAElement() = default;
  UEAElement(std::size_t nvars, std::vector<OperatorWord> words);
  static UEAElement parse(std::string_view text, const FoliationPresentation& p);

  std::size_t nvars() const { return nvars_; }
  const std::vector<OperatorWord>& words() const { return words_; }
  std::size_t degree() const;
  bool is_zero() const { return words_.empty(); }

  friend UEAElement operator+(const UEAElement& a, const UEAElement& b);
  friend UEAElement operator-(const UEAElement& a, const UEAElement& b);
  friend bool operator==(const UEAElement&, const UEAElement&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<OperatorWord> words_;
};

/// Product in the enveloping algebra, moving coefficients to the left with
/// X . f = f X + rho(X)[f].
UEAElement multiply(const UEAElement& a, const UEAElement& b, const FoliationPresentation& p);

/// sum_alpha f_alpha(x) d^alpha with coefficients on the left.
class DiffOperator {
 public:
  using TermMap = std::map<Exponent, Polynomial>;

  DiffOperator() = default;
  explicit DiffOperator(std::size_t nvars) : nvars_(nvars) {}
  static DiffOperator multiplication(const Polynomial& f);
  static DiffOperator from_field(const PolyVectorField& x);
  /// d^alpha
  static DiffOperator derivative(const Exponent& alpha);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest |alpha| with a nonzero coefficient; -1 for zero.
  int order() const;
  void add_term(const Exponent& alpha, const Polynomial& f);

  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b);
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b);
  friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

DiffOperator compose(const DiffOperator& a, const DiffOperator& b);
Polynomial apply(const DiffOperator& d, const Polynomial& f);
DiffOperator realize(const UEAElement& element, const FoliationPresentation& p);
std::string to_string(const DiffOperator& d, const std::vector<std::string>& vars);

/// Sum over words of length k of coefficient(x) xi_{i1} ... xi_{ik}, as a
/// polynomial in (x_1..x_n, xi_1..xi_N).
Polynomial symbol_top(const UEAElement& element, std::size_t k, std::size_t generators);
/// Sum over |alpha| = k of f_alpha(x) eta^alpha, in (x_1..x_n, eta_1..eta_n).
Polynomial classical_principal_symbol(const DiffOperator& d, std::size_t k);

struct PullbackTrial {
  RationalVector point;
  RationalVector eta;
  Rational classical;  // principal symbol of the realization at (m, eta)
  Rational pulled;     // symbol_top at (m, rho*_m eta)
};
struct PullbackReport {
  std::size_t degree = 0;
  std::vector<PullbackTrial> trials;
  bool ok() const;
};
PullbackReport pullback_consistency(const UEAElement& element, const FoliationPresentation& p,
                                    const std::vector<std::pair<RationalVector, RationalVector>>& samples);
/// Seeded variant: regular points and covectors with small rational entries.
PullbackReport pullback_consistency(const UEAElement& element, const FoliationPresentation& p, Rng& rng,
                                    std::size_t trials);

/// sigma(m, B^T u) for the canonical basis B of `space`, a polynomial in r = dim(space) variables.
Polynomial symbol_on_fiber(const Polynomial& sigma, std::span<const Rational> m, const Subspace& space);

/// Random element with words of length <= max_degree and coefficients of degree <= 1.
UEAElement random_uea_element(const FoliationPresentation& p, Rng& rng, std::size_t max_degree, std::size_t terms);

class OddDegreeWarning : public Error {
 public:
  explicit OddDegreeWarning(std::size_t degree)
      : Error("symbol has odd degree " + std::to_string(degree) +
              "; strict positivity cannot hold, use the non-vanishing convention to force a verdict") {}
};

enum class PositivityConvention {
  StrictlyPositive,  // sigma > tol on every fiber sphere
  NonVanishing,      // |sigma| > tol on every fiber sphere
};

struct EllipticityConfig {
  double tolerance = 1e-9;
  std::size_t sphere_samples = 32;
  PositivityConvention convention = PositivityConvention::StrictlyPositive;
  CurveFamilyConfig curves;
};

struct FiberVerdict {
  Subspace space;
  bool elliptic = false;
  /// Minimum of sigma (or |sigma|) over the unit sphere of the fiber.
  double minimum = 0.0;
  std::optional<Rational> exact_minimum;
  bool identically_zero = false;
  std::string method;  // "quadratic-exact" or "sampled"
  /// Restricted symbol as a polynomial in fiber coordinates u1..ur.
  Polynomial restricted;
};

struct PointVerdict {
  RationalVector point;
  bool regular = false;
  std::vector<FiberVerdict> fibers;
  bool elliptic() const;
};

struct EllipticityReport {
  std::size_t degree = 0;
  PositivityConvention convention = PositivityConvention::StrictlyPositive;
  std::vector<PointVerdict> points;
  bool elliptic() const;
};

EllipticityReport ellipticity_check(const UEAElement& element, const FoliationPresentation& p,
                                    const std::vector<RationalVector>& points, const EllipticityConfig& config);

/// Quadratic form u^T Q u minimised over {u : |B^T u| = 1}: the smallest
/// root of det(Q - lambda B B^T). Exposed for testing.
struct QuadraticMinimum {
  double minimum = 0.0;  // smallest generalised eigenvalue
  double min_abs = 0.0;  // smallest |eigenvalue|
  std::optional<Rational> exact_minimum;
  std::optional<Rational> exact_min_abs;
  std::size_t roots_at_or_below = 0;  // roots <= tol (positive convention count)
  std::size_t roots_near_zero = 0;    // roots in [-tol, tol]
};
QuadraticMinimum quadratic_fiber_minimum(const Polynomial& restricted, const RationalMatrix& basis, double tolerance);

}  // namespace hnc
