#pragma once

// Dense univariate polynomials over Q, used for the curve parameter t and
// for characteristic polynomials.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hnc/rational.hpp"

namespace hnc {

class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& c);  // NOLINT(google-explicit-constructor): constants promote
  UniPoly(int c) : UniPoly(Rational(c)) {}  // NOLINT
  explicit UniPoly(std::vector<Rational> coefficients);

  /// c * t^k
  static UniPoly monomial(std::size_t k, const Rational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Largest k with t^k | p; 0 for zero.
  std::size_t valuation() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& lead() const { return coeffs_.back(); }

  Rational evaluate(const Rational& t) const;
  double evaluate(double t) const;
  UniPoly derivative() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  /// Monic gcd (zero if both are zero).
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);

  UniPoly monic() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly exact_div(const UniPoly& a, const UniPoly& b);
inline bool is_zero(const UniPoly& p) { return p.is_zero(); }

/// Divides a polynomial vector by the gcd of its entries and scales it to
/// integer coefficients with content 1 and a positive leading coefficient on
/// its first nonzero entry.
void make_primitive(std::vector<UniPoly>& v);

/// Number of distinct real roots in (a, b], via a Sturm sequence. `p` must be nonzero.
std::size_t count_real_roots(const UniPoly& p, const Rational& a, const Rational& b);
/// Bound B with every real root in (-B, B).
Rational root_bound(const UniPoly& p);

}  // namespace hnc
