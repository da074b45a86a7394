#pragma once

// Floating-point evaluation of exact polynomials, for integrators and
// sphere sampling where the same polynomial is evaluated many times.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hnc/polynomial.hpp"

namespace hnc {

class CompiledPolynomial {
 public:
  CompiledPolynomial() = default;
  explicit CompiledPolynomial(const Polynomial& p);

  double operator()(std::span<const double> x) const;
  bool is_zero() const { return terms_.empty(); }

 private:
  struct Term {
    double coefficient;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (variable, exponent)
  };
  std::vector<Term> terms_;
};

/// Vector of compiled components with a shared evaluation.
class CompiledMap {
 public:
  CompiledMap() = default;
  explicit CompiledMap(const std::vector<Polynomial>& components);

  std::size_t size() const { return parts_.size(); }
  void operator()(std::span<const double> x, std::span<double> out) const;
  std::vector<double> operator()(std::span<const double> x) const;

 private:
  std::vector<CompiledPolynomial> parts_;
};

}  // namespace hnc
