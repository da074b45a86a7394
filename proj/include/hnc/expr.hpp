#pragma once

// Text forms of polynomials, vector fields and operator words.
//
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | compose
//   compose := power ('.' power)*
//   power   := primary ('^' exponent)?
//   primary := INTEGER | NAME | 'd/d' NAME | '(' sum ')'
//
// Division is only by nonzero constants, so "3/4*x" and "x/2" are fine.
// `d/dx` is the coordinate field of the variable x; `.` composes generator
// words, e.g. "x*g1.g2 - g3". See docs/preset_format.md.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hnc/errors.hpp"
#include "hnc/polynomial.hpp"

namespace hnc {

/// coefficient * X_{letters[0]} o X_{letters[1]} o ...; an empty word is a
/// degree-0 (multiplication) term.
struct OperatorWord {
  Polynomial coefficient;
  std::vector<std::size_t> letters;

  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;
};

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars);
PolyVectorField parse_vector_field(std::string_view text, const std::vector<std::string>& vars);
/// Words with merged coefficients, ordered by (length, letters). Variable
/// names may appear in coefficients.
std::vector<OperatorWord> parse_operator(std::string_view text, const std::vector<std::string>& generators,
                                         const std::vector<std::string>& vars);

std::string to_string(const Polynomial& p, const std::vector<std::string>& vars);
std::string to_string(const PolyVectorField& x, const std::vector<std::string>& vars);
std::string to_string(const std::vector<OperatorWord>& words, const std::vector<std::string>& generators,
                      const std::vector<std::string>& vars);

/// Adds like words and drops zero coefficients; result ordered by (length, letters).
std::vector<OperatorWord> canonicalize_words(const std::vector<OperatorWord>& words, std::size_t nvars);

/// Default variable names for generated rings: x1..xn.
std::vector<std::string> numbered_names(const std::string& stem, std::size_t count);

}  // namespace hnc
