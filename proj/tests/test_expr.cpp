#include <doctest.h>

#include <stdexcept>

#include "generators.hpp"
#include "hnc/errors.hpp"
#include "hnc/expr.hpp"

using namespace hnc;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

Polynomial var(std::size_t i) { return Polynomial::variable(3, i); }

}  // namespace

TEST_CASE("polynomial parsing follows the usual precedence") {
  const auto x = var(0);
  const auto y = var(1);
  CHECK(parse_polynomial("(x+y)^2 - 2*x*y", xyz) == x * x + y * y);
  CHECK(parse_polynomial("-x^2", xyz) == -(x * x));
  CHECK(parse_polynomial("2^3*x", xyz) == Rational(8) * x);
  CHECK(parse_polynomial("3/4*x", xyz) == Rational(3, 4) * x);
  CHECK(parse_polynomial("x/2 - y/3", xyz) == Rational(1, 2) * x - Rational(1, 3) * y);
  CHECK(parse_polynomial("x*(y - (z))", xyz) == x * y - x * var(2));
  CHECK(parse_polynomial("0", xyz).is_zero());
  CHECK(parse_polynomial("x - x", xyz).is_zero());
  CHECK(parse_polynomial("  1 +\n x ", xyz) == Polynomial::constant(3, 1) + x);
}

TEST_CASE("vector fields parse as polynomial combinations of coordinate fields") {
  const auto f = parse_vector_field("z*d/dy - y*d/dz", xyz);
  CHECK(f[0].is_zero());
  CHECK(f[1] == var(2));
  CHECK(f[2] == -var(1));
  const auto g = parse_vector_field("(x + y)*(d/dx - d/dy) + d/dz", xyz);
  CHECK(g[0] == var(0) + var(1));
  CHECK(g[1] == -(var(0) + var(1)));
  CHECK(g[2] == Polynomial::constant(3, 1));
  CHECK(parse_vector_field("0", xyz).is_zero());
  CHECK_THROWS_AS(parse_vector_field("x", xyz), ParseError);
  CHECK_THROWS_AS(parse_vector_field("d/dx*d/dy", xyz), ParseError);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_polynomial("x + * y", xyz);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
  try {
    parse_polynomial("x +\n  w", xyz);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_polynomial("x^-1", xyz), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^(1/2)", xyz), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^5000", xyz), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x/y", xyz), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x/0", xyz), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x + y", xyz), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", xyz), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x $ y", xyz), ParseError);
}

TEST_CASE("operator words merge and sort") {
  const std::vector<std::string> gens{"g1", "g2", "g3"};
  const auto words = parse_operator("x*g1.g2 - g3 + 2 + g3 - 2*g3", gens, xyz);
  REQUIRE(words.size() == 3);
  CHECK(words[0].letters.empty());
  CHECK(words[0].coefficient == Polynomial::constant(3, 2));
  CHECK(words[1].letters == std::vector<std::size_t>{2});
  CHECK(words[1].coefficient == Polynomial::constant(3, -2));
  CHECK(words[2].letters == std::vector<std::size_t>{0, 1});
  CHECK(words[2].coefficient == var(0));
  CHECK(parse_operator("g1.g2 - g1.g2", gens, xyz).empty());
  // composition distributes over sums
  const auto expanded = parse_operator("(g1 + g2).(g1 - g2)", gens, xyz);
  CHECK(expanded == parse_operator("g1.g1 - g1.g2 + g2.g1 - g2.g2", gens, xyz));
  CHECK_THROWS_AS(parse_operator("g1.g4", gens, xyz), ParseError);
  CHECK_THROWS_AS(parse_operator("g1", {"x"}, xyz), std::invalid_argument);
}

TEST_CASE("printing round-trips through the parser") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = testgen::polynomial(rng, 3, 4, 5);
    CAPTURE(to_string(p, xyz));
    CHECK(parse_polynomial(to_string(p, xyz), xyz) == p);
    const PolyVectorField f = testgen::field(rng, 3, 2, 3);
    CHECK(parse_vector_field(to_string(f, xyz), xyz) == f);
  }
  const std::vector<std::string> gens{"g1", "g2"};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<OperatorWord> w;
    for (int k = 0; k < 4; ++k) {
      std::vector<std::size_t> letters;
      for (long l = rng.uniform_int(0, 3); l > 0; --l) letters.push_back(static_cast<std::size_t>(rng.uniform_int(0, 1)));
      w.push_back({testgen::polynomial(rng, 3, 1, 2), letters});
    }
    const auto canon = canonicalize_words(w, 3);
    CHECK(parse_operator(to_string(canon, gens, xyz), gens, xyz) == canon);
  }
}

TEST_CASE("numbered names") {
  CHECK(numbered_names("u", 3) == std::vector<std::string>{"u1", "u2", "u3"});
  CHECK(numbered_names("x", 0).empty());
}
