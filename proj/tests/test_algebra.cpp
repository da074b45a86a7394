#include <doctest.h>

#include "generators.hpp"
#include "hnc/expr.hpp"
#include "hnc/linalg.hpp"
#include "hnc/polynomial.hpp"
#include "hnc/unipoly.hpp"

using namespace hnc;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

Polynomial P(const std::string& s) { return parse_polynomial(s, xyz); }

UniPoly T(std::vector<int> c) {
  std::vector<Rational> q(c.begin(), c.end());
  return UniPoly(std::move(q));
}

}  // namespace

TEST_CASE("polynomial ring laws on random inputs") {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testgen::polynomial(rng, 3, 3, 4);
    const auto b = testgen::polynomial(rng, 3, 3, 4);
    const auto c = testgen::polynomial(rng, 3, 2, 3);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    // Leibniz rule
    for (std::size_t v = 0; v < 3; ++v) CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    // exact division undoes multiplication
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
    const RationalVector pt = testgen::vector(rng, 3);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
  }
}

TEST_CASE("polynomial helpers") {
  CHECK(P("x^2*y + y^3").total_degree() == 3);
  CHECK(P("x^2*y + y^3").is_homogeneous());
  CHECK_FALSE(P("x + 1").is_homogeneous());
  CHECK(P("x + x^3").min_degree() == 1);
  CHECK(P("(x+y)^3") == P("x+y").pow(3));
  CHECK(P("x*y + 3").constant_term() == 3);
  CHECK_FALSE(Polynomial::divide_exact(P("x^2 + 1"), P("x")).has_value());
  CHECK_THROWS(exact_div(P("x^2 + 1"), P("x")));
  // substitution composes
  const std::vector<Polynomial> sub{P("y"), P("x + z"), P("2")};
  CHECK(P("x*y - z").substitute(sub) == P("x*y + y*z - 2"));
  const RationalVector yz{Rational(2), Rational(-1)};
  CHECK(P("x*y + z^2").partial_evaluate(1, yz) == P("2*x + 1"));
  CHECK(P("x*y").embed(5, 2) == Polynomial::variable(5, 2) * Polynomial::variable(5, 3));
  CHECK(P("x^2*y + x*y^2 + y^3").homogeneous_part_in(0, 1, 1) == P("x*y^2"));
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_up_to(4, 4).size() == 70);
}

TEST_CASE("Lie bracket is antisymmetric and satisfies Jacobi") {
  Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = testgen::field(rng, 3, 2, 2);
    const auto b = testgen::field(rng, 3, 2, 2);
    const auto c = testgen::field(rng, 3, 2, 2);
    CHECK((lie_bracket(a, b) + lie_bracket(b, a)).is_zero());
    const auto jac = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) + lie_bracket(c, lie_bracket(a, b));
    CHECK(jac.is_zero());
    // [X, Y] f = X Y f - Y X f
    const auto f = testgen::polynomial(rng, 3, 3, 3);
    CHECK(lie_bracket(a, b).apply(f) == a.apply(b.apply(f)) - b.apply(a.apply(f)));
  }
  // so(3): [z d/dy - y d/dz, x d/dz - z d/dx] = y d/dx - x d/dy
  const auto g1 = parse_vector_field("z*d/dy - y*d/dz", xyz);
  const auto g2 = parse_vector_field("x*d/dz - z*d/dx", xyz);
  CHECK(lie_bracket(g1, g2) == parse_vector_field("y*d/dx - x*d/dy", xyz));
  CHECK(g1.homogeneous_degree() == 1u);
  CHECK(PolyVectorField(3).homogeneous_degree() == 0u);
}

TEST_CASE("univariate division, gcd and valuation") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testgen::unipoly(rng, 6);
    auto b = testgen::unipoly(rng, 4);
    if (b.is_zero()) b = UniPoly(1);
    const auto [q, r] = UniPoly::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    const auto g = UniPoly::gcd(a * b, b * b);
    CHECK(UniPoly::divmod(g, b).second.is_zero());
    CHECK(UniPoly::divmod(a * b, g).second.is_zero());
  }
  CHECK(T({0, 0, 3, 1}).valuation() == 2);
  CHECK(UniPoly::gcd(T({-1, 0, 1}), T({1, 2, 1})) == T({1, 1}));
}

TEST_CASE("Sturm root counting against known roots") {
  // (t - 1)(t - 2)(t + 3)(t - 1/2)
  const UniPoly p = T({-1, 1}) * T({-2, 1}) * T({3, 1}) * UniPoly(std::vector<Rational>{Rational(-1, 2), Rational(1)});
  CHECK(count_real_roots(p, -10, 10) == 4);
  CHECK(count_real_roots(p, 0, 1) == 2);   // 1/2 and 1 (right endpoint included)
  CHECK(count_real_roots(p, 1, 2) == 1);   // 2 only
  CHECK(count_real_roots(p, -3, 0) == 0);  // -3 is excluded
  CHECK(count_real_roots(T({1, 0, 1}), -100, 100) == 0);
  CHECK(count_real_roots(T({0, 0, 1}), -1, 1) == 1);  // double root counted once
  const Rational b = root_bound(p);
  CHECK(b > 3);
  CHECK(count_real_roots(p, -b, b) == 4);
}

TEST_CASE("rational linear algebra") {
  Rng rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.uniform_int(1, 5));
    const std::size_t cols = static_cast<std::size_t>(rng.uniform_int(1, 6));
    const std::size_t r = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(std::min(rows, cols))));
    const auto m = testgen::low_rank_matrix(rng, rows, cols, r);
    const auto k = kernel_basis(m);
    CHECK(rank(m) + k.rows() == cols);
    CHECK(rank(m) <= r);
    for (std::size_t i = 0; i < k.rows(); ++i) CHECK(is_zero_vector(multiply(m, k.row(i))));
    const RationalVector x = testgen::vector(rng, cols);
    const RationalVector b = multiply(m, x);
    const auto sol = solve_linear(m, b);
    REQUIRE(sol.has_value());
    CHECK(multiply(m, *sol) == b);
  }
  RationalMatrix inconsistent(2, 1);
  inconsistent(0, 0) = 1;
  inconsistent(1, 0) = 1;
  CHECK_FALSE(solve_linear(inconsistent, RationalVector{Rational(1), Rational(2)}).has_value());
}

TEST_CASE("determinants against closed forms") {
  // Vandermonde on 1,2,3,4: product of differences = 12
  RationalMatrix v(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    v(i, 0) = 1;
    for (std::size_t j = 1; j < 4; ++j) v(i, j) = v(i, j - 1) * static_cast<long>(i + 1);
  }
  CHECK(determinant(v) == 12);
  // 3x3 Hilbert matrix: 1/2160
  RationalMatrix h(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) h(i, j) = Rational(1, static_cast<long>(i + j + 1));
  }
  CHECK(determinant(h) == Rational(1, 2160));
  // det [[t, 1], [1, t]] = t^2 - 1
  UniPolyMatrix m(2, 2);
  m(0, 0) = T({0, 1});
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = T({0, 1});
  CHECK(determinant(m) == T({-1, 0, 1}));
  // multiplicativity on random matrices
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = testgen::matrix(rng, 4, 4);
    const auto b = testgen::matrix(rng, 4, 4);
    CHECK(determinant(multiply(a, b)) == determinant(a) * determinant(b));
  }
}

TEST_CASE("kernels over Q(t) specialise to kernels at generic t") {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.uniform_int(1, 3));
    const std::size_t cols = static_cast<std::size_t>(rng.uniform_int(2, 5));
    UniPolyMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = testgen::unipoly(rng, 2);
    }
    const std::size_t r = rank_over_qt(m);
    const auto k = kernel_basis_over_curve(m);
    CHECK(k.rows() + r == cols);
    const auto rs = row_space_over_curve(m);
    CHECK(rs.rows() == r);
    // evaluate at a few rationals: kernel vectors annihilated, ranks agree generically
    for (const Rational& t : {Rational(7, 3), Rational(-11, 5)}) {
      RationalMatrix mt(rows, cols);
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) mt(i, j) = m(i, j).evaluate(t);
      }
      for (std::size_t i = 0; i < k.rows(); ++i) {
        RationalVector kv;
        for (std::size_t j = 0; j < cols; ++j) kv.push_back(k(i, j).evaluate(t));
        CHECK(is_zero_vector(multiply(mt, kv)));
      }
      CHECK(rank(mt) <= r);
    }
  }
}

TEST_CASE("generic rank over Q(x)") {
  PolyMatrix m(2, 3);
  m(0, 0) = P("x");
  m(0, 1) = P("y");
  m(0, 2) = P("z");
  m(1, 0) = P("x^2");
  m(1, 1) = P("x*y");
  m(1, 2) = P("x*z");
  CHECK(generic_rank(m) == 1);
  m(1, 2) = P("x*z + 1");
  CHECK(generic_rank(m) == 2);
}
