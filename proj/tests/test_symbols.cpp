#include <doctest.h>

#include "generators.hpp"
#include "hnc/expr.hpp"
#include "hnc/preset.hpp"
#include "hnc/symbols.hpp"

using namespace hnc;

namespace {

RationalVector V(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

DiffOperator random_operator(Rng& rng, std::size_t n) {
  DiffOperator d(n);
  for (int t = 0; t < 3; ++t) {
    Exponent a(n, 0);
    for (long k = rng.uniform_int(0, 2); k > 0; --k) ++a[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(n) - 1))];
    d.add_term(a, testgen::polynomial(rng, n, 2, 2));
  }
  return d;
}

}  // namespace

TEST_CASE("differential operators compose like functions") {
  Rng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_operator(rng, 2);
    const auto b = random_operator(rng, 2);
    const auto c = random_operator(rng, 2);
    const auto f = testgen::polynomial(rng, 2, 4, 4);
    CHECK(apply(compose(a, b), f) == apply(a, apply(b, f)));
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, b + c) == compose(a, b) + compose(a, c));
  }
  // [d/dx, x] = 1
  Exponent dx{1, 0};
  const auto x = DiffOperator::multiplication(Polynomial::variable(2, 0));
  const auto comm = compose(DiffOperator::derivative(dx), x) - compose(x, DiffOperator::derivative(dx));
  CHECK(comm == DiffOperator::multiplication(Polynomial::constant(2, 1)));
  CHECK(comm.order() == 0);
  CHECK(DiffOperator(2).order() == -1);
}

TEST_CASE("realization is an algebra morphism") {
  Rng rng(52);
  for (const std::string name : {"so3_r3", "vanishing_origin_2", "order2_r2", "debord_line"}) {
    const auto p = load_preset(name).presentation;
    for (int trial = 0; trial < 8; ++trial) {
      const auto a = random_uea_element(p, rng, 2, 3);
      const auto b = random_uea_element(p, rng, 2, 3);
      CAPTURE(name);
      CHECK(realize(multiply(a, b, p), p) == compose(realize(a, p), realize(b, p)));
      CHECK(realize(a + b, p) == realize(a, p) + realize(b, p));
    }
  }
}

TEST_CASE("so(3) Casimir on explicit functions") {
  const auto lp = load_preset("so3_r3");
  const auto& p = lp.presentation;
  const auto cas = realize(UEAElement::parse(resolve_operator(lp, "casimir"), p), p);
  const std::vector<std::string> xyz{"x", "y", "z"};
  CHECK(apply(cas, parse_polynomial("x^2 + y^2 + z^2", xyz)).is_zero());
  CHECK(apply(cas, parse_polynomial("x^2", xyz)) == parse_polynomial("2*y^2 + 2*z^2 - 4*x^2", xyz));
  // linear functions are eigenfunctions with eigenvalue -2
  CHECK(apply(cas, parse_polynomial("x", xyz)) == parse_polynomial("-2*x", xyz));
  const auto g1 = realize(UEAElement::parse("g1", p), p);
  const std::vector<std::string> xeta{"x", "y", "z", "a", "b", "c"};
  CHECK(classical_principal_symbol(g1, 1) == parse_polynomial("z*b - y*c", xeta));
  const auto sigma = symbol_top(UEAElement::parse("g1.g1 + g2.g2 + g3.g3 + x*g1", p), 2, 3);
  CHECK(sigma == parse_polynomial("a^2 + b^2 + c^2", xeta));
}

TEST_CASE("UEA products move coefficients to the left") {
  const auto p = load_preset("so3_r3").presentation;
  // g1 . y = y g1 + g1[y] = y g1 + z
  const auto a = UEAElement::parse("g1", p);
  const auto y = UEAElement::parse("y", p);
  CHECK(multiply(a, y, p) == UEAElement::parse("y*g1 + z", p));
  CHECK(UEAElement::parse("g1.g2 + 3", p).degree() == 2);
}

TEST_CASE("pull-back consistency on every preset") {
  Rng rng(53);
  for (const auto& name : builtin_preset_names()) {
    const auto p = load_preset(name).presentation;
    const auto e = random_uea_element(p, rng, 2, 3);
    const auto rep = pullback_consistency(e, p, rng, 5);
    CAPTURE(name);
    CHECK(rep.trials.size() == 5);
    CHECK(rep.ok());
  }
}

TEST_CASE("quadratic minima over fiber spheres") {
  const std::vector<std::string> u{"u1", "u2"};
  RationalMatrix id(2, 2);
  id(0, 0) = 1;
  id(1, 1) = 1;
  const auto q = quadratic_fiber_minimum(parse_polynomial("u1^2 + 4*u2^2", u), id, 1e-9);
  REQUIRE(q.exact_minimum.has_value());
  CHECK(*q.exact_minimum == 1);
  RationalMatrix b(2, 2);
  b(0, 0) = 2;
  b(1, 1) = 1;
  const auto q2 = quadratic_fiber_minimum(parse_polynomial("u1^2 + 4*u2^2", u), b, 1e-9);
  REQUIRE(q2.exact_minimum.has_value());
  CHECK(*q2.exact_minimum == Rational(1, 4));
  // indefinite form: eigenvalues -1 and 1
  const auto q3 = quadratic_fiber_minimum(parse_polynomial("u1^2 - u2^2", u), id, 1e-9);
  CHECK(*q3.exact_minimum == -1);
  CHECK(q3.exact_min_abs == Rational(1));
  CHECK(q3.roots_at_or_below == 1);
  // irrational minimum: the smallest eigenvalue of [[1,1],[1,0]] is (1 - sqrt 5)/2
  const auto q4 = quadratic_fiber_minimum(parse_polynomial("u1^2 + 2*u1*u2", u), id, 1e-9);
  CHECK_FALSE(q4.exact_minimum.has_value());
  CHECK(q4.minimum == doctest::Approx((1 - std::sqrt(5.0)) / 2).epsilon(1e-12));
}

TEST_CASE("ellipticity conventions") {
  const auto p = load_preset("debord_line").presentation;
  EllipticityConfig cfg;
  CHECK_THROWS_AS(ellipticity_check(UEAElement::parse("g1", p), p, {V({0})}, cfg), OddDegreeWarning);
  cfg.convention = PositivityConvention::NonVanishing;
  const auto rep = ellipticity_check(UEAElement::parse("g1", p), p, {V({0}), V({1})}, cfg);
  CHECK(rep.elliptic());
  const auto so3 = load_preset("so3_r3").presentation;
  EllipticityConfig strict;
  const auto quartic = ellipticity_check(UEAElement::parse("g1.g1.g1.g1 + g2.g2.g2.g2 + g3.g3.g3.g3", so3), so3,
                                         {V({1, 0, 0})}, strict);
  REQUIRE(quartic.points.size() == 1);
  CHECK(quartic.elliptic());
  for (const auto& f : quartic.points[0].fibers) CHECK(f.method == "sampled");
  // on the fiber span{e2*, e3*} the minimum of xi2^4 + xi3^4 on the unit circle is 1/2
  CHECK(quartic.points[0].fibers[0].minimum == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("symbols restricted to fibers") {
  const auto p = load_preset("so3_r3").presentation;
  const auto sigma = symbol_top(UEAElement::parse("g1.g1", p), 2, 3);
  const Subspace e23 = make_subspace({V({0, 1, 0}), V({0, 0, 1})}, 3);
  const Subspace e12 = make_subspace({V({1, 0, 0}), V({0, 1, 0})}, 3);
  CHECK(symbol_on_fiber(sigma, V({1, 0, 0}), e23).is_zero());
  CHECK(symbol_on_fiber(sigma, V({0, 0, 1}), e12) == parse_polynomial("u1^2", {"u1", "u2"}));
}
