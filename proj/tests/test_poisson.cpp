#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "hnc/errors.hpp"
#include "hnc/expr.hpp"
#include "hnc/poisson.hpp"
#include "hnc/preset.hpp"

using namespace hnc;

namespace {

RationalVector V(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

const std::vector<std::string> dual_names{"x", "y", "z", "a", "b", "c"};

Polynomial D(const std::string& s) { return parse_polynomial(s, dual_names); }

}  // namespace

TEST_CASE("the linear Poisson bracket of so(3)") {
  const auto p = load_preset("so3_r3").presentation;
  CHECK(poisson_bracket(p, D("a"), D("b")) == D("c"));
  CHECK(poisson_bracket(p, D("b"), D("c")) == D("a"));
  // {xi_1, f} = g1[f]
  CHECK(poisson_bracket(p, D("a"), D("y")) == D("z"));
  CHECK(poisson_bracket(p, D("x"), D("y")).is_zero());
  CHECK(poisson_jacobi_failures(p).empty());
  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = testgen::polynomial(rng, 6, 2, 3);
    const auto g = testgen::polynomial(rng, 6, 2, 3);
    const auto h = testgen::polynomial(rng, 6, 2, 2);
    CHECK((poisson_bracket(p, f, g) + poisson_bracket(p, g, f)).is_zero());
    CHECK(poisson_bracket(p, f, g * h) == poisson_bracket(p, f, g) * h + g * poisson_bracket(p, f, h));
    const auto jac = poisson_bracket(p, f, poisson_bracket(p, g, h)) + poisson_bracket(p, g, poisson_bracket(p, h, f)) +
                     poisson_bracket(p, h, poisson_bracket(p, f, g));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("Hamiltonian fields satisfy their defining identities") {
  for (const std::string name : {"so3_r3", "vanishing_origin_2", "vanishing_origin_3", "debord_line"}) {
    const auto p = load_preset(name).presentation;
    Rng rng(62);
    for (int trial = 0; trial < 4; ++trial) {
      RationalVector a = rng.rational_vector(p.size(), 3, 2);
      const auto h = hamiltonian_field(p, a);
      CHECK(h.field.nvars() == p.dim() + p.size());
      const auto rep = verify_hamiltonian_identities(p, h);
      CAPTURE(name);
      CHECK(rep.ok());
      CHECK(rep.failures.empty());
    }
  }
  const auto p = load_preset("so3_r3").presentation;
  const auto h3 = hamiltonian_field(p, 2);
  CHECK(h3.base_part() == p.generator(2));
}

TEST_CASE("RK4 reproduces the rotation flow") {
  const auto p = load_preset("so3_r3").presentation;
  const auto h = hamiltonian_field(p, 2);  // y d/dx - x d/dy
  const DualPoint start{{1.0, 0.0, 0.5}, {0.0, 1.0, 1.0}};
  const auto traj = flow_rk4(h, start, 1.0, 1000);
  REQUIRE(traj.states.size() == 1001);
  CHECK(traj.times.back() == doctest::Approx(1.0));
  const auto& end = traj.states.back();
  CHECK(end.x[0] == doctest::Approx(std::cos(1.0)).epsilon(1e-11));
  CHECK(end.x[1] == doctest::Approx(-std::sin(1.0)).epsilon(1e-11));
  CHECK(end.x[2] == doctest::Approx(0.5).epsilon(1e-12));
  // the fiber coordinates rotate too: |xi| is conserved
  const double n0 = start.xi[0] * start.xi[0] + start.xi[1] * start.xi[1] + start.xi[2] * start.xi[2];
  const double n1 = end.xi[0] * end.xi[0] + end.xi[1] * end.xi[1] + end.xi[2] * end.xi[2];
  CHECK(n1 == doctest::Approx(n0).epsilon(1e-11));
}

TEST_CASE("blow-up is reported") {
  const std::vector<std::string> x{"x"};
  FoliationPresentation p("blowup", x, {parse_vector_field("x^2*d/dx", x)});
  p.set_structure_functions(StructureFunctions(1, 1));
  const auto h = hamiltonian_field(p, 0);
  CHECK_THROWS_AS(flow_rk4(h, {{1.0}, {1.0}}, 10.0, 100), NonFiniteState);
}

TEST_CASE("invariance of the cone and the cotangent lift") {
  const auto p = load_preset("vanishing_origin_2").presentation;
  InvarianceConfig cfg;
  const auto inv = hn_invariance_test(p, V({1, 2}), V({0, 1, 0, 0}), V({2, -1}), cfg);
  CHECK(inv.passed);
  CHECK(inv.max_drift <= 1e-6);
  CHECK(inv.checkpoints.size() == cfg.checkpoints + 1);
  CHECK(inv.xi0 == pullback_covector(p, V({1, 2}), V({2, -1})));
  const auto lift = cotangent_lift_check(p, V({1, 2}), V({2, -1}), V({0, 1, 0, 0}), 1.0, 1000);
  CHECK(lift.passed);
  CHECK(lift.max_deviation <= 1e-9);
  const auto so3 = load_preset("so3_r3").presentation;
  const auto tilted = hn_invariance_test(so3, V({1, 1, 1}), V({1, 2, 0}), V({1, -1, 2}), cfg);
  CHECK(tilted.passed);
}
