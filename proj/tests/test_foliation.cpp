#include <doctest.h>

#include "generators.hpp"
#include "hnc/errors.hpp"
#include "hnc/expr.hpp"
#include "hnc/foliation.hpp"
#include "hnc/preset.hpp"

using namespace hnc;

namespace {

RationalVector V(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

FoliationPresentation so3() { return load_preset("so3_r3").presentation; }

FoliationPresentation so3_without_structure() {
  const std::vector<std::string> xyz{"x", "y", "z"};
  return FoliationPresentation("so3", xyz,
                               {parse_vector_field("z*d/dy - y*d/dz", xyz), parse_vector_field("x*d/dz - z*d/dx", xyz),
                                parse_vector_field("y*d/dx - x*d/dy", xyz)});
}

}  // namespace

TEST_CASE("structure functions are checked exactly") {
  auto p = so3_without_structure();
  CHECK_FALSE(p.has_structure_functions());
  CHECK_THROWS_AS(p.structure_functions(), MissingStructureFunctions);
  StructureFunctions wrong(3, 3);
  std::vector<Polynomial> minus_g3(3, Polynomial(3));
  minus_g3[2] = Polynomial::constant(3, -1);
  wrong.set_pair(0, 1, minus_g3);
  try {
    p.set_structure_functions(wrong);
    FAIL("expected an invariant violation");
  } catch (const InvariantViolation& e) {
    CHECK(std::string(e.what()).find("g1") != std::string::npos);
  }
  const auto solved = solve_structure_functions(p, 2);
  REQUIRE(solved.has_value());
  CHECK_NOTHROW(check_structure_functions(p, *solved));
  CHECK((*solved)(0, 1, 2) == Polynomial::constant(3, 1));
  CHECK((*solved)(1, 0, 2) == Polynomial::constant(3, -1));
}

TEST_CASE("anchor, ranks and kernels of so(3)") {
  const auto p = so3();
  const auto reg = regular_data(p);
  CHECK(reg.rank == 2);
  CHECK_FALSE(reg.is_regular(V({0, 0, 0})));
  CHECK(reg.is_regular(V({1, 0, 0})));
  CHECK(leaf_dimension_at(p, V({0, 0, 0})) == 0);
  CHECK(kernel_at(p, V({0, 0, 0})).dim() == 3);
  // ker rho_v = span v
  CHECK(kernel_at(p, V({1, 2, 3})) == make_subspace({V({1, 2, 3})}, 3));
  CHECK(dual_image_at(p, V({1, 2, 3})) == annihilator(kernel_at(p, V({1, 2, 3}))));
  // (rho* eta)_b = eta . X_b(m)
  const auto xi = pullback_covector(p, V({1, 0, 0}), V({0, 1, 1}));
  CHECK(xi == V({0, 1, -1}));
}

TEST_CASE("syzygies and strong kernels") {
  const auto p = so3();
  const auto syz = syzygies(p, 1);
  REQUIRE(syz.size() == 1);
  // x g1 + y g2 + z g3 = 0
  const RationalVector at = V({2, 3, 5});
  RationalVector value;
  for (const auto& f : syz[0]) value.push_back(f.evaluate(at));
  CHECK(make_subspace({value}, 3) == make_subspace({at}, 3));
  CHECK(strong_kernel_at(p, V({0, 0, 0}), default_degree_bound(p)).dim() == 0);
  CHECK(strong_kernel_at(p, V({1, 1, 0}), default_degree_bound(p)) == kernel_at(p, V({1, 1, 0})));
  CHECK(default_degree_bound(p) == 4);
}

TEST_CASE("strong kernel sits inside the kernel at random points") {
  Rng rng(31);
  for (const std::string name : {"so3_r3", "vanishing_origin_2", "order2_r2"}) {
    const auto p = load_preset(name).presentation;
    const auto syz = syzygies(p, default_degree_bound(p));
    const auto reg = regular_data(p);
    for (int trial = 0; trial < 10; ++trial) {
      RationalVector m = rng.rational_vector(p.dim(), 3, 2);
      if (trial == 0) m.assign(p.dim(), Rational(0));
      const auto ker = kernel_at(p, m);
      const auto sker = strong_kernel_at(syz, p.size(), m);
      CHECK(ker.contains(sker));
      CHECK(ker.dim() == p.size() - leaf_dimension_at(p, m));
      if (reg.is_regular(m)) CHECK(sker == ker);
    }
  }
}

TEST_CASE("isotropy algebras") {
  SUBCASE("so(3) at the origin is so(3)") {
    const auto p = so3();
    const auto g = isotropy_algebra(p, V({0, 0, 0}), 4);
    REQUIRE(g.dim() == 3);
    const auto e = [](std::size_t i) {
      RationalVector v(3, Rational(0));
      v[i] = 1;
      return v;
    };
    // coordinates are taken against the representatives, which are the generators here
    for (std::size_t i = 0; i < 3; ++i) CHECK(g.quotient_coordinates(g.quotient_basis[i]) == e(i));
    CHECK(g.bracket(e(0), e(1)) == e(2));
    CHECK(g.bracket(e(1), e(2)) == e(0));
    CHECK(g.bracket(e(2), e(0)) == e(1));
  }
  SUBCASE("gl_2 at the origin") {
    const auto p = load_preset("vanishing_origin_2").presentation;
    const auto g = isotropy_algebra(p, V({0, 0}), default_degree_bound(p));
    REQUIRE(g.dim() == 4);
    // [g12, g21] = g11 - g22, via constant lifts
    const auto br = g.lift_bracket(V({0, 1, 0, 0}), V({0, 0, 1, 0}));
    CHECK(br == V({1, 0, 0, -1}));
  }
  SUBCASE("gl_2 at a regular point is abelian and zero") {
    const auto p = load_preset("vanishing_origin_2").presentation;
    const auto g = isotropy_algebra(p, V({1, 0}), default_degree_bound(p));
    CHECK(g.dim() == 0);
    CHECK(g.ambient == make_subspace({V({0, 0, 1, 0}), V({0, 0, 0, 1})}, 4));
  }
}

TEST_CASE("Jacobi defects are annihilated by the anchor") {
  for (const auto& name : builtin_preset_names()) {
    const auto p = load_preset(name).presentation;
    for (const auto& d : jacobi_defects(p)) {
      PolyVectorField image(p.dim());
      for (std::size_t k = 0; k < p.size(); ++k) image += d.value[k] * p.generator(k);
      CHECK(image.is_zero());
    }
  }
  CHECK(satisfies_jacobi(so3()));
  CHECK(satisfies_jacobi(load_preset("vanishing_origin_3").presentation));
}

TEST_CASE("augmenting with a redundant generator") {
  const auto p = so3();
  const std::vector<Polynomial> comb{Polynomial::variable(3, 0), Polynomial::variable(3, 1), Polynomial(3)};
  const auto aug = augment(p, comb, "g4", 4);
  const auto& q = aug.presentation;
  CHECK(q.size() == 4);
  CHECK(q.generator_names().back() == "g4");
  CHECK(regular_data(q).rank == 2);
  // rho' = rho o psi
  const RationalVector m = V({1, 2, -1});
  const auto psi = aug.projection_at(m);
  CHECK(multiply(anchor_at(p, m), psi) == anchor_at(q, m));
  // the original brackets are kept
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) CHECK(q.structure_functions()(i, j, k) == p.structure_functions()(i, j, k));
    }
  }
}
