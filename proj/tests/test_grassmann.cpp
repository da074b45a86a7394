#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "hnc/errors.hpp"
#include "hnc/expr.hpp"
#include "hnc/grassmann.hpp"

using namespace hnc;

namespace {

RationalVector V(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

PolyMatrix row_matrix(const std::vector<std::string>& entries, const std::vector<std::string>& vars) {
  PolyMatrix m(1, entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) m(0, j) = parse_polynomial(entries[j], vars);
  return m;
}

Subspace random_subspace(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<RationalVector> vs;
  for (std::size_t i = 0; i < k; ++i) vs.push_back(testgen::vector(rng, n));
  return make_subspace(vs, n);
}

}  // namespace

TEST_CASE("canonical form and Pluecker vector") {
  const Subspace s = make_subspace({V({1, 0, 1}), V({0, 1, 1})}, 3);
  CHECK(s.dim() == 2);
  CHECK(s.plucker() == V({1, 1, -1}));
  // same span, different generators
  const Subspace t = make_subspace({V({1, 1, 2}), V({2, -1, 1}), V({3, 0, 3})}, 3);
  CHECK(s == t);
  CHECK(s.contains(V({5, -2, 3})));
  CHECK_FALSE(s.contains(V({0, 0, 1})));
  CHECK(zero_subspace(4).dim() == 0);
  CHECK(full_space(4).dim() == 4);
  CHECK(k_subsets(4, 2).size() == 6);
  CHECK(k_subsets(4, 2).front() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("subspace lattice identities on random subspaces") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 6));
    const auto a = random_subspace(rng, n, static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(n))));
    const auto b = random_subspace(rng, n, static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(n))));
    CHECK(annihilator(annihilator(a)) == a);
    CHECK(annihilator(a).dim() + a.dim() == n);
    CHECK(sum(a, b).dim() + intersection(a, b).dim() == a.dim() + b.dim());
    CHECK(sum(a, b).contains(a));
    CHECK(a.contains(intersection(a, b)));
    CHECK(annihilator(sum(a, b)) == intersection(annihilator(a), annihilator(b)));
    if (a.dim() > 0 && a.dim() < n) {
      CHECK(from_plucker(a.plucker(), n, a.dim()) == a);
      // scaling the Pluecker vector does not change the subspace
      RationalVector scaled = a.plucker();
      for (auto& q : scaled) q *= Rational(-7, 3);
      CHECK(from_plucker(scaled, n, a.dim()) == a);
    }
  }
}

TEST_CASE("non-decomposable Pluecker vectors are rejected") {
  // p12 p34 - p13 p24 + p14 p23 = 1 for e1^e2 + e3^e4
  const RationalVector p = V({1, 0, 0, 0, 0, 1});
  CHECK_THROWS_AS(from_plucker(p, 4, 2), InvariantViolation);
  CHECK_THROWS(from_plucker(V({0, 0, 0, 0, 0, 0}), 4, 2));
}

TEST_CASE("curves") {
  const Curve c = Curve::ray(V({1, 2}), V({3, -1}));
  CHECK(c.evaluate(Rational(2)) == V({7, 0}));
  CHECK(c.evaluate(0.5)[1] == doctest::Approx(1.5));
  CHECK(Curve::constant(V({1, 2})).is_constant());
  CHECK_FALSE(c.is_constant());
  CHECK_THROWS(Curve(V({0, 0}), {UniPoly(1), UniPoly(0)}));
  const auto f = parse_polynomial("x*y + 1", {"x", "y"});
  // (1 + 3t)(2 - t) + 1 = 3 + 5t - 3t^2
  CHECK(substitute(f, c) == UniPoly(std::vector<Rational>{3, 5, -3}));
}

TEST_CASE("limits of kernels along rays and arcs") {
  const std::vector<std::string> xy{"x", "y"};
  const PolyMatrix m = row_matrix({"x", "y"}, xy);
  const RationalVector origin = V({0, 0});
  for (long c = 0; c <= 3; ++c) {
    // ker [t, c t] = span (c, -1)
    const auto lim = limit_along_curve(m, Curve::ray(origin, V({1, c})), 1);
    CHECK(lim == make_subspace({V({c, -1})}, 2));
  }
  // ker [t, t^2] = span (t, -1) -> span e2
  const Curve arc(origin, {UniPoly(std::vector<Rational>{0, 1}), UniPoly(std::vector<Rational>{0, 0, 1})});
  const auto trace = trace_limit_along_curve(m, arc, 1);
  CHECK(trace.limit == make_subspace({V({0, 1})}, 2));
  CHECK_FALSE(trace.via_row_space);
  // the constant curve at a singular point is not generic
  CHECK_THROWS_AS(limit_along_curve(m, Curve::constant(origin), 1), CurveNotGeneric);
  // at a regular point the constant curve gives the kernel there
  CHECK(limit_along_curve(m, Curve::constant(V({1, 2})), 1) == make_subspace({V({2, -1})}, 2));
}

TEST_CASE("large kernels are tracked through the row space") {
  const std::vector<std::string> v4{"a", "b", "c", "d"};
  const PolyMatrix m = row_matrix({"a", "b", "c", "d"}, v4);
  const RationalVector origin = V({0, 0, 0, 0});
  const Curve arc(origin, {UniPoly(std::vector<Rational>{0, 1}), UniPoly(std::vector<Rational>{0, 0, 1}), UniPoly(0),
                           UniPoly(0)});
  const auto trace = trace_limit_along_curve(m, arc, 3);
  CHECK(trace.via_row_space);
  CHECK(trace.tracked_dim == 1);
  CHECK(trace.limit == make_subspace({V({0, 1, 0, 0}), V({0, 0, 1, 0}), V({0, 0, 0, 1})}, 4));
  CHECK(trace.tracked_limit == make_subspace({V({1, 0, 0, 0})}, 4));
}

TEST_CASE("principal angles against closed forms") {
  const Subspace a = make_subspace({V({1, 0})}, 2);
  const Subspace b = make_subspace({V({1, 1})}, 2);
  CHECK(subspace_distance(a, b) == doctest::Approx(M_PI / 4).epsilon(1e-14));
  CHECK(subspace_distance(a, a) == doctest::Approx(0.0));
  const Subspace c = make_subspace({V({0, 1})}, 2);
  CHECK(subspace_distance(a, c) == doctest::Approx(M_PI / 2));
  // planes in R^3 meeting at angle atan(2)
  const Subspace p = make_subspace({V({1, 0, 0}), V({0, 1, 0})}, 3);
  const Subspace q = make_subspace({V({1, 0, 0}), V({0, 1, 2})}, 3);
  CHECK(subspace_distance(p, q) == doctest::Approx(std::atan(2.0)).epsilon(1e-14));
}

TEST_CASE("float evaluation of the Pluecker polynomials") {
  const std::vector<std::string> xy{"x", "y"};
  const PolyMatrix m = row_matrix({"x", "y"}, xy);
  const RationalVector origin = V({0, 0});
  // along (t, t^2) the kernel is span (t, -1), at angle atan(t) from the limit
  const Curve arc(origin, {UniPoly(std::vector<Rational>{0, 1}), UniPoly(std::vector<Rational>{0, 0, 1})});
  const auto trace = trace_limit_along_curve(m, arc, 1);
  for (double t : {1e-1, 1e-3, 1e-4}) {
    const double angle = subspace_distance(float_tracked_basis(trace, t), to_double_rows(trace.tracked_limit.basis()));
    CHECK(angle == doctest::Approx(std::atan(t)).epsilon(1e-9));
  }
  // along a ray through the origin the kernel does not move
  const auto ray = trace_limit_along_curve(m, Curve::ray(origin, V({2, 3})), 1);
  CHECK(subspace_distance(float_tracked_basis(ray, 1e-4), to_double_rows(ray.tracked_limit.basis())) < 1e-12);
}
