#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "hnc/hncone.hpp"
#include "hnc/linalg.hpp"
#include "hnc/preset.hpp"

using namespace hnc;

namespace {

RationalVector V(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("curve families") {
  CHECK(deterministic_ray_count(2) == 4);
  CHECK(deterministic_ray_count(3) == 9);
  CurveFamilyConfig cfg;
  const auto fam = curve_family(V({0, 0}), cfg, true);
  CHECK(fam.size() == 1 + 4 + 2);
  CHECK(fam.front().is_constant());
  cfg.arc_degree = 3;
  CHECK(curve_family(V({0, 0}), cfg, false).size() == 4 + 4);
  cfg.direction_count = 10;
  const auto more = curve_family(V({0, 0}), cfg, false);
  CHECK(more.size() == 10 + 4);
  for (const auto& c : more) CHECK(c.center() == V({0, 0}));
  // seeded: same seed gives the same family, a different seed different extra rays
  const auto again = curve_family(V({0, 0}), cfg, false);
  for (std::size_t i = 0; i < more.size(); ++i) CHECK(more[i].components() == again[i].components());
  cfg.seed = 99;
  const auto other = curve_family(V({0, 0}), cfg, false);
  bool differs = false;
  for (std::size_t i = 0; i < more.size(); ++i) differs = differs || !(more[i].components() == other[i].components());
  CHECK(differs);
  CHECK(cfg.describe() == "rays=10 arc_degree=3 seed=99");
}

TEST_CASE("so(3) fibers at the origin are the planes orthogonal to the ray") {
  const auto p = load_preset("so3_r3").presentation;
  const auto reg = regular_data(p);
  const RationalVector origin = V({0, 0, 0});
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalVector d = rng.nonzero_integer_vector(3, 4);
    const auto hn = hn_fiber(p, origin, {Curve::ray(origin, d)});
    REQUIRE(hn.covector_spaces.size() == 1);
    CHECK(hn.covector_spaces[0] == annihilator(make_subspace({d}, 3)));
  }
  const auto sample = sample_nash_fiber(p, reg, origin, CurveFamilyConfig{});
  CHECK(sample.expected_dim == 1);
  CHECK(sample.limits.size() >= 3);
  std::set<Subspace> distinct(sample.limits.begin(), sample.limits.end());
  CHECK(distinct.size() == sample.limits.size());
  const auto hn = hn_fiber(sample);
  for (const auto& s : hn.covector_spaces) CHECK(s.dim() == 2);
  // the constant curve is rejected at a singular point
  const auto with_constant = nash_fiber(p, reg, origin, {Curve::constant(origin), Curve::ray(origin, V({1, 0, 0}))});
  CHECK_FALSE(with_constant.curves[0].accepted);
  CHECK(with_constant.curves[1].accepted);
  CHECK(with_constant.limits.size() == 1);
}

TEST_CASE("HN fibers have the regular dimension everywhere") {
  for (const auto& name : builtin_preset_names()) {
    const auto lp = load_preset(name);
    const auto& p = lp.presentation;
    const auto reg = regular_data(p);
    for (const auto& m : lp.preset.points) {
      const auto hn = hn_fiber(sample_nash_fiber(p, reg, m, CurveFamilyConfig{}));
      CHECK(!hn.covector_spaces.empty());
      for (const auto& s : hn.covector_spaces) CHECK(s.dim() == reg.rank);
      // at a regular point the fiber is the image of the pull-back
      if (reg.is_regular(m)) {
        REQUIRE(hn.covector_spaces.size() == 1);
        CHECK(hn.covector_spaces[0] == dual_image_at(p, m));
      }
    }
  }
}

TEST_CASE("sandwich and subalgebra checks for gl_3 at the origin") {
  const auto p = load_preset("vanishing_origin_3").presentation;
  const auto reg = regular_data(p);
  const RationalVector origin = V({0, 0, 0});
  const auto sample = sample_nash_fiber(p, reg, origin, CurveFamilyConfig{});
  const auto sw = sandwich_check(p, sample, default_degree_bound(p));
  CHECK(sw.ok());
  CHECK(sw.sker.dim() == 0);
  const auto iso = isotropy_algebra(p, origin, default_degree_bound(p));
  const auto sub = limit_subalgebra_check(p, sample, iso);
  CHECK(sub.ok());
  CHECK(sub.isotropy_dim == 9);
  CHECK(sub.expected_codimension == 3);
  // ray along e1: V = { U : U^T e1 = 0 }, matrices with vanishing first row
  const auto ray = nash_fiber(p, reg, origin, {Curve::ray(origin, V({1, 0, 0}))});
  REQUIRE(ray.limits.size() == 1);
  for (const auto& v : ray.limits[0].basis_vectors()) {
    CHECK(v[0] == 0);
    CHECK(v[1] == 0);
    CHECK(v[2] == 0);
  }
  CHECK(quotient_image(iso, ray.limits[0]).dim() == 6);
}

TEST_CASE("distances to sampled fibers") {
  const Subspace plane = make_subspace({V({1, 0, 0}), V({0, 1, 0})}, 3);
  const std::vector<double> xi{1.0, 2.0, 2.0};
  CHECK(distance_to_subspace(plane, xi) == doctest::Approx(2.0));
  HNFiberSample s;
  s.covector_spaces = {plane, make_subspace({V({0, 1, 0}), V({0, 0, 1})}, 3)};
  CHECK(hn_membership_distance(s, xi) == doctest::Approx(1.0));
  const std::vector<double> inside{0.0, 3.0, -1.0};
  CHECK(hn_membership_distance(s, inside) == doctest::Approx(0.0));
}
