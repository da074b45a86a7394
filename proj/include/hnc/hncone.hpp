#pragma once

// Sampled fibers of the Nash blow-up and of the Helffer-Nourrigat cone.
//
// Fibers are closures and can be infinite, so they are sampled: each point
// of a Nash fiber is the exact limit of ker rho along one polynomial arc.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hnc/foliation.hpp"
#include "hnc/grassmann.hpp"

namespace hnc {

struct CurveFamilyConfig {
  /// Total number of straight rays; values above the deterministic
  /// axis/diagonal count add seeded random integer directions.
  std::size_t direction_count = 0;
  /// Arcs m + t e_i + t^g e_j are added for g = 2..arc_degree.
  unsigned arc_degree = 2;
  std::uint64_t seed = 0;

  std::string describe() const;
};

/// Rays along the axes and the diagonals e_i +- e_{i+1}, arcs, extra random
/// rays, and the constant curve when `include_constant` is set.
std::vector<Curve> curve_family(const RationalVector& m, const CurveFamilyConfig& config, bool include_constant);
/// Number of deterministic rays for base dimension n.
std::size_t deterministic_ray_count(std::size_t n);

struct CurveOutcome {
  std::string label;
  bool accepted = false;
  std::size_t limit_index = 0;  // meaningful when accepted
  std::string reason;           // rejection reason
  std::optional<LimitTrace> trace;
};

struct NashFiberSample {
  RationalVector point;
  std::size_t rank = 0;          // r
  std::size_t expected_dim = 0;  // N - r
  std::vector<Subspace> limits;  // distinct, in order of discovery
  std::vector<CurveOutcome> curves;
};

struct HNFiberSample {
  RationalVector point;
  std::size_t rank = 0;
  std::vector<Subspace> covector_spaces;  // annihilators of the Nash limits
};

NashFiberSample nash_fiber(const FoliationPresentation& p, const RegularData& reg, const RationalVector& m,
                           const std::vector<Curve>& curves);
NashFiberSample nash_fiber(const FoliationPresentation& p, const RationalVector& m, const std::vector<Curve>& curves);
/// Family from the config; falls back to seeded random rays if no curve of
/// the family is accepted, so the sample is never empty.
NashFiberSample sample_nash_fiber(const FoliationPresentation& p, const RegularData& reg, const RationalVector& m,
                                  const CurveFamilyConfig& config);

HNFiberSample hn_fiber(const NashFiberSample& nash);
HNFiberSample hn_fiber(const FoliationPresentation& p, const RationalVector& m, const std::vector<Curve>& curves);

struct SandwichEntry {
  bool sker_in_limit = false;
  bool limit_in_kernel = false;
};
struct SandwichReport {
  Subspace kernel;
  Subspace sker;
  unsigned degree_bound = 0;
  std::vector<SandwichEntry> entries;
  bool ok() const;
};
SandwichReport sandwich_check(const FoliationPresentation& p, const NashFiberSample& sample, unsigned degree_bound);

struct SubalgebraEntry {
  Subspace image;  // V-bar inside the isotropy quotient coordinates
  bool closed = false;
  std::size_t codimension = 0;
};
struct SubalgebraReport {
  std::size_t isotropy_dim = 0;
  std::size_t expected_codimension = 0;  // r - dim Im rho_m
  std::vector<SubalgebraEntry> entries;
  bool ok() const;
};
SubalgebraReport limit_subalgebra_check(const FoliationPresentation& p, const NashFiberSample& sample,
                                        const IsotropyAlgebra& isotropy);

/// Image of V (a subspace of ker rho_m) in the isotropy quotient coordinates.
Subspace quotient_image(const IsotropyAlgebra& g, const Subspace& v);

/// min over sampled covector spaces of |xi - proj(xi)|.
double hn_membership_distance(const HNFiberSample& sample, std::span<const double> xi);
double distance_to_subspace(const Subspace& v, std::span<const double> xi);

}  // namespace hnc
