#pragma once

// The fiberwise-linear Poisson structure on the dual of the anchored bundle,
// coordinates (x_1..x_n, xi_1..xi_N), with
//   {xi_a, xi_b} = sum_k c_ab^k(x) xi_k,  {xi_a, f} = rho(e_a)[f],  {f, g} = 0.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hnc/foliation.hpp"
#include "hnc/hncone.hpp"

namespace hnc {

/// H_a as a vector field on (x, xi) space.
struct HamiltonianField {
  std::size_t nvars = 0;       // n
  std::size_t generators = 0;  // N
  RationalVector section;      // constant coefficients of a = sum a_j e_j
  PolyVectorField field;       // n + N components in n + N variables

  /// rho(a) as a field on the base.
  PolyVectorField base_part() const;
  const Polynomial& fiber_part(std::size_t b) const { return field[nvars + b]; }
};

HamiltonianField hamiltonian_field(const FoliationPresentation& p, const RationalVector& section);
HamiltonianField hamiltonian_field(const FoliationPresentation& p, std::size_t generator);

/// Poisson bracket of two polynomials in (x, xi).
Polynomial poisson_bracket(const FoliationPresentation& p, const Polynomial& f, const Polynomial& g);

struct HamiltonianIdentityReport {
  bool projects_to_anchor = true;    // base part is rho(a), independent of xi
  bool fiber_linear = true;          // fiber part linear in xi
  bool evaluation_identity = true;   // H_a[xi_b] = ev_{[a,b]}
  bool coordinate_identity = true;   // H_a[x_i] = rho(a)[x_i]
  bool bracket_identity = true;      // H_a[G] = {xi_a-combination, G} on sampled polynomials
  std::vector<std::string> failures;
  bool ok() const {
    return projects_to_anchor && fiber_linear && evaluation_identity && coordinate_identity && bracket_identity;
  }
};
HamiltonianIdentityReport verify_hamiltonian_identities(const FoliationPresentation& p, const HamiltonianField& h);

/// Cyclic sum {xi_a, {xi_b, xi_c}} + ... for all a < b < c; empty iff it vanishes identically.
std::vector<std::string> poisson_jacobi_failures(const FoliationPresentation& p);

struct DualPoint {
  std::vector<double> x;
  std::vector<double> xi;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DualPoint> states;
};

/// Classical fixed-step RK4. Throws NonFiniteState on blow-up.
Trajectory flow_rk4(const HamiltonianField& h, const DualPoint& start, double duration, std::size_t steps);

struct InvarianceConfig {
  double duration = 1.0;
  std::size_t steps = 1000;
  std::size_t checkpoints = 10;
  double tolerance = 1e-6;
  /// Base points are snapped to the grid 2^-snap_bits before fibers are recomputed.
  unsigned snap_bits = 30;
  CurveFamilyConfig curves;
};

struct InvarianceCheckpoint {
  double time = 0.0;
  RationalVector snapped;
  double drift = 0.0;
  std::size_t fiber_spaces = 0;
};

struct InvarianceReport {
  RationalVector eta;    // base covector, xi0 = rho*_m eta
  RationalVector xi0;
  double max_drift = 0.0;
  double snap_radius = 0.0;
  std::vector<InvarianceCheckpoint> checkpoints;
  Trajectory trajectory;
  bool passed = false;
};

InvarianceReport hn_invariance_test(const FoliationPresentation& p, const RationalVector& m,
                                    const RationalVector& section, const RationalVector& eta,
                                    const InvarianceConfig& config);

struct CotangentReport {
  double max_deviation = 0.0;
  bool passed = false;
};

/// Compares the H_a flow from rho*_m eta with the cotangent lift of the flow
/// of rho(a) from eta pulled back by rho* along the way.
CotangentReport cotangent_lift_check(const FoliationPresentation& p, const RationalVector& m, const RationalVector& eta,
                                     const RationalVector& section, double duration, std::size_t steps,
                                     double tolerance = 1e-6);

}  // namespace hnc
