#include "hnc/poisson.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "hnc/compiled.hpp"
#include "hnc/errors.hpp"
#include "hnc/expr.hpp"

namespace hnc {

namespace {

using State = std::vector<double>;
using Rhs = std::function<void(const State&, State&)>;

/// One RK4 run; calls `observe(step, state)` after every step, including step 0.
void rk4(const Rhs& f, State y, double duration, std::size_t steps,
         const std::function<void(std::size_t, const State&)>& observe) {
  if (steps == 0) throw std::invalid_argument("flow_rk4: steps must be >= 1");
  const double h = duration / static_cast<double>(steps);
  const std::size_t d = y.size();
  State k1(d), k2(d), k3(d), k4(d), tmp(d);
  observe(0, y);
  for (std::size_t s = 1; s <= steps; ++s) {
    f(y, k1);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    f(tmp, k2);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    f(tmp, k3);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = y[i] + h * k3[i];
    f(tmp, k4);
    for (std::size_t i = 0; i < d; ++i) {
      y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(y[i])) throw NonFiniteState(h * static_cast<double>(s));
    }
    observe(s, y);
  }
}

PolyVectorField section_field(const FoliationPresentation& p, const RationalVector& a) {
  if (a.size() != p.size()) throw std::invalid_argument("section has the wrong number of coefficients");
  PolyVectorField x(p.dim());
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!is_zero(a[j])) x += Polynomial::constant(p.dim(), a[j]) * p.generator(j);
  }
  return x;
}

Polynomial xi_var(std::size_t n, std::size_t big_n, std::size_t b) { return Polynomial::variable(n + big_n, n + b); }

/// pi_ab = sum_k c_ab^k xi_k in (x, xi).
Polynomial structure_pairing(const FoliationPresentation& p, std::size_t a, std::size_t b) {
  const std::size_t n = p.dim();
  const std::size_t big_n = p.size();
  const StructureFunctions& c = p.structure_functions();
  Polynomial out(n + big_n);
  for (std::size_t k = 0; k < big_n; ++k) {
    if (!c(a, b, k).is_zero()) out += c(a, b, k).embed(n + big_n, 0) * xi_var(n, big_n, k);
  }
  return out;
}

std::vector<double> pullback_double(const std::vector<CompiledPolynomial>& anchor, std::size_t n, std::size_t big_n,
                                    std::span<const double> x, std::span<const double> eta) {
  std::vector<double> xi(big_n, 0.0);
  for (std::size_t b = 0; b < big_n; ++b) {
    for (std::size_t i = 0; i < n; ++i) xi[b] += eta[i] * anchor[i * big_n + b](x);
  }
  return xi;
}

}  // namespace

PolyVectorField HamiltonianField::base_part() const {
  PolyVectorField x(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    Polynomial c(nvars);
    for (const auto& [e, v] : field[i].terms()) c.add_term(Exponent(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(nvars)), v);
    x[i] = c;
  }
  return x;
}

HamiltonianField hamiltonian_field(const FoliationPresentation& p, const RationalVector& section) {
  const std::size_t n = p.dim();
  const std::size_t big_n = p.size();
  const StructureFunctions& c = p.structure_functions();
  HamiltonianField h;
  h.nvars = n;
  h.generators = big_n;
  h.section = section;
  h.field = PolyVectorField(n + big_n);
  const PolyVectorField base = section_field(p, section);
  for (std::size_t i = 0; i < n; ++i) h.field[i] = base[i].embed(n + big_n, 0);
  for (std::size_t b = 0; b < big_n; ++b) {
    Polynomial f(n + big_n);
    for (std::size_t j = 0; j < big_n; ++j) {
      if (is_zero(section[j])) continue;
      for (std::size_t k = 0; k < big_n; ++k) {
        if (!c(j, b, k).is_zero()) f += (c(j, b, k) * section[j]).embed(n + big_n, 0) * xi_var(n, big_n, k);
      }
    }
    h.field[n + b] = f;
  }
  return h;
}

HamiltonianField hamiltonian_field(const FoliationPresentation& p, std::size_t generator) {
  if (generator >= p.size()) throw std::out_of_range("hamiltonian_field: unknown generator");
  RationalVector a(p.size());
  a[generator] = 1;
  return hamiltonian_field(p, a);
}

Polynomial poisson_bracket(const FoliationPresentation& p, const Polynomial& f, const Polynomial& g) {
  const std::size_t n = p.dim();
  const std::size_t big_n = p.size();
  if (f.nvars() != n + big_n || g.nvars() != n + big_n) throw std::invalid_argument("poisson_bracket: ring mismatch");
  Polynomial out(n + big_n);
  std::vector<Polynomial> df_xi, dg_xi;
  for (std::size_t a = 0; a < big_n; ++a) {
    df_xi.push_back(f.derivative(n + a));
    dg_xi.push_back(g.derivative(n + a));
  }
  for (std::size_t a = 0; a < big_n; ++a) {
    for (std::size_t b = 0; b < big_n; ++b) {
      if (df_xi[a].is_zero() || dg_xi[b].is_zero()) continue;
      out += df_xi[a] * dg_xi[b] * structure_pairing(p, a, b);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial df_x = f.derivative(i);
    const Polynomial dg_x = g.derivative(i);
    for (std::size_t a = 0; a < big_n; ++a) {
      const Polynomial& xa = p.generator(a)[i];
      if (xa.is_zero()) continue;
      const Polynomial term = df_xi[a] * dg_x - df_x * dg_xi[a];
      if (!term.is_zero()) out += term * xa.embed(n + big_n, 0);
    }
  }
  return out;
}

HamiltonianIdentityReport verify_hamiltonian_identities(const FoliationPresentation& p, const HamiltonianField& h) {
  const std::size_t n = p.dim();
  const std::size_t big_n = p.size();
  const std::size_t nn = n + big_n;
  HamiltonianIdentityReport r;
  std::vector<std::string> names = p.vars();
  for (const auto& g : p.generator_names()) names.push_back("xi_" + g);

  const PolyVectorField rho_a = section_field(p, h.section);
  for (std::size_t i = 0; i < n; ++i) {
    if (h.field[i] != rho_a[i].embed(nn, 0)) {
      r.projects_to_anchor = false;
      r.failures.push_back("base component " + p.vars()[i] + " is not rho(a)");
    }
  }
  for (std::size_t b = 0; b < big_n; ++b) {
    const Polynomial& f = h.fiber_part(b);
    if (!f.is_zero() && (f.homogeneous_part_in(n, big_n, 1) != f)) {
      r.fiber_linear = false;
      r.failures.push_back("fiber component " + std::to_string(b) + " is not linear in xi");
    }
  }
  // ev_{[a, e_b]} with [a, e_b] = sum_j a_j [e_j, e_b].
  for (std::size_t b = 0; b < big_n; ++b) {
    Polynomial expected(nn);
    for (std::size_t j = 0; j < big_n; ++j) {
      if (!is_zero(h.section[j])) expected += structure_pairing(p, j, b) * h.section[j];
    }
    const Polynomial got = h.field.apply(xi_var(n, big_n, b));
    if (got != expected) {
      r.evaluation_identity = false;
      r.failures.push_back("H_a[xi_" + p.generator_names()[b] + "] = " + to_string(got, names) + ", expected " +
                           to_string(expected, names));
    }
    // The anchor must intertwine: sum_k (d fiber_b / d xi_k) X_k = [rho(a), X_b].
    PolyVectorField image(n);
    for (std::size_t k = 0; k < big_n; ++k) {
      const Polynomial coeff = got.derivative(n + k);
      if (coeff.is_zero()) continue;
      Polynomial base_coeff(n);
      for (const auto& [e, v] : coeff.terms()) base_coeff.add_term(Exponent(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n)), v);
      image += base_coeff * p.generator(k);
    }
    if (image != lie_bracket(rho_a, p.generator(b))) {
      r.evaluation_identity = false;
      r.failures.push_back("anchor of H_a[xi_" + p.generator_names()[b] + "] differs from [rho(a), X_b]");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial xi_coord = Polynomial::variable(nn, i);
    const Polynomial expected = rho_a.apply(Polynomial::variable(n, i)).embed(nn, 0);
    if (h.field.apply(xi_coord) != expected) {
      r.coordinate_identity = false;
      r.failures.push_back("H_a[" + p.vars()[i] + "] differs from rho(a)[" + p.vars()[i] + "]");
    }
  }
  Polynomial ev_a(nn);
  for (std::size_t j = 0; j < big_n; ++j) {
    if (!is_zero(h.section[j])) ev_a += xi_var(n, big_n, j) * h.section[j];
  }
  std::vector<Polynomial> probes;
  for (std::size_t i = 0; i < n; ++i) {
    probes.push_back(Polynomial::variable(nn, i).pow(2));
    for (std::size_t b = 0; b < big_n; ++b) probes.push_back(Polynomial::variable(nn, i) * xi_var(n, big_n, b));
  }
  for (std::size_t b = 0; b < big_n; ++b) {
    for (std::size_t c = b; c < big_n; ++c) probes.push_back(xi_var(n, big_n, b) * xi_var(n, big_n, c));
  }
  for (const auto& g : probes) {
    if (h.field.apply(g) != poisson_bracket(p, ev_a, g)) {
      r.bracket_identity = false;
      r.failures.push_back("H_a[" + to_string(g, names) + "] differs from the Poisson bracket");
    }
  }
  return r;
}

std::vector<std::string> poisson_jacobi_failures(const FoliationPresentation& p) {
  const std::size_t n = p.dim();
  const std::size_t big_n = p.size();
  std::vector<std::string> failures;
  auto xi = [&](std::size_t a) { return xi_var(n, big_n, a); };
  for (std::size_t a = 0; a < big_n; ++a) {
    for (std::size_t b = a + 1; b < big_n; ++b) {
      for (std::size_t c = b + 1; c < big_n; ++c) {
        Polynomial s = poisson_bracket(p, xi(a), poisson_bracket(p, xi(b), xi(c))) +
                       poisson_bracket(p, xi(b), poisson_bracket(p, xi(c), xi(a))) +
                       poisson_bracket(p, xi(c), poisson_bracket(p, xi(a), xi(b)));
        if (!s.is_zero()) {
          const auto& g = p.generator_names();
          failures.push_back("Jacobi fails for (" + g[a] + "," + g[b] + "," + g[c] + ")");
        }
      }
    }
  }
  return failures;
}

Trajectory flow_rk4(const HamiltonianField& h, const DualPoint& start, double duration, std::size_t steps) {
  if (start.x.size() != h.nvars || start.xi.size() != h.generators) {
    throw std::invalid_argument("flow_rk4: start point has the wrong dimensions");
  }
  const CompiledMap field(h.field.components());
  State y = start.x;
  y.insert(y.end(), start.xi.begin(), start.xi.end());
  Trajectory t;
  const double dt = duration / static_cast<double>(std::max<std::size_t>(steps, 1));
  rk4([&](const State& s, State& out) { field(s, out); }, y, duration, steps, [&](std::size_t k, const State& s) {
    t.times.push_back(dt * static_cast<double>(k));
    t.states.push_back({State(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(h.nvars)),
                        State(s.begin() + static_cast<std::ptrdiff_t>(h.nvars), s.end())});
  });
  return t;
}

InvarianceReport hn_invariance_test(const FoliationPresentation& p, const RationalVector& m,
                                    const RationalVector& section, const RationalVector& eta,
                                    const InvarianceConfig& config) {
  const RegularData reg = regular_data(p);
  if (!reg.is_regular(m)) throw std::invalid_argument("hn_invariance_test: start point is not regular");
  InvarianceReport r;
  r.eta = eta;
  r.xi0 = pullback_covector(p, m, eta);
  const HamiltonianField h = hamiltonian_field(p, section);
  r.trajectory = flow_rk4(h, {to_double(m), to_double(r.xi0)}, config.duration, config.steps);
  const std::size_t cps = std::max<std::size_t>(config.checkpoints, 1);
  const Integer scale = Integer(1) << config.snap_bits;
  for (std::size_t c = 0; c <= cps; ++c) {
    const std::size_t step = c * config.steps / cps;
    const DualPoint& s = r.trajectory.states[step];
    InvarianceCheckpoint cp;
    cp.time = r.trajectory.times[step];
    for (double v : s.x) {
      Rational q(Integer(static_cast<long>(std::llround(std::ldexp(v, static_cast<int>(config.snap_bits))))), scale);
      q.canonicalize();
      r.snap_radius = std::max(r.snap_radius, std::abs(q.get_d() - v));
      cp.snapped.push_back(q);
    }
    const HNFiberSample hn = hn_fiber(sample_nash_fiber(p, reg, cp.snapped, config.curves));
    cp.fiber_spaces = hn.covector_spaces.size();
    cp.drift = hn_membership_distance(hn, s.xi);
    r.max_drift = std::max(r.max_drift, cp.drift);
    r.checkpoints.push_back(std::move(cp));
  }
  r.passed = r.max_drift <= config.tolerance;
  return r;
}

CotangentReport cotangent_lift_check(const FoliationPresentation& p, const RationalVector& m, const RationalVector& eta,
                                     const RationalVector& section, double duration, std::size_t steps,
                                     double tolerance) {
  const std::size_t n = p.dim();
  const std::size_t big_n = p.size();
  const HamiltonianField h = hamiltonian_field(p, section);
  const RationalVector xi0 = pullback_covector(p, m, eta);

  std::vector<CompiledPolynomial> anchor;
  const PolyMatrix a = anchor_matrix(p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < big_n; ++b) anchor.emplace_back(a(i, b));
  }
  const PolyVectorField x = section_field(p, section);
  const CompiledMap xf(x.components());
  std::vector<CompiledPolynomial> jac;  // jac[i * n + j] = d X_i / d x_j
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) jac.emplace_back(x[i].derivative(j));
  }

  std::vector<std::vector<double>> lifted;
  State y2 = to_double(m);
  const auto eta_d = to_double(eta);
  y2.insert(y2.end(), eta_d.begin(), eta_d.end());
  rk4(
      [&](const State& s, State& out) {
        std::span<const double> xs(s.data(), n);
        xf(xs, std::span<double>(out.data(), n));
        for (std::size_t j = 0; j < n; ++j) {
          double v = 0.0;
          for (std::size_t i = 0; i < n; ++i) v -= jac[i * n + j](xs) * s[n + i];
          out[n + j] = v;
        }
      },
      y2, duration, steps, [&](std::size_t, const State& s) {
        lifted.push_back(pullback_double(anchor, n, big_n, std::span<const double>(s.data(), n),
                                         std::span<const double>(s.data() + n, n)));
      });

  const Trajectory t = flow_rk4(h, {to_double(m), to_double(xi0)}, duration, steps);
  CotangentReport r;
  for (std::size_t k = 0; k < t.states.size(); ++k) {
    double d2 = 0.0;
    for (std::size_t b = 0; b < big_n; ++b) {
      const double d = t.states[k].xi[b] - lifted[k][b];
      d2 += d * d;
    }
    r.max_deviation = std::max(r.max_deviation, std::sqrt(d2));
  }
  r.passed = r.max_deviation <= tolerance;
  return r;
}

}  // namespace hnc
