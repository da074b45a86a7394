#include "hnc/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "hnc/errors.hpp"
#include "hnc/foliation.hpp"
#include "hnc/grassmann.hpp"
#include "hnc/hncone.hpp"
#include "hnc/linalg.hpp"
#include "hnc/poisson.hpp"
#include "hnc/preset.hpp"
#include "hnc/random.hpp"
#include "hnc/symbols.hpp"

namespace hnc {

namespace {

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(3) << v;
  return s.str();
}

/// Limit traces gathered by criteria 1-4 for the float oracle.
struct TraceRecord {
  std::string where;
  LimitTrace trace;
};

void collect_traces(const std::string& preset, const NashFiberSample& s, std::vector<TraceRecord>* out) {
  if (!out) return;
  for (const auto& c : s.curves) {
    if (c.accepted && c.trace) out->push_back({preset + " m=" + point_to_string(s.point) + " " + c.label, *c.trace});
  }
}

class Checker {
 public:
  explicit Checker(CriterionResult& r) : r_(r) {}
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (r_.notes.size() < 20) r_.notes.push_back(what);
    }
  }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  bool ok() const { return failures_ == 0 && checks_ > 0; }

 private:
  CriterionResult& r_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
};

std::string counts(const Checker& c) {
  return std::to_string(c.checks() - c.failures()) + "/" + std::to_string(c.checks()) + " checks";
}

Subspace orthogonal_complement_of(const RationalVector& v) { return annihilator(make_subspace({v}, v.size())); }

Curve arc(const RationalVector& m, std::vector<std::vector<Rational>> coefficient_lists, const std::string& label) {
  std::vector<UniPoly> comps;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<Rational> c = coefficient_lists[i];
    c[0] = m[i];
    comps.push_back(UniPoly(std::move(c)));
  }
  return Curve(m, std::move(comps), label);
}

// ---------------------------------------------------------------------------

void criterion_1(CriterionResult& r, const AcceptanceOptions& o, std::vector<TraceRecord>* traces) {
  r.title = "so(3) regular fibers are the orthogonal planes";
  Checker ck(r);
  const auto lp = load_preset("so3_r3");
  const auto& p = lp.presentation;
  const auto reg = regular_data(p);
  CurveFamilyConfig cfg;
  cfg.seed = o.seed;
  for (const auto& v : std::vector<RationalVector>{{1, 0, 0}, {0, 2, 0}, {1, 1, 1}}) {
    const auto nash = sample_nash_fiber(p, reg, v, cfg);
    collect_traces("so3_r3", nash, traces);
    const auto hn = hn_fiber(nash);
    const Subspace expected = orthogonal_complement_of(v);
    ck.require(hn.covector_spaces.size() == 1,
               "m=" + point_to_string(v) + ": " + std::to_string(hn.covector_spaces.size()) + " covector spaces");
    for (const auto& s : hn.covector_spaces) {
      ck.require(s == expected, "m=" + point_to_string(v) + ": fiber differs from <v>^perp");
    }
  }
  const Subspace e23 = make_subspace({RationalVector{0, 1, 0}, RationalVector{0, 0, 1}}, 3);
  const auto at_e1 = hn_fiber(sample_nash_fiber(p, reg, {1, 0, 0}, cfg));
  ck.require(!at_e1.covector_spaces.empty() && at_e1.covector_spaces[0].plucker() == e23.plucker(),
             "m=1,0,0: Pluecker vector differs from span{e2*, e3*}");
  r.passed = ck.ok();
  r.summary = counts(ck) + " at 3 regular points";
}

void criterion_2(CriterionResult& r, const AcceptanceOptions& o, std::vector<TraceRecord>* traces) {
  r.title = "so(3) singular fiber covers the dual";
  Checker ck(r);
  const auto lp = load_preset("so3_r3");
  const auto& p = lp.presentation;
  const auto reg = regular_data(p);
  Rng rng(o.seed + 2);
  const RationalVector origin(3, Rational(0));
  std::size_t covered = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const RationalVector xi = rng.nonzero_integer_vector(3, 6);
    RationalVector d;
    for (std::size_t k = 0; k < 3 && (d.empty() || is_zero_vector(d)); ++k) {
      // d = xi x e_k
      RationalVector e(3, Rational(0));
      e[k] = 1;
      d = {xi[1] * e[2] - xi[2] * e[1], xi[2] * e[0] - xi[0] * e[2], xi[0] * e[1] - xi[1] * e[0]};
    }
    ck.require(is_zero(dot(d, xi)), "direction not orthogonal to xi");
    const auto nash = nash_fiber(p, reg, origin, {Curve::ray(origin, d)});
    collect_traces("so3_r3", nash, traces);
    const auto hn = hn_fiber(nash);
    bool hit = false;
    for (const auto& s : hn.covector_spaces) {
      ck.require(s.dim() == 2, "covector space of wrong dimension");
      hit = hit || s.contains(xi);
    }
    ck.require(hit, "xi=" + point_to_string(xi) + " not in the fiber from ray " + point_to_string(d));
    covered += hit;
  }
  // Coverage of the whole dual: the fiber at 0 contains every plane through
  // the origin, so the union of the sampled planes must cover every probe.
  const auto sampled = hn_fiber(sample_nash_fiber(p, reg, origin, CurveFamilyConfig{0, 2, o.seed}));
  ck.require(sampled.covector_spaces.size() >= 3, "fewer than 3 distinct planes sampled at the origin");
  r.passed = ck.ok();
  r.summary = std::to_string(covered) + "/10 random covectors covered, " +
              std::to_string(sampled.covector_spaces.size()) + " planes in the default sample";
}

void criterion_3(CriterionResult& r, const AcceptanceOptions& o, std::vector<TraceRecord>* traces) {
  r.title = "gl_d fibers at the origin are rank <= 1 matrices";
  Checker ck(r);
  Rng rng(o.seed + 3);
  std::ostringstream summary;
  for (std::size_t d : {2u, 3u}) {
    const auto lp = load_preset("vanishing_origin_" + std::to_string(d));
    const auto& p = lp.presentation;
    const auto reg = regular_data(p);
    const RationalVector origin(d, Rational(0));
    CurveFamilyConfig cfg;
    cfg.seed = o.seed;
    const auto nash = sample_nash_fiber(p, reg, origin, cfg);
    collect_traces(p.name(), nash, traces);
    const auto hn = hn_fiber(nash);
    ck.require(!hn.covector_spaces.empty(), "no covector spaces for d=" + std::to_string(d));
    std::size_t tested = 0;
    auto rank_of = [&](const RationalVector& xi) {
      RationalMatrix a(d, d);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) a(i, j) = xi[i * d + j];
      }
      return rank(a);
    };
    for (const auto& s : hn.covector_spaces) {
      const auto basis = s.basis_vectors();
      for (const auto& b : basis) {
        ck.require(rank_of(b) <= 1, "d=" + std::to_string(d) + ": basis covector of rank > 1");
        ++tested;
      }
      for (int k = 0; k < 50; ++k) {
        RationalVector xi(d * d, Rational(0));
        for (const auto& b : basis) {
          const Rational c = rng.rational(9, 4);
          for (std::size_t i = 0; i < xi.size(); ++i) xi[i] += c * b[i];
        }
        ck.require(rank_of(xi) <= 1, "d=" + std::to_string(d) + ": random element " + point_to_string(xi) + " of rank > 1");
        ++tested;
      }
    }
    summary << "d=" << d << ": " << hn.covector_spaces.size() << " spaces, " << tested << " covectors; ";
  }
  r.passed = ck.ok();
  r.summary = summary.str() + counts(ck);
}

void criterion_4(CriterionResult& r, const AcceptanceOptions&, std::vector<TraceRecord>* traces) {
  r.title = "order-two fibers lie on the cone uv = w^2";
  Checker ck(r);
  const auto lp = load_preset("order2_r2");
  const auto& p = lp.presentation;
  const auto reg = regular_data(p);
  const RationalVector origin{0, 0};
  std::vector<Curve> curves;
  for (int c = 0; c <= 3; ++c) curves.push_back(Curve::ray(origin, {1, c}));
  curves.push_back(arc(origin, {{0, 1}, {0, 0, 1}}, "arc (t, t^2)"));
  curves.push_back(arc(origin, {{0, 0, 1}, {0, 1}}, "arc (t^2, t)"));
  const auto nash = nash_fiber(p, reg, origin, curves);
  collect_traces("order2_r2", nash, traces);
  for (const auto& c : nash.curves) ck.require(c.accepted, c.label + " rejected: " + c.reason);
  const auto hn = hn_fiber(nash);
  auto block = [](std::size_t first) {
    std::vector<RationalVector> v;
    for (std::size_t i = first; i < first + 3; ++i) {
      RationalVector e(6, Rational(0));
      e[i] = 1;
      v.push_back(e);
    }
    return make_subspace(v, 6);
  };
  const Subspace first_block = block(0);
  const Subspace second_block = block(3);
  for (const auto& s : hn.covector_spaces) {
    ck.require(s.dim() == 2, "plane of wrong dimension");
    const Subspace a = intersection(s, first_block);
    const Subspace b = intersection(s, second_block);
    ck.require(a.dim() == 1 && b.dim() == 1, "plane has no block basis: " + point_to_string(s.plucker()));
    if (a.dim() != 1 || b.dim() != 1) continue;
    const auto u = a.basis_vectors()[0];
    const auto w = b.basis_vectors()[0];
    ck.require(u[0] * u[1] - u[2] * u[2] == 0, "first block off the cone: " + point_to_string(u));
    ck.require(w[3] * w[4] - w[5] * w[5] == 0, "second block off the cone: " + point_to_string(w));
  }
  ck.require(hn.covector_spaces.size() >= 5, std::to_string(hn.covector_spaces.size()) + " distinct planes, need 5");
  r.passed = ck.ok();
  r.summary = std::to_string(hn.covector_spaces.size()) + " distinct planes from 6 curves, " + counts(ck);
}

void criterion_5(CriterionResult& r, const AcceptanceOptions& o) {
  r.title = "realization is not injective but the symbol on the cone sees only the realization";
  Checker ck(r);
  const auto lp = load_preset("r4_counterexample");
  const auto& p = lp.presentation;
  const auto it = std::find_if(lp.preset.operators.begin(), lp.preset.operators.end(),
                               [](const NamedEntry& e) { return e.name == "counterexample"; });
  ck.require(it != lp.preset.operators.end(), "preset has no counterexample operator");
  if (it == lp.preset.operators.end()) return;
  const UEAElement element = UEAElement::parse(it->value.text, p);
  const DiffOperator d = realize(element, p);
  std::size_t monomials = 0;
  for (const auto& e : monomials_up_to(p.dim(), 4)) {
    ck.require(apply(d, Polynomial::monomial(e, 1)).is_zero(), "realization does not annihilate a monomial");
    ++monomials;
  }
  const std::size_t k = element.degree();
  const Polynomial sigma = symbol_top(element, k, p.size());
  ck.require(!sigma.is_zero(), "top symbol is zero");
  const auto reg = regular_data(p);
  CurveFamilyConfig cfg;
  cfg.seed = o.seed;
  std::size_t spaces = 0;
  for (const auto& m : lp.preset.points) {
    const auto hn = hn_fiber(sample_nash_fiber(p, reg, m, cfg));
    for (const auto& s : hn.covector_spaces) {
      ck.require(symbol_on_fiber(sigma, m, s).is_zero(), "symbol nonzero on a fiber at m=" + point_to_string(m));
      ++spaces;
    }
  }
  r.passed = ck.ok();
  r.summary = std::to_string(monomials) + " monomials annihilated, symbol has " + std::to_string(sigma.term_count()) +
              " terms, vanishes on " + std::to_string(spaces) + " fiber spaces";
}

void criterion_6(CriterionResult& r, const AcceptanceOptions& o) {
  r.title = "pull-back consistency of the two symbols";
  Checker ck(r);
  Rng rng(o.seed + 6);
  std::size_t trials = 0;
  for (const auto& name : builtin_preset_names()) {
    const auto lp = load_preset(name);
    for (int e = 0; e < 5; ++e) {
      const UEAElement element = random_uea_element(lp.presentation, rng, 3, 4);
      const auto report = pullback_consistency(element, lp.presentation, rng, 20);
      for (const auto& t : report.trials) {
        ck.require(t.classical == t.pulled, name + ": mismatch at m=" + point_to_string(t.point) +
                                                " eta=" + point_to_string(t.eta));
        ++trials;
      }
    }
  }
  r.passed = ck.ok() && trials == 6 * 5 * 20;
  r.summary = std::to_string(trials) + " exact trials over " + std::to_string(builtin_preset_names().size()) +
              " presets, " + std::to_string(ck.failures()) + " mismatches";
}

void criterion_7(CriterionResult& r, const AcceptanceOptions& o) {
  r.title = "sandwich and limit-subalgebra properties";
  Checker ck(r);
  std::size_t limits = 0;
  std::size_t points = 0;
  for (const auto& name : builtin_preset_names()) {
    const auto lp = load_preset(name);
    const auto& p = lp.presentation;
    const auto reg = regular_data(p);
    const unsigned bound = default_degree_bound(p);
    CurveFamilyConfig cfg;
    cfg.seed = o.seed;
    for (const auto& m : lp.preset.points) {
      if (reg.is_regular(m)) continue;
      ++points;
      const auto nash = sample_nash_fiber(p, reg, m, cfg);
      const auto sw = sandwich_check(p, nash, bound);
      for (std::size_t i = 0; i < sw.entries.size(); ++i) {
        ck.require(sw.entries[i].sker_in_limit, name + " m=" + point_to_string(m) + ": Sker not inside limit " + std::to_string(i));
        ck.require(sw.entries[i].limit_in_kernel, name + " m=" + point_to_string(m) + ": limit " + std::to_string(i) + " not inside ker");
      }
      const auto iso = isotropy_algebra(p, m, bound);
      const auto sub = limit_subalgebra_check(p, nash, iso);
      for (std::size_t i = 0; i < sub.entries.size(); ++i) {
        ck.require(sub.entries[i].closed, name + " m=" + point_to_string(m) + ": limit " + std::to_string(i) + " not closed");
        ck.require(sub.entries[i].codimension == sub.expected_codimension,
                   name + " m=" + point_to_string(m) + ": codimension " + std::to_string(sub.entries[i].codimension) +
                       " != " + std::to_string(sub.expected_codimension));
      }
      limits += nash.limits.size();
    }
  }
  r.passed = ck.ok();
  r.summary = std::to_string(limits) + " limits at " + std::to_string(points) + " singular points, " + counts(ck);
}

void criterion_8(CriterionResult& r, const AcceptanceOptions& o) {
  r.title = "Poisson invariance of the cone";
  Checker ck(r);
  double worst_drift = 0.0;
  double worst_lift = 0.0;
  std::size_t scenarios = 0;
  for (const std::string name : {"so3_r3", "vanishing_origin_2"}) {
    const auto lp = load_preset(name);
    const auto& p = lp.presentation;
    for (std::size_t g = 0; g < p.size(); ++g) {
      const auto ids = verify_hamiltonian_identities(p, hamiltonian_field(p, g));
      ck.require(ids.ok(), name + ": Hamiltonian identities fail for generator " + p.generator_names()[g]);
    }
    Rng rng(o.seed + 8);
    for (const auto& entry : lp.preset.scenarios) {
      const auto sc = parse_scenario(entry.name, entry.value.text, p);
      const RationalVector eta = sc.eta ? *sc.eta : rng.nonzero_integer_vector(p.dim(), 3);
      ck.require(verify_hamiltonian_identities(p, hamiltonian_field(p, sc.section)).ok(),
                 name + "/" + sc.name + ": Hamiltonian identities fail");
      InvarianceConfig cfg;
      cfg.duration = sc.duration;
      cfg.steps = sc.steps;
      cfg.curves.seed = o.seed;
      const auto inv = hn_invariance_test(p, sc.point, sc.section, eta, cfg);
      worst_drift = std::max(worst_drift, inv.max_drift);
      ck.require(inv.max_drift <= 1e-6, name + "/" + sc.name + ": drift " + fmt(inv.max_drift));
      const auto lift = cotangent_lift_check(p, sc.point, eta, sc.section, sc.duration, sc.steps, 1e-6);
      worst_lift = std::max(worst_lift, lift.max_deviation);
      ck.require(lift.max_deviation <= 1e-6, name + "/" + sc.name + ": cotangent deviation " + fmt(lift.max_deviation));
      ++scenarios;
    }
  }
  ck.require(scenarios == 6, std::to_string(scenarios) + " scenarios run, expected 6");
  r.passed = ck.ok();
  r.summary = std::to_string(scenarios) + " scenarios, max drift " + fmt(worst_drift) + ", max cotangent deviation " +
              fmt(worst_lift);
}

void criterion_9(CriterionResult& r, const AcceptanceOptions& o) {
  r.title = "ellipticity verdicts";
  Checker ck(r);
  EllipticityConfig cfg;
  cfg.curves.seed = o.seed;
  {
    const auto lp = load_preset("so3_r3");
    const auto& p = lp.presentation;
    const auto sos = UEAElement::parse("g1.g1 + g2.g2 + g3.g3", p);
    const auto rep = ellipticity_check(sos, p, lp.preset.points, cfg);
    ck.require(rep.elliptic(), "sum of squares on so3_r3 not elliptic");
    for (const auto& pt : rep.points) {
      ck.require(pt.elliptic(), "sum of squares not elliptic at " + point_to_string(pt.point));
      for (const auto& f : pt.fibers) {
        ck.require(f.exact_minimum && *f.exact_minimum == 1,
                   "sphere minimum at " + point_to_string(pt.point) + " is " + fmt(f.minimum) + ", not exactly 1");
      }
    }
    const auto g11 = UEAElement::parse("g1.g1", p);
    const auto rep2 = ellipticity_check(g11, p, {RationalVector{0, 0, 0}}, cfg);
    ck.require(!rep2.elliptic(), "g1^2 reported elliptic at the origin");
    bool witness = false;
    for (const auto& f : rep2.points.at(0).fibers) witness = witness || (f.identically_zero && !f.elliptic);
    ck.require(witness, "no fiber with vanishing symbol reported for g1^2 at the origin");
  }
  {
    const auto lp = load_preset("debord_line");
    const auto& p = lp.presentation;
    const auto rep = ellipticity_check(UEAElement::parse("g1.g1", p), p, lp.preset.points, cfg);
    ck.require(rep.elliptic(), "g1^2 on the Debord line not elliptic");
  }
  r.passed = ck.ok();
  r.summary = counts(ck);
}

void criterion_10(CriterionResult& r, const std::vector<TraceRecord>& traces) {
  r.title = "float Pluecker evaluation at t = 1e-4 matches the exact limits";
  Checker ck(r);
  double worst = 0.0;
  std::size_t bad = 0;
  for (const auto& rec : traces) {
    const auto approx = float_tracked_basis(rec.trace, 1e-4);
    const double angle = subspace_distance(approx, to_double_rows(rec.trace.tracked_limit.basis()));
    worst = std::max(worst, angle);
    const bool ok = angle < 1e-6;
    bad += !ok;
    ck.require(ok, rec.where + ": angle " + fmt(angle));
  }
  r.passed = ck.ok();
  r.summary = std::to_string(traces.size() - bad) + "/" + std::to_string(traces.size()) +
              " limits within 1e-6, worst angle " + fmt(worst);
}

void criterion_11(CriterionResult& r, const AcceptanceOptions& o) {
  r.title = "fibers do not depend on the anchored bundle";
  Checker ck(r);
  const auto lp = load_preset("so3_r3");
  const auto& p = lp.presentation;
  const std::size_t n = p.dim();
  // x*g1 + y*g2: a redundant generator (x*g1 + y*g2 + z*g3 vanishes identically).
  const std::vector<Polynomial> combination{Polynomial::variable(n, 0), Polynomial::variable(n, 1), Polynomial(n)};
  const Augmentation aug = augment(p, combination, "g4", default_degree_bound(p));
  const auto& q = aug.presentation;
  const auto reg_p = regular_data(p);
  const auto reg_q = regular_data(q);
  CurveFamilyConfig cfg;
  cfg.seed = o.seed;
  std::size_t compared = 0;
  for (const auto& m : lp.preset.points) {
    const auto curves = curve_family(m, cfg, true);
    const auto np = nash_fiber(p, reg_p, m, curves);
    const auto nq = nash_fiber(q, reg_q, m, curves);
    const auto iso = isotropy_algebra(p, m, default_degree_bound(p));
    const RationalMatrix psi = aug.projection_at(m);  // N x (N+1)
    std::set<Subspace> images_p;
    std::set<Subspace> images_q;
    for (std::size_t c = 0; c < curves.size(); ++c) {
      const auto& op = np.curves[c];
      const auto& oq = nq.curves[c];
      ck.require(op.accepted == oq.accepted, "curve " + curves[c].label() + " accepted by one presentation only");
      if (!op.accepted || !oq.accepted) continue;
      const Subspace& vp = np.limits[op.limit_index];
      std::vector<RationalVector> pushed;
      for (const auto& b : nq.limits[oq.limit_index].basis_vectors()) pushed.push_back(multiply(psi, b));
      const Subspace vq = make_subspace(pushed, p.size());
      ck.require(vq == vp, "m=" + point_to_string(m) + " " + curves[c].label() + ": pushed limit differs");
      const Subspace ip = quotient_image(iso, vp);
      const Subspace iq = quotient_image(iso, vq);
      ck.require(ip == iq, "m=" + point_to_string(m) + " " + curves[c].label() + ": quotient images differ");
      images_p.insert(ip);
      images_q.insert(iq);
      ++compared;
    }
    ck.require(images_p == images_q, "m=" + point_to_string(m) + ": fiber images differ as sets");
  }
  r.passed = ck.ok();
  r.summary = std::to_string(compared) + " limits compared at " + std::to_string(lp.preset.points.size()) + " points, " +
              counts(ck);
}

const char* kTitles[] = {"",
                         "so(3) regular fibers are the orthogonal planes",
                         "so(3) singular fiber covers the dual",
                         "gl_d fibers at the origin are rank <= 1 matrices",
                         "order-two fibers lie on the cone uv = w^2",
                         "realization is not injective but the symbol on the cone sees only the realization",
                         "pull-back consistency of the two symbols",
                         "sandwich and limit-subalgebra properties",
                         "Poisson invariance of the cone",
                         "ellipticity verdicts",
                         "float Pluecker evaluation at t = 1e-4 matches the exact limits",
                         "fibers do not depend on the anchored bundle"};

void dispatch(int id, CriterionResult& r, const AcceptanceOptions& o, std::vector<TraceRecord>* traces) {
  switch (id) {
    case 1: criterion_1(r, o, traces); break;
    case 2: criterion_2(r, o, traces); break;
    case 3: criterion_3(r, o, traces); break;
    case 4: criterion_4(r, o, traces); break;
    case 5: criterion_5(r, o); break;
    case 6: criterion_6(r, o); break;
    case 7: criterion_7(r, o); break;
    case 8: criterion_8(r, o); break;
    case 9: criterion_9(r, o); break;
    case 10: {
      std::vector<TraceRecord> own;
      for (int k = 1; k <= 4; ++k) {
        CriterionResult scratch;
        dispatch(k, scratch, o, &own);
      }
      criterion_10(r, traces ? *traces : own);
      break;
    }
    case 11: criterion_11(r, o); break;
    default: throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  }
}

CriterionResult run_one(int id, const AcceptanceOptions& o, std::vector<TraceRecord>* traces) {
  CriterionResult r;
  r.id = id;
  r.title = kTitles[id];
  const auto t0 = std::chrono::steady_clock::now();
  try {
    dispatch(id, r, o, traces);
  } catch (const std::exception& e) {
    r.passed = false;
    r.summary = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > 11) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  return run_one(id, options, nullptr);
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  std::vector<TraceRecord> traces;
  for (int id = 1; id <= 11; ++id) {
    // Criterion 10 reuses the limits computed by criteria 1-4.
    CriterionResult r = run_one(id, options, id <= 4 || id == 10 ? &traces : nullptr);
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result_line(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.title << " -- " << r.summary << " ("
    << std::fixed << std::setprecision(2) << r.seconds << "s)";
  return s.str();
}

}  // namespace hnc
