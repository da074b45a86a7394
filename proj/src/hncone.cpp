#include "hnc/hncone.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hnc/errors.hpp"
#include "hnc/random.hpp"

namespace hnc {

namespace {

RationalVector unit(std::size_t n, std::size_t i) {
  RationalVector e(n);
  e[i] = 1;
  return e;
}

bool parallel(const RationalVector& a, const RationalVector& b) {
  RationalVector x = a;
  RationalVector y = b;
  make_primitive(x);
  make_primitive(y);
  return x == y;
}

void add_ray(std::vector<Curve>& out, std::vector<RationalVector>& used, const RationalVector& m,
             const RationalVector& d) {
  for (const auto& u : used) {
    if (parallel(u, d)) return;
  }
  used.push_back(d);
  out.push_back(Curve::ray(m, d));
}

std::vector<RationalVector> deterministic_directions(std::size_t n) {
  std::vector<RationalVector> dirs;
  for (std::size_t i = 0; i < n; ++i) dirs.push_back(unit(n, i));
  if (n >= 2) {
    std::vector<RationalVector> diag;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + 1) % n;
      for (int s : {1, -1}) {
        RationalVector d = unit(n, i);
        d[j] += s;
        bool dup = false;
        for (const auto& u : diag) dup = dup || parallel(u, d);
        if (!dup) diag.push_back(d);
      }
    }
    dirs.insert(dirs.end(), diag.begin(), diag.end());
  }
  return dirs;
}

}  // namespace

std::string CurveFamilyConfig::describe() const {
  return "rays=" + std::to_string(direction_count) + " arc_degree=" + std::to_string(arc_degree) +
         " seed=" + std::to_string(seed);
}

std::size_t deterministic_ray_count(std::size_t n) { return deterministic_directions(n).size(); }

std::vector<Curve> curve_family(const RationalVector& m, const CurveFamilyConfig& config, bool include_constant) {
  const std::size_t n = m.size();
  std::vector<Curve> out;
  if (include_constant) out.push_back(Curve::constant(m));
  std::vector<RationalVector> used;
  for (const auto& d : deterministic_directions(n)) add_ray(out, used, m, d);
  for (unsigned g = 2; g <= config.arc_degree; ++g) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        std::vector<UniPoly> comps;
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<Rational> c(g + 1);
          c[0] = m[k];
          if (k == i) c[1] += 1;
          if (k == j) c[g] += 1;
          comps.push_back(UniPoly(std::move(c)));
        }
        out.emplace_back(m, std::move(comps),
                         "arc e" + std::to_string(i + 1) + "*t + e" + std::to_string(j + 1) + "*t^" + std::to_string(g));
      }
    }
  }
  Rng rng(config.seed);
  std::size_t guard = 0;
  while (used.size() < config.direction_count && guard < 100 * config.direction_count) {
    ++guard;
    add_ray(out, used, m, rng.nonzero_integer_vector(n, 5));
  }
  return out;
}

NashFiberSample nash_fiber(const FoliationPresentation& p, const RegularData& reg, const RationalVector& m,
                           const std::vector<Curve>& curves) {
  if (m.size() != p.dim()) throw std::invalid_argument("nash_fiber: point has the wrong dimension");
  NashFiberSample s;
  s.point = m;
  s.rank = reg.rank;
  s.expected_dim = p.size() - reg.rank;
  for (const auto& c : curves) {
    if (c.center() != m) throw std::invalid_argument("nash_fiber: curve not centered at the point");
    CurveOutcome o;
    o.label = c.label();
    try {
      LimitTrace t = trace_limit_along_curve(reg.anchor, c, s.expected_dim);
      auto it = std::find(s.limits.begin(), s.limits.end(), t.limit);
      o.limit_index = static_cast<std::size_t>(it - s.limits.begin());
      if (it == s.limits.end()) s.limits.push_back(t.limit);
      o.accepted = true;
      o.trace = std::move(t);
    } catch (const CurveNotGeneric& e) {
      o.reason = e.what();
    }
    s.curves.push_back(std::move(o));
  }
  return s;
}

NashFiberSample nash_fiber(const FoliationPresentation& p, const RationalVector& m, const std::vector<Curve>& curves) {
  return nash_fiber(p, regular_data(p), m, curves);
}

NashFiberSample sample_nash_fiber(const FoliationPresentation& p, const RegularData& reg, const RationalVector& m,
                                  const CurveFamilyConfig& config) {
  auto curves = curve_family(m, config, reg.is_regular(m));
  NashFiberSample s = nash_fiber(p, reg, m, curves);
  Rng rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  for (int attempt = 0; s.limits.empty() && attempt < 64; ++attempt) {
    auto extra = nash_fiber(p, reg, m, {Curve::ray(m, rng.nonzero_integer_vector(m.size(), 9))});
    for (auto& o : extra.curves) {
      if (o.accepted) {
        s.limits = extra.limits;
        o.limit_index = 0;
      }
      s.curves.push_back(std::move(o));
    }
  }
  return s;
}

HNFiberSample hn_fiber(const NashFiberSample& nash) {
  HNFiberSample h;
  h.point = nash.point;
  h.rank = nash.rank;
  for (const auto& v : nash.limits) h.covector_spaces.push_back(annihilator(v));
  return h;
}

HNFiberSample hn_fiber(const FoliationPresentation& p, const RationalVector& m, const std::vector<Curve>& curves) {
  return hn_fiber(nash_fiber(p, m, curves));
}

bool SandwichReport::ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const SandwichEntry& e) { return e.sker_in_limit && e.limit_in_kernel; });
}

SandwichReport sandwich_check(const FoliationPresentation& p, const NashFiberSample& sample, unsigned degree_bound) {
  SandwichReport r;
  r.kernel = kernel_at(p, sample.point);
  r.sker = strong_kernel_at(p, sample.point, degree_bound);
  r.degree_bound = degree_bound;
  for (const auto& v : sample.limits) r.entries.push_back({v.contains(r.sker), r.kernel.contains(v)});
  return r;
}

Subspace quotient_image(const IsotropyAlgebra& g, const Subspace& v) {
  std::vector<RationalVector> coords;
  for (const auto& b : v.basis_vectors()) coords.push_back(g.quotient_coordinates(b));
  return make_subspace(coords, g.dim());
}

bool SubalgebraReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [this](const SubalgebraEntry& e) {
    return e.closed && e.codimension == expected_codimension;
  });
}

SubalgebraReport limit_subalgebra_check(const FoliationPresentation& p, const NashFiberSample& sample,
                                        const IsotropyAlgebra& isotropy) {
  if (isotropy.point != sample.point) throw std::invalid_argument("limit_subalgebra_check: points differ");
  SubalgebraReport r;
  r.isotropy_dim = isotropy.dim();
  r.expected_codimension = sample.rank - leaf_dimension_at(p, sample.point);
  for (const auto& v : sample.limits) {
    SubalgebraEntry e;
    e.image = quotient_image(isotropy, v);
    e.closed = true;
    const auto basis = e.image.basis_vectors();
    for (std::size_t a = 0; a < basis.size() && e.closed; ++a) {
      for (std::size_t b = a + 1; b < basis.size() && e.closed; ++b) {
        e.closed = e.image.contains(isotropy.bracket(basis[a], basis[b]));
      }
    }
    e.codimension = isotropy.dim() - e.image.dim();
    r.entries.push_back(std::move(e));
  }
  return r;
}

double distance_to_subspace(const Subspace& v, std::span<const double> xi) {
  const auto n = static_cast<Eigen::Index>(v.ambient_dim());
  if (xi.size() != v.ambient_dim()) throw std::invalid_argument("distance_to_subspace: dimension mismatch");
  Eigen::VectorXd x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = xi[static_cast<std::size_t>(i)];
  if (v.dim() == 0) return x.norm();
  const auto k = static_cast<Eigen::Index>(v.dim());
  Eigen::MatrixXd a(n, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      a(i, j) = v.basis()(static_cast<std::size_t>(j), static_cast<std::size_t>(i)).get_d();
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, k);
  return (x - q * (q.transpose() * x)).norm();
}

double hn_membership_distance(const HNFiberSample& sample, std::span<const double> xi) {
  if (sample.covector_spaces.empty()) throw std::invalid_argument("hn_membership_distance: empty fiber sample");
  double best = INFINITY;
  for (const auto& v : sample.covector_spaces) best = std::min(best, distance_to_subspace(v, xi));
  return best;
}

}  // namespace hnc
