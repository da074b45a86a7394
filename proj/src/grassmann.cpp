#include "hnc/grassmann.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "hnc/errors.hpp"

namespace hnc {

namespace {

Rational minor_of(const RationalMatrix& rows, const std::vector<std::size_t>& cols) {
  const std::size_t k = cols.size();
  RationalMatrix sub(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) sub(i, j) = rows(i, cols[j]);
  }
  return determinant(std::move(sub));
}

UniPoly minor_of(const UniPolyMatrix& rows, const std::vector<std::size_t>& cols) {
  const std::size_t k = cols.size();
  UniPolyMatrix sub(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) sub(i, j) = rows(i, cols[j]);
  }
  return determinant(std::move(sub));
}

std::map<std::vector<std::size_t>, std::size_t> subset_index(std::size_t n, std::size_t k) {
  std::map<std::vector<std::size_t>, std::size_t> idx;
  auto subsets = k_subsets(n, k);
  for (std::size_t i = 0; i < subsets.size(); ++i) idx.emplace(std::move(subsets[i]), i);
  return idx;
}

/// Entry j of basis row a for the subspace whose Pluecker coordinate at the
/// subset `base` is nonzero: the minor with column base[a] replaced by j.
/// Returns (index into the Pluecker vector, sign) or nullopt when the minor
/// has a repeated column.
std::optional<std::pair<std::size_t, int>> replaced_minor(const std::vector<std::size_t>& base, std::size_t a,
                                                          std::size_t j,
                                                          const std::map<std::vector<std::size_t>, std::size_t>& index) {
  for (std::size_t b = 0; b < base.size(); ++b) {
    if (b != a && base[b] == j) return std::nullopt;
  }
  std::vector<std::size_t> s = base;
  s[a] = j;
  std::sort(s.begin(), s.end());
  const auto pos = static_cast<std::size_t>(std::find(s.begin(), s.end(), j) - s.begin());
  const std::size_t shift = pos > a ? pos - a : a - pos;
  return std::make_pair(index.at(s), shift % 2 == 0 ? 1 : -1);
}

Eigen::MatrixXd orthonormal_columns(const std::vector<std::vector<double>>& rows, std::size_t n) {
  const std::size_t k = rows.size();
  Eigen::MatrixXd a(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    if (rows[j].size() != n) throw std::invalid_argument("subspace_distance: ragged basis");
    for (std::size_t i = 0; i < n; ++i) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[j][i];
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  return qr.householderQ() * Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
}

}  // namespace

std::vector<RationalVector> Subspace::basis_vectors() const {
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
  RationalVector w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (is_zero(basis_(i, p))) ++p;
    if (is_zero(w[p])) continue;
    const Rational f = w[p];
    for (std::size_t j = p; j < ambient_; ++j) {
      if (!is_zero(basis_(i, j))) w[j] -= f * basis_(i, j);
    }
  }
  return is_zero_vector(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
  for (std::size_t i = 0; i < other.basis_.rows(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.plucker_ < b.plucker_;
}

Subspace make_subspace(const RationalMatrix& rows) {
  auto [red, pivots] = rref(rows);
  Subspace s;
  s.ambient_ = rows.cols();
  s.basis_ = RationalMatrix(pivots.size(), rows.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = 0; j < rows.cols(); ++j) s.basis_(i, j) = red(i, j);
  }
  s.plucker_ = plucker_vector(s.basis_);
  make_primitive(s.plucker_);
  return s;
}

Subspace make_subspace(const std::vector<RationalVector>& vectors, std::size_t ambient_dim) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw std::invalid_argument("make_subspace: ambient dimension mismatch");
  }
  return make_subspace(RationalMatrix::from_rows(vectors, ambient_dim));
}

Subspace zero_subspace(std::size_t ambient_dim) { return make_subspace(RationalMatrix(0, ambient_dim)); }

Subspace full_space(std::size_t ambient_dim) {
  RationalMatrix id(ambient_dim, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) id(i, i) = 1;
  return make_subspace(id);
}

Subspace annihilator(const Subspace& v) {
  if (v.dim() == 0) return full_space(v.ambient_dim());
  return make_subspace(kernel_basis(v.basis()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  auto rows = a.basis_vectors();
  for (auto& r : b.basis_vectors()) rows.push_back(std::move(r));
  return make_subspace(rows, a.ambient_dim());
}

Subspace intersection(const Subspace& a, const Subspace& b) { return annihilator(sum(annihilator(a), annihilator(b))); }

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

RationalVector plucker_vector(const RationalMatrix& rows) {
  RationalVector p;
  for (const auto& s : k_subsets(rows.cols(), rows.rows())) p.push_back(minor_of(rows, s));
  return p;
}

std::vector<UniPoly> plucker_vector(const UniPolyMatrix& rows) {
  std::vector<UniPoly> p;
  for (const auto& s : k_subsets(rows.cols(), rows.rows())) p.push_back(minor_of(rows, s));
  return p;
}

Subspace from_plucker(std::span<const Rational> p, std::size_t ambient_dim, std::size_t k) {
  const auto subsets = k_subsets(ambient_dim, k);
  if (p.size() != subsets.size()) throw std::invalid_argument("from_plucker: wrong Pluecker vector length");
  std::size_t first = 0;
  while (first < p.size() && is_zero(p[first])) ++first;
  if (first == p.size()) throw ZeroPluckerLimit();
  const auto index = subset_index(ambient_dim, k);
  const auto& base = subsets[first];
  RationalMatrix b(k, ambient_dim);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t j = 0; j < ambient_dim; ++j) {
      auto m = replaced_minor(base, a, j, index);
      if (!m) continue;
      b(a, j) = p[m->first] / p[first];
      if (m->second < 0) b(a, j) = -b(a, j);
    }
  }
  Subspace s = make_subspace(b);
  RationalVector normalized(p.begin(), p.end());
  make_primitive(normalized);
  if (s.dim() != k || s.plucker() != normalized) {
    throw InvariantViolation("from_plucker: vector is not decomposable");
  }
  return s;
}

Curve::Curve(RationalVector center, std::vector<UniPoly> components, std::string label)
    : center_(std::move(center)), components_(std::move(components)), label_(std::move(label)) {
  if (center_.size() != components_.size()) throw std::invalid_argument("Curve: component count mismatch");
  for (std::size_t i = 0; i < center_.size(); ++i) {
    if (components_[i].coefficient(0) != center_[i]) throw std::invalid_argument("Curve: x(0) differs from center");
  }
}

Curve Curve::constant(const RationalVector& m) {
  std::vector<UniPoly> comps;
  for (const auto& c : m) comps.emplace_back(c);
  return Curve(m, std::move(comps), "constant");
}

Curve Curve::ray(const RationalVector& m, const RationalVector& d) {
  if (m.size() != d.size()) throw std::invalid_argument("Curve::ray: dimension mismatch");
  std::vector<UniPoly> comps;
  for (std::size_t i = 0; i < m.size(); ++i) comps.push_back(UniPoly(std::vector<Rational>{m[i], d[i]}));
  return Curve(m, std::move(comps), "ray " + point_to_string(d));
}

bool Curve::is_constant() const {
  return std::all_of(components_.begin(), components_.end(), [](const UniPoly& c) { return c.degree() <= 0; });
}

std::vector<double> Curve::evaluate(double t) const {
  std::vector<double> out;
  for (const auto& c : components_) out.push_back(c.evaluate(t));
  return out;
}

RationalVector Curve::evaluate(const Rational& t) const {
  RationalVector out;
  for (const auto& c : components_) out.push_back(c.evaluate(t));
  return out;
}

UniPoly substitute(const Polynomial& p, const Curve& c) {
  if (p.nvars() != c.components().size()) throw std::invalid_argument("substitute: variable count mismatch");
  std::vector<std::vector<UniPoly>> powers(p.nvars(), std::vector<UniPoly>{UniPoly(1)});
  auto power = [&](std::size_t var, std::uint32_t e) -> const UniPoly& {
    auto& cache = powers[var];
    while (cache.size() <= e) cache.push_back(cache.back() * c.components()[var]);
    return cache[e];
  };
  UniPoly out;
  for (const auto& [e, coeff] : p.terms()) {
    UniPoly term(coeff);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term = term * power(i, e[i]);
    }
    out += term;
  }
  return out;
}

UniPolyMatrix substitute(const PolyMatrix& m, const Curve& c) {
  UniPolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = substitute(m(i, j), c);
  }
  return out;
}

LimitTrace trace_limit_along_curve(const PolyMatrix& m, const Curve& curve, std::size_t expected_dim) {
  const UniPolyMatrix mt = substitute(m, curve);
  const std::size_t n = m.cols();
  const UniPolyMatrix kernel = kernel_basis_over_curve(mt);
  if (kernel.rows() != expected_dim) throw CurveNotGeneric(expected_dim, kernel.rows());

  LimitTrace trace;
  trace.via_row_space = expected_dim > n - expected_dim;
  const UniPolyMatrix tracked = trace.via_row_space ? row_space_over_curve(mt) : kernel;
  trace.tracked_dim = tracked.rows();
  trace.plucker = plucker_vector(tracked);

  bool any = false;
  std::size_t v = 0;
  for (const auto& p : trace.plucker) {
    if (p.is_zero()) continue;
    v = any ? std::min(v, p.valuation()) : p.valuation();
    any = true;
  }
  if (!any) throw ZeroPluckerLimit();
  trace.valuation = v;
  RationalVector lead;
  for (const auto& p : trace.plucker) lead.push_back(p.coefficient(v));
  trace.tracked_limit = from_plucker(lead, n, trace.tracked_dim);
  trace.limit = trace.via_row_space ? annihilator(trace.tracked_limit) : trace.tracked_limit;
  if (trace.limit.dim() != expected_dim) throw InvariantViolation("limit_along_curve: limit has the wrong dimension");
  return trace;
}

Subspace limit_along_curve(const PolyMatrix& m, const Curve& curve, std::size_t expected_dim) {
  return trace_limit_along_curve(m, curve, expected_dim).limit;
}

std::vector<std::vector<double>> to_double_rows(const RationalMatrix& m) {
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_double(m.row(i)));
  return out;
}

double subspace_distance(const std::vector<std::vector<double>>& v, const std::vector<std::vector<double>>& w) {
  if (v.size() != w.size()) throw std::invalid_argument("subspace_distance: dimension mismatch");
  if (v.empty()) return 0.0;
  const std::size_t n = v.front().size();
  if (w.front().size() != n) throw std::invalid_argument("subspace_distance: ambient mismatch");
  const Eigen::MatrixXd q1 = orthonormal_columns(v, n);
  const Eigen::MatrixXd q2 = orthonormal_columns(w, n);
  const Eigen::MatrixXd cross = q1.transpose() * q2;
  const Eigen::MatrixXd residual = q2 - q1 * cross;
  Eigen::JacobiSVD<Eigen::MatrixXd> sin_svd(residual);
  Eigen::JacobiSVD<Eigen::MatrixXd> cos_svd(cross);
  const double s = sin_svd.singularValues().maxCoeff();
  const double c = cos_svd.singularValues().minCoeff();
  return std::atan2(s, std::max(c, 0.0));
}

double subspace_distance(const Subspace& v, const Subspace& w) {
  if (v.ambient_dim() != w.ambient_dim()) throw std::invalid_argument("subspace_distance: ambient mismatch");
  if (v.dim() != w.dim()) throw std::invalid_argument("subspace_distance: dimension mismatch");
  return subspace_distance(to_double_rows(v.basis()), to_double_rows(w.basis()));
}

std::vector<std::vector<double>> float_tracked_basis(const LimitTrace& trace, double t) {
  const std::size_t k = trace.tracked_dim;
  const std::size_t n = trace.tracked_limit.ambient_dim();
  std::vector<double> p;
  for (const auto& poly : trace.plucker) p.push_back(poly.evaluate(t));
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (std::abs(p[i]) > std::abs(p[best])) best = i;
  }
  const double scale = p[best];
  if (scale == 0.0 || !std::isfinite(scale)) throw std::domain_error("float_tracked_basis: degenerate evaluation");
  for (auto& x : p) x /= scale;
  const auto subsets = k_subsets(n, k);
  const auto index = subset_index(n, k);
  const auto& base = subsets[best];
  std::vector<std::vector<double>> rows(k, std::vector<double>(n, 0.0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t j = 0; j < n; ++j) {
      auto m = replaced_minor(base, a, j, index);
      if (m) rows[a][j] = m->second * p[m->first];
    }
  }
  return rows;
}

}  // namespace hnc
