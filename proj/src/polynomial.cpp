#include "hnc/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hnc {

unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (auto k : e) d += k;
  return d;
}

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = total_degree(a);
  unsigned db = total_degree(b);
  if (da != db) return da < db;
  // Within a degree, x_0 dominates: larger exponent on an earlier variable is bigger.
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("polynomial ring mismatch: " + std::to_string(a.nvars()) + " vs " +
                                std::to_string(b.nvars()) + " variables");
  }
}

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  Polynomial p(nvars);
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(Exponent exponent, const Rational& c) {
  Polynomial p(exponent.size());
  p.add_term(exponent, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && hnc::total_degree(terms_.begin()->first) == 0);
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(hnc::total_degree(terms_.rbegin()->first));
}

int Polynomial::min_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(hnc::total_degree(terms_.begin()->first));
}

bool Polynomial::is_homogeneous() const { return total_degree() == min_degree(); }

int Polynomial::degree_in(std::size_t first, std::size_t count) const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t i = first; i < first + count; ++i) d += static_cast<int>(e[i]);
    best = std::max(best, d);
  }
  return best;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Exponent(nvars_, 0)); }

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length does not match ring");
  if (hnc::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (hnc::is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (hnc::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  Polynomial r(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
  }
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluate: point dimension mismatch");
  Rational sum = 0;
  Rational term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < nvars_ && !hnc::is_zero(term); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluate: point dimension mismatch");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> values) const {
  if (values.size() != nvars_) throw std::invalid_argument("substitute: arity mismatch");
  std::size_t target = values.empty() ? 0 : values.front().nvars();
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  Polynomial result(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (cache.size() <= e[i]) cache.push_back(cache.back() * values[i]);
      term = term * cache[e[i]];
    }
    result += term;
  }
  return result;
}

Polynomial Polynomial::partial_evaluate(std::size_t first, std::span<const Rational> values) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    Exponent f = e;
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (unsigned k = 0; k < e[first + i]; ++k) coeff *= values[i];
      f[first + i] = 0;
    }
    r.add_term(f, coeff);
  }
  return r;
}

Polynomial Polynomial::embed(std::size_t nvars, std::size_t offset) const {
  if (offset + nvars_ > nvars) throw std::invalid_argument("embed: target ring too small");
  Polynomial r(nvars);
  for (const auto& [e, c] : terms_) {
    Exponent f(nvars, 0);
    std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
    r.add_term(f, c);
  }
  return r;
}

Polynomial Polynomial::homogeneous_part_in(std::size_t first, std::size_t count, unsigned degree) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (std::size_t i = first; i < first + count; ++i) d += e[i];
    if (d == degree) r.add_term(e, c);
  }
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial quotient(a.nvars());
  Polynomial rem = a;
  const auto& [lead_e, lead_c] = b.leading_term();
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    Exponent q(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      q[i] = re[i] - lead_e[i];
    }
    Polynomial step = monomial(q, rc / lead_c);
    rem -= step * b;
    quotient += step;
  }
  return quotient;
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto q = Polynomial::divide_exact(a, b);
  if (!q) throw std::domain_error("polynomial division is not exact");
  return *q;
}

// ---------------------------------------------------------------------------

PolyVectorField::PolyVectorField(std::size_t nvars) {
  components_.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) components_.emplace_back(nvars);
}

PolyVectorField::PolyVectorField(std::vector<Polynomial> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.nvars() != components_.size()) {
      throw std::invalid_argument("vector field: component count must equal the number of variables");
    }
  }
}

bool PolyVectorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

int PolyVectorField::degree() const {
  int d = -1;
  for (const auto& c : components_) d = std::max(d, c.total_degree());
  return d;
}

std::optional<unsigned> PolyVectorField::homogeneous_degree() const {
  std::optional<unsigned> deg;
  for (const auto& c : components_) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) return std::nullopt;
    auto d = static_cast<unsigned>(c.total_degree());
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg.value_or(0u);
}

Polynomial PolyVectorField::apply(const Polynomial& f) const {
  if (f.nvars() != nvars()) throw std::invalid_argument("vector field applied to polynomial in another ring");
  Polynomial r(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (components_[i].is_zero()) continue;
    Polynomial d = f.derivative(i);
    if (!d.is_zero()) r += components_[i] * d;
  }
  return r;
}

std::vector<double> PolyVectorField::evaluate(std::span<const double> point) const {
  std::vector<double> out(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) out[i] = components_[i].evaluate(point);
  return out;
}

RationalVector PolyVectorField::evaluate(std::span<const Rational> point) const {
  RationalVector out(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) out[i] = components_[i].evaluate(point);
  return out;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& other) {
  if (other.nvars() != nvars()) throw std::invalid_argument("vector field dimension mismatch");
  for (std::size_t i = 0; i < nvars(); ++i) components_[i] += other.components_[i];
  return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& other) {
  if (other.nvars() != nvars()) throw std::invalid_argument("vector field dimension mismatch");
  for (std::size_t i = 0; i < nvars(); ++i) components_[i] -= other.components_[i];
  return *this;
}

PolyVectorField operator*(const Polynomial& f, const PolyVectorField& x) {
  PolyVectorField r = x;
  for (auto& c : r.components_) c = f * c;
  return r;
}

PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y) {
  if (x.nvars() != y.nvars()) throw std::invalid_argument("lie_bracket: variable-set mismatch");
  std::vector<Polynomial> out;
  out.reserve(x.nvars());
  for (std::size_t i = 0; i < x.nvars(); ++i) out.push_back(x.apply(y[i]) - y.apply(x[i]));
  return PolyVectorField(std::move(out));
}

std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent e(nvars, 0);
  // Recursive fill: first variable takes the largest share first.
  auto rec = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i + 1 == nvars) {
      e[i] = remaining;
      out.push_back(e);
      return;
    }
    for (int k = static_cast<int>(remaining); k >= 0; --k) {
      e[i] = static_cast<unsigned>(k);
      self(self, i + 1, remaining - static_cast<unsigned>(k));
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<Exponent> monomials_up_to(std::size_t nvars, unsigned degree) {
  std::vector<Exponent> out;
  for (unsigned d = 0; d <= degree; ++d) {
    auto part = monomials_of_degree(nvars, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace hnc
