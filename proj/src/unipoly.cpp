#include "hnc/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hnc {

UniPoly::UniPoly(const Rational& c) {
  if (!hnc::is_zero(c)) coeffs_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(std::size_t k, const Rational& c) {
  UniPoly p;
  if (hnc::is_zero(c)) return p;
  p.coeffs_.assign(k + 1, Rational(0));
  p.coeffs_[k] = c;
  return p;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && hnc::is_zero(coeffs_.back())) coeffs_.pop_back();
}

std::size_t UniPoly::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!hnc::is_zero(coeffs_[k])) return k;
  }
  return 0;
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UniPoly::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<unsigned long>(k));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (hnc::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (hnc::is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (!hnc::is_zero(b.coeffs_[j])) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("UniPoly division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quo(a.coeffs_.size() - b.coeffs_.size() + 1, Rational(0));
  const Rational& lb = b.lead();
  for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k) + b.coeffs_.size() - 1];
    if (hnc::is_zero(top)) continue;
    Rational q = top / lb;
    quo[static_cast<std::size_t>(k)] = q;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (!hnc::is_zero(b.coeffs_[j])) rem[static_cast<std::size_t>(k) + j] -= q * b.coeffs_[j];
    }
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly r = *this;
  r *= Rational(1) / lead();
  return r;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (hnc::is_zero(c)) continue;
    bool neg = sgn(c) < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    bool unit = mag == 1;
    if (!unit || k == 0) s += mag.get_str();
    if (k > 0) {
      if (!unit) s += "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = UniPoly::divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("UniPoly division is not exact");
  return q;
}

void make_primitive(std::vector<UniPoly>& v) {
  UniPoly g;
  for (const auto& p : v) g = UniPoly::gcd(g, p);
  if (g.is_zero()) return;
  if (g.degree() > 0) {
    for (auto& p : v) p = exact_div(p, g);
  }
  // Rational content: lcm of denominators over gcd of numerators.
  RationalVector flat;
  for (const auto& p : v) {
    for (const auto& c : p.coefficients()) flat.push_back(c);
  }
  Integer l = 1;
  for (const auto& q : flat) {
    if (!is_zero(q)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  Integer gg = 0;
  for (const auto& q : flat) {
    if (is_zero(q)) continue;
    Integer n = q.get_num() * (l / q.get_den());
    mpz_gcd(gg.get_mpz_t(), gg.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(l, gg);
  scale.canonicalize();
  for (const auto& p : v) {
    if (!p.is_zero()) {
      if (sgn(p.lead()) < 0) scale = -scale;
      break;
    }
  }
  for (auto& p : v) p *= scale;
}

namespace {

int sign_at(const UniPoly& p, const Rational& x) { return sgn(p.evaluate(x)); }

std::size_t sign_changes(const std::vector<UniPoly>& seq, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_real_roots(const UniPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::domain_error("count_real_roots of the zero polynomial");
  std::vector<UniPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    auto r = UniPoly::divmod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(-r);
  }
  seq.pop_back();
  std::size_t va = sign_changes(seq, a);
  std::size_t vb = sign_changes(seq, b);
  return va >= vb ? va - vb : 0;
}

Rational root_bound(const UniPoly& p) {
  // Cauchy: 1 + max |a_k / a_n|.
  Rational m = 0;
  for (std::size_t k = 0; k + 1 < p.coefficients().size(); ++k) {
    Rational r = abs(p.coefficients()[k] / p.lead());
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace hnc
