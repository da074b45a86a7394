#include "hnc/symbols.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hnc/compiled.hpp"
#include "hnc/linalg.hpp"
#include "hnc/random.hpp"

namespace hnc {

namespace {

using Word = std::vector<std::size_t>;

/// X_{letters} . g rewritten with coefficients on the left.
std::vector<std::pair<Polynomial, Word>> move_left(const FoliationPresentation& p, std::span<const std::size_t> letters,
                                                   const Polynomial& g) {
  if (letters.empty()) return {{g, {}}};
  std::vector<std::pair<Polynomial, Word>> out;
  for (auto& [h, w] : move_left(p, letters.subspan(1), g)) {
    const Polynomial dh = p.generator(letters[0]).apply(h);
    Word lw{letters[0]};
    lw.insert(lw.end(), w.begin(), w.end());
    out.emplace_back(h, std::move(lw));
    if (!dh.is_zero()) out.emplace_back(dh, w);
  }
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Polynomial multi_derivative(Polynomial f, const Exponent& gamma) {
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    for (unsigned k = 0; k < gamma[i] && !f.is_zero(); ++k) f = f.derivative(i);
  }
  return f;
}

/// X o D for a first-order field X.
DiffOperator field_compose(const PolyVectorField& x, const DiffOperator& d) {
  DiffOperator out(d.nvars());
  for (const auto& [alpha, f] : d.terms()) {
    for (std::size_t i = 0; i < x.nvars(); ++i) {
      if (x[i].is_zero()) continue;
      Polynomial df = f.derivative(i);
      if (!df.is_zero()) out.add_term(alpha, x[i] * df);
      Exponent beta = alpha;
      ++beta[i];
      out.add_term(beta, x[i] * f);
    }
  }
  return out;
}

Rational symmetric_entry(const Polynomial& q, std::size_t a, std::size_t b, std::size_t r) {
  Exponent e(r, 0);
  ++e[a];
  ++e[b];
  Rational c = q.coefficient(e);
  if (a != b) c /= 2;
  return c;
}

struct RootInterval {
  Rational lo;
  Rational hi;  // root in (lo, hi]
};

void isolate(const UniPoly& chi, const Rational& lo, const Rational& hi, std::vector<RootInterval>& out, int depth) {
  const std::size_t c = count_real_roots(chi, lo, hi);
  if (c == 0) return;
  if (c == 1 || depth > 200) {
    out.push_back({lo, hi});
    return;
  }
  const Rational mid = (lo + hi) / 2;
  isolate(chi, lo, mid, out, depth + 1);
  isolate(chi, mid, hi, out, depth + 1);
}

/// Shrinks the interval and tries to recognise the root as a small rational.
std::pair<double, std::optional<Rational>> refine_root(const UniPoly& chi, RootInterval iv) {
  if (is_zero(chi.evaluate(iv.hi))) return {iv.hi.get_d(), iv.hi};
  const Rational width_goal(1, Integer(1) << 110);
  while (iv.hi - iv.lo > width_goal) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    if (count_real_roots(chi, iv.lo, mid) > 0) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
    if (is_zero(chi.evaluate(iv.hi))) return {iv.hi.get_d(), iv.hi};
  }
  const Rational mid = (iv.lo + iv.hi) / 2;
  // Continued-fraction convergents of the midpoint.
  Integer h_prev = 0, h = 1, k_prev = 1, k = 0;
  Integer num = mid.get_num();
  Integer den = mid.get_den();
  const Integer den_limit = Integer(1) << 48;
  while (den != 0) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    if (k > den_limit) break;
    Rational c(h, k);
    c.canonicalize();
    if (c > iv.lo && c <= iv.hi && is_zero(chi.evaluate(c))) return {c.get_d(), c};
    Integer rem = num - a * den;
    num = den;
    den = rem;
  }
  return {mid.get_d(), std::nullopt};
}

Eigen::MatrixXd orthonormal_rows_basis(const RationalMatrix& b) {
  const auto n = static_cast<Eigen::Index>(b.cols());
  const auto r = static_cast<Eigen::Index>(b.rows());
  Eigen::MatrixXd a(n, r);
  for (Eigen::Index j = 0; j < r; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) a(i, j) = b(static_cast<std::size_t>(j), static_cast<std::size_t>(i)).get_d();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  return qr.householderQ() * Eigen::MatrixXd::Identity(n, r);
}

/// Minimises sigma (or |sigma|) over unit xi in the column span of q by
/// sampling followed by projected gradient descent.
double sampled_minimum(const Polynomial& sigma_m, const Eigen::MatrixXd& q, bool absolute, std::size_t samples,
                       Rng& rng) {
  const std::size_t nn = sigma_m.nvars();
  const Eigen::Index r = q.cols();
  CompiledPolynomial f(sigma_m);
  std::vector<CompiledPolynomial> grad;
  for (std::size_t b = 0; b < nn; ++b) grad.emplace_back(sigma_m.derivative(b));
  auto objective = [&](const Eigen::VectorXd& w, Eigen::VectorXd* g) {
    Eigen::VectorXd xi = q * w;
    std::vector<double> x(xi.data(), xi.data() + xi.size());
    const double v = f(x);
    if (g) {
      Eigen::VectorXd gx(static_cast<Eigen::Index>(nn));
      for (std::size_t b = 0; b < nn; ++b) gx(static_cast<Eigen::Index>(b)) = grad[b](x);
      *g = q.transpose() * gx;
      if (absolute) *g *= 2.0 * v;
    }
    return absolute ? v * v : v;
  };
  std::vector<std::pair<double, Eigen::VectorXd>> pool;
  const std::size_t count = std::max<std::size_t>(1, 10 * static_cast<std::size_t>(r) * samples);
  for (std::size_t s = 0; s < count; ++s) {
    Eigen::VectorXd w(r);
    for (Eigen::Index i = 0; i < r; ++i) w(i) = rng.normal();
    if (w.norm() == 0.0) continue;
    w.normalize();
    pool.emplace_back(objective(w, nullptr), w);
  }
  std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  pool.resize(std::min<std::size_t>(pool.size(), 5));
  double best = pool.empty() ? INFINITY : pool.front().first;
  for (auto& [value, w] : pool) {
    double step = 0.1;
    for (int it = 0; it < 400 && step > 1e-14; ++it) {
      Eigen::VectorXd g;
      objective(w, &g);
      Eigen::VectorXd tangent = g - g.dot(w) * w;
      if (tangent.norm() < 1e-15) break;
      Eigen::VectorXd trial = (w - step * tangent).normalized();
      const double tv = objective(trial, nullptr);
      if (tv < value) {
        w = trial;
        value = tv;
        step *= 1.5;
      } else {
        step *= 0.5;
      }
    }
    best = std::min(best, value);
  }
  return absolute ? std::sqrt(std::max(best, 0.0)) : best;
}

}  // namespace

UEAElement::UEAElement(std::size_t nvars, std::vector<OperatorWord> words)
    : nvars_(nvars), words_(canonicalize_words(words, nvars)) {
  for (const auto& w : words_) {
    if (w.coefficient.nvars() != nvars_) throw std::invalid_argument("UEAElement: coefficient ring mismatch");
  }
}

UEAElement UEAElement::parse(std::string_view text, const FoliationPresentation& p) {
  return UEAElement(p.dim(), parse_operator(text, p.generator_names(), p.vars()));
}

std::size_t UEAElement::degree() const {
  std::size_t d = 0;
  for (const auto& w : words_) d = std::max(d, w.letters.size());
  return d;
}

UEAElement operator+(const UEAElement& a, const UEAElement& b) {
  auto words = a.words_;
  words.insert(words.end(), b.words_.begin(), b.words_.end());
  return UEAElement(std::max(a.nvars_, b.nvars_), std::move(words));
}

UEAElement operator-(const UEAElement& a, const UEAElement& b) {
  auto words = a.words_;
  for (const auto& w : b.words_) words.push_back({-w.coefficient, w.letters});
  return UEAElement(std::max(a.nvars_, b.nvars_), std::move(words));
}

UEAElement multiply(const UEAElement& a, const UEAElement& b, const FoliationPresentation& p) {
  std::vector<OperatorWord> out;
  for (const auto& wa : a.words()) {
    for (const auto& wb : b.words()) {
      for (auto& [h, w] : move_left(p, wa.letters, wb.coefficient)) {
        Word letters = std::move(w);
        letters.insert(letters.end(), wb.letters.begin(), wb.letters.end());
        out.push_back({wa.coefficient * h, std::move(letters)});
      }
    }
  }
  return UEAElement(p.dim(), std::move(out));
}

DiffOperator DiffOperator::multiplication(const Polynomial& f) {
  DiffOperator d(f.nvars());
  d.add_term(Exponent(f.nvars(), 0), f);
  return d;
}

DiffOperator DiffOperator::from_field(const PolyVectorField& x) {
  DiffOperator d(x.nvars());
  for (std::size_t i = 0; i < x.nvars(); ++i) {
    Exponent e(x.nvars(), 0);
    e[i] = 1;
    d.add_term(e, x[i]);
  }
  return d;
}

DiffOperator DiffOperator::derivative(const Exponent& alpha) {
  DiffOperator d(alpha.size());
  d.add_term(alpha, Polynomial::constant(alpha.size(), 1));
  return d;
}

int DiffOperator::order() const {
  int o = -1;
  for (const auto& [alpha, f] : terms_) o = std::max(o, static_cast<int>(total_degree(alpha)));
  return o;
}

void DiffOperator::add_term(const Exponent& alpha, const Polynomial& f) {
  if (alpha.size() != nvars_ || f.nvars() != nvars_) throw std::invalid_argument("DiffOperator: ring mismatch");
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOperator operator+(DiffOperator a, const DiffOperator& b) {
  for (const auto& [alpha, f] : b.terms_) a.add_term(alpha, f);
  return a;
}

DiffOperator operator-(DiffOperator a, const DiffOperator& b) {
  for (const auto& [alpha, f] : b.terms_) a.add_term(alpha, -f);
  return a;
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("compose: ring mismatch");
  const std::size_t n = a.nvars();
  DiffOperator out(n);
  for (const auto& [alpha, f] : a.terms()) {
    // Leibniz: d^alpha g = sum_{gamma <= alpha} C(alpha, gamma) (d^gamma g) d^{alpha - gamma}
    std::vector<Exponent> gammas{Exponent()};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Exponent> next;
      for (const auto& g : gammas) {
        for (unsigned k = 0; k <= alpha[i]; ++k) {
          Exponent h = g;
          h.push_back(k);
          next.push_back(std::move(h));
        }
      }
      gammas = std::move(next);
    }
    for (const auto& [beta, g] : b.terms()) {
      for (const auto& gamma : gammas) {
        Polynomial dg = multi_derivative(g, gamma);
        if (dg.is_zero()) continue;
        Integer coeff = 1;
        Exponent e(n);
        for (std::size_t i = 0; i < n; ++i) {
          coeff *= binomial(alpha[i], gamma[i]);
          e[i] = alpha[i] - gamma[i] + beta[i];
        }
        out.add_term(e, Rational(coeff) * (f * dg));
      }
    }
  }
  return out;
}

Polynomial apply(const DiffOperator& d, const Polynomial& f) {
  if (d.nvars() != f.nvars()) throw std::invalid_argument("apply: ring mismatch");
  Polynomial out(f.nvars());
  for (const auto& [alpha, c] : d.terms()) {
    Polynomial df = multi_derivative(f, alpha);
    if (!df.is_zero()) out += c * df;
  }
  return out;
}

DiffOperator realize(const UEAElement& element, const FoliationPresentation& p) {
  if (element.nvars() != p.dim() && !element.is_zero()) throw std::invalid_argument("realize: ring mismatch");
  DiffOperator out(p.dim());
  for (const auto& w : element.words()) {
    for (auto l : w.letters) {
      if (l >= p.size()) throw std::out_of_range("realize: unknown generator index " + std::to_string(l));
    }
    DiffOperator d = DiffOperator::multiplication(Polynomial::constant(p.dim(), 1));
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) d = field_compose(p.generator(*it), d);
    DiffOperator scaled(p.dim());
    for (const auto& [alpha, f] : d.terms()) scaled.add_term(alpha, w.coefficient * f);
    out = out + scaled;
  }
  return out;
}

std::string to_string(const DiffOperator& d, const std::vector<std::string>& vars) {
  if (d.is_zero()) return "0";
  std::string s;
  for (auto it = d.terms().rbegin(); it != d.terms().rend(); ++it) {
    const auto& [alpha, f] = *it;
    std::string deriv;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      for (unsigned k = 0; k < alpha[i]; ++k) deriv += (deriv.empty() ? "" : ".") + std::string("d/d") + vars[i];
    }
    std::string coeff = to_string(f, vars);
    if (f.term_count() > 1) coeff = "(" + coeff + ")";
    std::string term = deriv.empty() ? coeff : coeff + "*" + deriv;
    if (!s.empty()) s += " + ";
    s += term;
  }
  return s;
}

Polynomial symbol_top(const UEAElement& element, std::size_t k, std::size_t generators) {
  const std::size_t n = element.nvars();
  Polynomial out(n + generators);
  for (const auto& w : element.words()) {
    if (w.letters.size() != k) continue;
    Exponent e(n + generators, 0);
    for (auto l : w.letters) ++e[n + l];
    out += w.coefficient.embed(n + generators, 0) * Polynomial::monomial(e, 1);
  }
  return out;
}

Polynomial classical_principal_symbol(const DiffOperator& d, std::size_t k) {
  const std::size_t n = d.nvars();
  Polynomial out(2 * n);
  for (const auto& [alpha, f] : d.terms()) {
    if (total_degree(alpha) != k) continue;
    Exponent e(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[n + i] = alpha[i];
    out += f.embed(2 * n, 0) * Polynomial::monomial(e, 1);
  }
  return out;
}

bool PullbackReport::ok() const {
  return std::all_of(trials.begin(), trials.end(), [](const PullbackTrial& t) { return t.classical == t.pulled; });
}

PullbackReport pullback_consistency(const UEAElement& element, const FoliationPresentation& p,
                                    const std::vector<std::pair<RationalVector, RationalVector>>& samples) {
  PullbackReport r;
  r.degree = element.degree();
  const Polynomial classical = classical_principal_symbol(realize(element, p), r.degree);
  const Polynomial top = symbol_top(element, r.degree, p.size());
  for (const auto& [m, eta] : samples) {
    PullbackTrial t{m, eta, 0, 0};
    RationalVector xe = m;
    xe.insert(xe.end(), eta.begin(), eta.end());
    t.classical = classical.evaluate(xe);
    RationalVector xx = m;
    const RationalVector xi = pullback_covector(p, m, eta);
    xx.insert(xx.end(), xi.begin(), xi.end());
    t.pulled = top.evaluate(xx);
    r.trials.push_back(std::move(t));
  }
  return r;
}

PullbackReport pullback_consistency(const UEAElement& element, const FoliationPresentation& p, Rng& rng,
                                    std::size_t trials) {
  const RegularData reg = regular_data(p);
  std::vector<std::pair<RationalVector, RationalVector>> samples;
  while (samples.size() < trials) {
    RationalVector m = rng.rational_vector(p.dim(), 5, 3);
    if (!reg.is_regular(m)) continue;
    samples.emplace_back(std::move(m), rng.rational_vector(p.dim(), 7, 4));
  }
  return pullback_consistency(element, p, samples);
}

Polynomial symbol_on_fiber(const Polynomial& sigma, std::span<const Rational> m, const Subspace& space) {
  const std::size_t n = m.size();
  const std::size_t big_n = space.ambient_dim();
  if (sigma.nvars() != n + big_n) throw std::invalid_argument("symbol_on_fiber: dimension mismatch");
  const std::size_t r = space.dim();
  std::vector<Polynomial> values;
  for (std::size_t i = 0; i < n; ++i) values.push_back(Polynomial::constant(r, m[i]));
  for (std::size_t b = 0; b < big_n; ++b) {
    Polynomial xi(r);
    for (std::size_t a = 0; a < r; ++a) {
      if (!is_zero(space.basis()(a, b))) xi += Polynomial::variable(r, a) * space.basis()(a, b);
    }
    values.push_back(std::move(xi));
  }
  return sigma.substitute(values);
}

UEAElement random_uea_element(const FoliationPresentation& p, Rng& rng, std::size_t max_degree, std::size_t terms) {
  const std::size_t n = p.dim();
  std::vector<OperatorWord> words;
  for (std::size_t t = 0; t < terms; ++t) {
    const auto len = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(max_degree)));
    std::vector<std::size_t> letters;
    for (std::size_t i = 0; i < len; ++i) letters.push_back(static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(p.size()) - 1)));
    Polynomial c = Polynomial::constant(n, rng.rational(4, 3));
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.uniform_int(0, 2) == 0) c += Polynomial::variable(n, i) * Rational(rng.uniform_int(-3, 3));
    }
    words.push_back({c, letters});
  }
  // Guarantee the requested top degree appears.
  std::vector<std::size_t> top;
  for (std::size_t i = 0; i < max_degree; ++i) top.push_back(static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(p.size()) - 1)));
  words.push_back({Polynomial::constant(n, 1), top});
  return UEAElement(n, std::move(words));
}

QuadraticMinimum quadratic_fiber_minimum(const Polynomial& restricted, const RationalMatrix& basis, double tolerance) {
  const std::size_t r = basis.rows();
  const std::size_t nn = basis.cols();
  if (restricted.nvars() != r) throw std::invalid_argument("quadratic_fiber_minimum: ring mismatch");
  UniPolyMatrix pencil(r, r);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      Rational g = 0;
      for (std::size_t j = 0; j < nn; ++j) g += basis(a, j) * basis(b, j);
      pencil(a, b) = UniPoly(std::vector<Rational>{symmetric_entry(restricted, a, b, r), -g});
    }
  }
  const UniPoly chi = determinant(pencil);
  QuadraticMinimum q;
  if (chi.is_zero()) throw std::domain_error("quadratic_fiber_minimum: degenerate fiber basis");
  const Rational bound = root_bound(chi);
  const Rational tol(tolerance);
  std::vector<RootInterval> intervals;
  isolate(chi, -bound, bound, intervals, 0);
  q.roots_at_or_below = count_real_roots(chi, -bound, tol);
  q.roots_near_zero = count_real_roots(chi, -tol, tol) + (is_zero(chi.evaluate(-tol)) ? 1 : 0);
  bool first = true;
  for (const auto& iv : intervals) {
    auto [value, exact] = refine_root(chi, iv);
    if (first) {
      q.minimum = value;
      q.exact_minimum = exact;
      q.min_abs = std::abs(value);
      q.exact_min_abs = exact ? std::optional<Rational>(abs(*exact)) : std::nullopt;
      first = false;
    } else if (std::abs(value) < q.min_abs) {
      q.min_abs = std::abs(value);
      q.exact_min_abs = exact ? std::optional<Rational>(abs(*exact)) : std::nullopt;
    }
  }
  return q;
}

bool PointVerdict::elliptic() const {
  return std::all_of(fibers.begin(), fibers.end(), [](const FiberVerdict& f) { return f.elliptic; });
}

bool EllipticityReport::elliptic() const {
  return std::all_of(points.begin(), points.end(), [](const PointVerdict& p) { return p.elliptic(); });
}

EllipticityReport ellipticity_check(const UEAElement& element, const FoliationPresentation& p,
                                    const std::vector<RationalVector>& points, const EllipticityConfig& config) {
  if (!(config.tolerance > 0)) throw std::invalid_argument("ellipticity_check: tolerance must be positive");
  EllipticityReport report;
  report.degree = element.degree();
  report.convention = config.convention;
  const bool absolute = config.convention == PositivityConvention::NonVanishing;
  if (report.degree % 2 == 1 && !absolute) throw OddDegreeWarning(report.degree);
  const Polynomial sigma = symbol_top(element, report.degree, p.size());
  const RegularData reg = regular_data(p);
  Rng rng(config.curves.seed + 0x51ed2701ULL);
  for (const auto& m : points) {
    PointVerdict pv;
    pv.point = m;
    pv.regular = reg.is_regular(m);
    const HNFiberSample hn = hn_fiber(sample_nash_fiber(p, reg, m, config.curves));
    for (const auto& space : hn.covector_spaces) {
      FiberVerdict f;
      f.space = space;
      f.restricted = symbol_on_fiber(sigma, m, space);
      if (space.dim() == 0) {
        f.elliptic = true;
        f.method = "empty";
        f.minimum = INFINITY;
      } else if (f.restricted.is_zero()) {
        f.identically_zero = true;
        f.minimum = 0.0;
        f.exact_minimum = Rational(0);
        f.method = "identically-zero";
      } else if (report.degree == 0) {
        const Rational c = f.restricted.constant_term();
        f.exact_minimum = absolute ? abs(c) : c;
        f.minimum = f.exact_minimum->get_d();
        f.method = "constant";
      } else if (report.degree == 2) {
        const QuadraticMinimum q = quadratic_fiber_minimum(f.restricted, space.basis(), config.tolerance);
        f.method = "quadratic-exact";
        if (absolute) {
          f.minimum = q.min_abs;
          f.exact_minimum = q.exact_min_abs;
          f.elliptic = q.roots_near_zero == 0;
        } else {
          f.minimum = q.minimum;
          f.exact_minimum = q.exact_minimum;
          f.elliptic = q.roots_at_or_below == 0;
        }
        pv.fibers.push_back(std::move(f));
        continue;
      } else {
        const Polynomial sigma_m = sigma.partial_evaluate(0, m);
        // Drop the base variables so the compiled map acts on xi alone.
        Polynomial in_xi(p.size());
        for (const auto& [e, c] : sigma_m.terms()) {
          in_xi.add_term(Exponent(e.begin() + static_cast<std::ptrdiff_t>(m.size()), e.end()), c);
        }
        f.minimum = sampled_minimum(in_xi, orthonormal_rows_basis(space.basis()), absolute, config.sphere_samples, rng);
        f.method = "sampled";
      }
      f.elliptic = f.minimum > config.tolerance;
      pv.fibers.push_back(std::move(f));
    }
    report.points.push_back(std::move(pv));
  }
  return report;
}

}  // namespace hnc
