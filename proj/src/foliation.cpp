#include "hnc/foliation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "hnc/errors.hpp"
#include "hnc/expr.hpp"

namespace hnc {

namespace {

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
  return e;
}

/// Assigns dense row numbers to (component, monomial) pairs on first use.
class RowIndex {
 public:
  std::size_t operator()(std::size_t component, const Exponent& e) {
    auto [it, inserted] = rows_.try_emplace(std::make_pair(component, e), rows_.size());
    return it->second;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::map<std::pair<std::size_t, Exponent>, std::size_t> rows_;
};

/// One unknown: the coefficient of x^alpha in the polynomial multiplying generator j.
struct Slot {
  std::size_t generator;
  Exponent alpha;
};

/// Sparse column contributions of sum_slots u_s x^alpha_s X_{j_s}.
std::vector<std::vector<std::pair<std::size_t, Rational>>> slot_columns(const FoliationPresentation& p,
                                                                       const std::vector<Slot>& slots,
                                                                       RowIndex& rows) {
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const auto& x = p.generator(slots[s].generator);
    for (std::size_t i = 0; i < p.dim(); ++i) {
      for (const auto& [beta, c] : x[i].terms()) cols[s].emplace_back(rows(i, add_exponents(slots[s].alpha, beta)), c);
    }
  }
  return cols;
}

RationalMatrix assemble(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& cols, std::size_t nrows,
                        std::size_t extra_cols = 0) {
  RationalMatrix m(nrows, cols.size() + extra_cols);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [r, c] : cols[j]) m(r, j) += c;
  }
  return m;
}

/// Kernel vectors straight from the reduced form (no re-canonicalisation).
std::vector<RationalVector> raw_kernel(const RationalMatrix& m) {
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Polynomial>> solve_syzygy_block(const FoliationPresentation& p, const std::vector<Slot>& slots) {
  if (slots.empty()) return {};
  RowIndex rows;
  auto cols = slot_columns(p, slots, rows);
  std::vector<std::vector<Polynomial>> out;
  for (const auto& v : raw_kernel(assemble(cols, rows.size()))) {
    std::vector<Polynomial> f(p.size(), Polynomial(p.dim()));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (!is_zero(v[s])) f[slots[s].generator].add_term(slots[s].alpha, v[s]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::string describe_pair(const FoliationPresentation& p, std::size_t i, std::size_t j) {
  return "[" + p.generator_names()[i] + "," + p.generator_names()[j] + "]";
}

}  // namespace

StructureFunctions::StructureFunctions(std::size_t generators, std::size_t nvars)
    : n_(generators), nvars_(nvars), data_(generators * generators * generators, Polynomial(nvars)) {}

void StructureFunctions::set_pair(std::size_t i, std::size_t j, const std::vector<Polynomial>& coefficients) {
  if (coefficients.size() != n_) throw std::invalid_argument("StructureFunctions::set_pair: wrong length");
  for (std::size_t k = 0; k < n_; ++k) {
    (*this)(i, j, k) = coefficients[k];
    (*this)(j, i, k) = -coefficients[k];
  }
}

int StructureFunctions::max_degree() const {
  int d = -1;
  for (const auto& c : data_) d = std::max(d, c.total_degree());
  return d;
}

FoliationPresentation::FoliationPresentation(std::string name, std::vector<std::string> vars,
                                             std::vector<PolyVectorField> generators,
                                             std::vector<std::string> generator_names)
    : name_(std::move(name)),
      vars_(std::move(vars)),
      generator_names_(std::move(generator_names)),
      generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.nvars() != vars_.size()) throw std::invalid_argument("generator has the wrong number of components");
  }
  if (generator_names_.empty()) generator_names_ = numbered_names("g", generators_.size());
  if (generator_names_.size() != generators_.size()) throw std::invalid_argument("generator name count mismatch");
}

int FoliationPresentation::max_generator_degree() const {
  int d = 0;
  for (const auto& g : generators_) d = std::max(d, g.degree());
  return d;
}

const StructureFunctions& FoliationPresentation::structure_functions() const {
  if (!structure_) throw MissingStructureFunctions(name_);
  return *structure_;
}

void FoliationPresentation::set_structure_functions(StructureFunctions c) {
  check_structure_functions(*this, c);
  structure_ = std::move(c);
}

void check_structure_functions(const FoliationPresentation& p, const StructureFunctions& c) {
  const std::size_t n = p.size();
  if (c.size() != n || c.nvars() != p.dim()) throw InvariantViolation("structure functions have the wrong shape");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (c(i, j, k) != -c(j, i, k)) {
          throw InvariantViolation("structure functions not antisymmetric at " + describe_pair(p, i, j));
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      PolyVectorField combo(p.dim());
      for (std::size_t k = 0; k < n; ++k) {
        if (!c(i, j, k).is_zero()) combo += c(i, j, k) * p.generator(k);
      }
      const PolyVectorField bracket = lie_bracket(p.generator(i), p.generator(j));
      if (combo != bracket) {
        throw InvariantViolation("membership identity fails for " + describe_pair(p, i, j) + ": bracket is " +
                                 to_string(bracket, p.vars()) + " but the structure functions give " +
                                 to_string(combo, p.vars()));
      }
    }
  }
}

PolyMatrix anchor_matrix(const FoliationPresentation& p) {
  PolyMatrix m(p.dim(), p.size(), Polynomial(p.dim()));
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i = 0; i < p.dim(); ++i) m(i, j) = p.generator(j)[i];
  }
  return m;
}

RationalMatrix anchor_at(const FoliationPresentation& p, std::span<const Rational> m) {
  if (m.size() != p.dim()) throw std::invalid_argument("point has the wrong dimension");
  return evaluate(anchor_matrix(p), m);
}

bool RegularData::is_regular(std::span<const Rational> m) const { return hnc::rank(evaluate(anchor, m)) == rank; }

RegularData regular_data(const FoliationPresentation& p) {
  RegularData d;
  d.anchor = anchor_matrix(p);
  d.rank = generic_rank(d.anchor);
  return d;
}

std::size_t leaf_dimension_at(const FoliationPresentation& p, std::span<const Rational> m) {
  return rank(anchor_at(p, m));
}

Subspace kernel_at(const FoliationPresentation& p, std::span<const Rational> m) {
  auto k = kernel_basis(anchor_at(p, m));
  if (k.rows() == 0) return zero_subspace(p.size());
  return make_subspace(k);
}

Subspace dual_image_at(const FoliationPresentation& p, std::span<const Rational> m) {
  return annihilator(kernel_at(p, m));
}

RationalVector pullback_covector(const FoliationPresentation& p, std::span<const Rational> m,
                                 std::span<const Rational> eta) {
  if (eta.size() != p.dim()) throw std::invalid_argument("covector has the wrong dimension");
  const RationalMatrix a = anchor_at(p, m);
  RationalVector out(p.size());
  for (std::size_t b = 0; b < p.size(); ++b) {
    for (std::size_t i = 0; i < p.dim(); ++i) out[b] += eta[i] * a(i, b);
  }
  return out;
}

unsigned default_degree_bound(const FoliationPresentation& p) {
  return static_cast<unsigned>(p.max_generator_degree()) + static_cast<unsigned>(p.dim());
}

std::vector<std::vector<Polynomial>> syzygies(const FoliationPresentation& p, unsigned degree_bound) {
  const std::size_t n = p.dim();
  std::vector<std::optional<unsigned>> degrees;
  bool graded = true;
  for (const auto& g : p.generators()) {
    degrees.push_back(g.homogeneous_degree());
    graded = graded && degrees.back().has_value();
  }
  std::vector<std::vector<Polynomial>> out;
  if (!graded) {
    std::vector<Slot> slots;
    for (std::size_t j = 0; j < p.size(); ++j) {
      for (auto& a : monomials_up_to(n, degree_bound)) slots.push_back({j, a});
    }
    return solve_syzygy_block(p, slots);
  }
  // Homogeneous generators: the syzygy module is graded, and the block of
  // total degree k only involves f_j of degree k - deg X_j.
  unsigned lo = ~0u;
  unsigned hi = 0;
  for (const auto& d : degrees) {
    lo = std::min(lo, *d);
    hi = std::max(hi, *d + degree_bound);
  }
  for (unsigned k = lo; k <= hi; ++k) {
    std::vector<Slot> slots;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (k < *degrees[j] || k - *degrees[j] > degree_bound) continue;
      for (auto& a : monomials_of_degree(n, k - *degrees[j])) slots.push_back({j, a});
    }
    for (auto& f : solve_syzygy_block(p, slots)) out.push_back(std::move(f));
  }
  return out;
}

Subspace strong_kernel_at(const std::vector<std::vector<Polynomial>>& syzygy_basis, std::size_t generators,
                          std::span<const Rational> m) {
  std::vector<RationalVector> values;
  for (const auto& f : syzygy_basis) {
    RationalVector v(generators);
    for (std::size_t j = 0; j < generators; ++j) v[j] = f[j].evaluate(m);
    if (!is_zero_vector(v)) values.push_back(std::move(v));
  }
  return make_subspace(values, generators);
}

Subspace strong_kernel_at(const FoliationPresentation& p, std::span<const Rational> m, unsigned degree_bound) {
  if (m.size() != p.dim()) throw std::invalid_argument("point has the wrong dimension");
  return strong_kernel_at(syzygies(p, degree_bound), p.size(), m);
}

std::optional<StructureFunctions> solve_structure_functions(const FoliationPresentation& p, unsigned degree_bound) {
  const std::size_t n = p.dim();
  const std::size_t big_n = p.size();
  StructureFunctions c(big_n, n);
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  std::vector<PolyVectorField> brackets;
  for (std::size_t i = 0; i < big_n; ++i) {
    for (std::size_t j = i + 1; j < big_n; ++j) {
      auto b = lie_bracket(p.generator(i), p.generator(j));
      if (b.is_zero()) continue;
      pending.emplace_back(i, j);
      brackets.push_back(std::move(b));
    }
  }
  for (unsigned d = 0; d <= degree_bound && !pending.empty(); ++d) {
    std::vector<Slot> slots;
    for (std::size_t k = 0; k < big_n; ++k) {
      for (auto& a : monomials_up_to(n, d)) slots.push_back({k, a});
    }
    RowIndex rows;
    auto cols = slot_columns(p, slots, rows);
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rhs(pending.size());
    for (std::size_t q = 0; q < pending.size(); ++q) {
      for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [e, v] : brackets[q][i].terms()) rhs[q].emplace_back(rows(i, e), v);
      }
    }
    RationalMatrix a = assemble(cols, rows.size(), pending.size());
    for (std::size_t q = 0; q < pending.size(); ++q) {
      for (const auto& [r, v] : rhs[q]) a(r, slots.size() + q) += v;
    }
    auto [red, pivots] = rref(std::move(a), slots.size());
    std::vector<std::pair<std::size_t, std::size_t>> still;
    std::vector<PolyVectorField> still_brackets;
    for (std::size_t q = 0; q < pending.size(); ++q) {
      const std::size_t col = slots.size() + q;
      bool consistent = true;
      for (std::size_t r = pivots.size(); r < red.rows(); ++r) {
        if (!is_zero(red(r, col))) {
          consistent = false;
          break;
        }
      }
      if (!consistent) {
        still.push_back(pending[q]);
        still_brackets.push_back(std::move(brackets[q]));
        continue;
      }
      std::vector<Polynomial> coeffs(big_n, Polynomial(n));
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (!is_zero(red(r, col))) coeffs[slots[pivots[r]].generator].add_term(slots[pivots[r]].alpha, red(r, col));
      }
      c.set_pair(pending[q].first, pending[q].second, coeffs);
    }
    pending = std::move(still);
    brackets = std::move(still_brackets);
  }
  if (!pending.empty()) return std::nullopt;
  check_structure_functions(p, c);
  return c;
}

RationalVector IsotropyAlgebra::lift_bracket(std::span<const Rational> u, std::span<const Rational> v) const {
  const std::size_t n = constants.size();
  if (u.size() != n || v.size() != n) throw std::invalid_argument("lift_bracket: wrong length");
  RationalVector w(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(v[j])) continue;
      const Rational f = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(constants[i][j][k])) w[k] += f * constants[i][j][k];
      }
    }
  }
  return w;
}

RationalVector IsotropyAlgebra::quotient_coordinates(std::span<const Rational> w) const {
  if (!ambient.contains(w)) throw std::invalid_argument("quotient_coordinates: vector is not in ker rho_m");
  auto x = solve_linear(decomposition_.transpose(), w);
  if (!x) throw InvariantViolation("quotient_coordinates: representatives do not span ker rho_m");
  return RationalVector(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(dim()));
}

RationalVector IsotropyAlgebra::bracket(std::span<const Rational> a, std::span<const Rational> b) const {
  RationalVector out(dim());
  for (std::size_t s = 0; s < dim(); ++s) {
    if (is_zero(a[s])) continue;
    for (std::size_t t = 0; t < dim(); ++t) {
      if (is_zero(b[t])) continue;
      for (std::size_t k = 0; k < dim(); ++k) out[k] += a[s] * b[t] * bracket_table[s][t][k];
    }
  }
  return out;
}

IsotropyAlgebra isotropy_algebra(const FoliationPresentation& p, std::span<const Rational> m, unsigned degree_bound) {
  const StructureFunctions& c = p.structure_functions();
  IsotropyAlgebra g;
  g.point.assign(m.begin(), m.end());
  g.degree_bound = degree_bound;
  g.ambient = kernel_at(p, m);
  g.sker = strong_kernel_at(p, m, degree_bound);
  if (!g.ambient.contains(g.sker)) throw InvariantViolation("strong kernel not contained in the kernel");

  const std::size_t n = p.size();
  g.constants.assign(n, std::vector<RationalVector>(n, RationalVector(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) g.constants[i][j][k] = c(i, j, k).evaluate(m);
    }
  }

  Subspace span = g.sker;
  for (const auto& v : g.ambient.basis_vectors()) {
    if (span.contains(v)) continue;
    g.quotient_basis.push_back(v);
    span = sum(span, make_subspace({v}, n));
  }
  auto rows = g.quotient_basis;
  for (auto& s : g.sker.basis_vectors()) rows.push_back(std::move(s));
  g.decomposition_ = RationalMatrix::from_rows(rows, n);

  const std::size_t q = g.dim();
  g.bracket_table.assign(q, std::vector<RationalVector>(q, RationalVector(q)));
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      g.bracket_table[a][b] = g.quotient_coordinates(g.lift_bracket(g.quotient_basis[a], g.quotient_basis[b]));
    }
  }
  return g;
}

std::vector<JacobiDefect> jacobi_defects(const FoliationPresentation& p) {
  const StructureFunctions& c = p.structure_functions();
  const std::size_t n = p.size();
  const std::size_t nv = p.dim();
  // [[e_a, e_b], e_c] = sum_k c_ab^k [e_k, e_c] - X_c[c_ab^k] e_k
  auto nested = [&](std::size_t a, std::size_t b, std::size_t cc) {
    std::vector<Polynomial> v(n, Polynomial(nv));
    for (std::size_t k = 0; k < n; ++k) {
      const Polynomial& f = c(a, b, k);
      if (f.is_zero()) continue;
      for (std::size_t q = 0; q < n; ++q) {
        if (!c(k, cc, q).is_zero()) v[q] += f * c(k, cc, q);
      }
      v[k] -= p.generator(cc).apply(f);
    }
    return v;
  };
  std::vector<JacobiDefect> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t l = j + 1; l < n; ++l) {
        JacobiDefect d{i, j, l, std::vector<Polynomial>(n, Polynomial(nv))};
        for (const auto& part : {nested(i, j, l), nested(j, l, i), nested(l, i, j)}) {
          for (std::size_t q = 0; q < n; ++q) d.value[q] += part[q];
        }
        out.push_back(std::move(d));
      }
    }
  }
  return out;
}

bool satisfies_jacobi(const FoliationPresentation& p) {
  for (const auto& d : jacobi_defects(p)) {
    for (const auto& v : d.value) {
      if (!v.is_zero()) return false;
    }
  }
  return true;
}

RationalMatrix Augmentation::projection_at(std::span<const Rational> m) const {
  const std::size_t n = combination.size();
  RationalMatrix psi(n, n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    psi(j, j) = 1;
    psi(j, n) = combination[j].evaluate(m);
  }
  return psi;
}

Augmentation augment(const FoliationPresentation& p, const std::vector<Polynomial>& combination,
                     const std::string& generator_name, unsigned structure_degree_bound) {
  if (combination.size() != p.size()) throw std::invalid_argument("augment: combination has the wrong length");
  PolyVectorField extra(p.dim());
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!combination[j].is_zero()) extra += combination[j] * p.generator(j);
  }
  auto gens = p.generators();
  gens.push_back(extra);
  auto names = p.generator_names();
  names.push_back(generator_name);
  FoliationPresentation q(p.name() + "+" + generator_name, p.vars(), std::move(gens), std::move(names));
  if (p.has_structure_functions()) {
    auto c = solve_structure_functions(q, structure_degree_bound);
    if (!c) throw MissingStructureFunctions(q.name());
    const auto& old = p.structure_functions();
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        std::vector<Polynomial> coeffs(q.size(), Polynomial(p.dim()));
        for (std::size_t k = 0; k < p.size(); ++k) coeffs[k] = old(i, j, k);
        c->set_pair(i, j, coeffs);
      }
    }
    q.set_structure_functions(std::move(*c));
  }
  return {std::move(q), combination};
}

}  // namespace hnc
