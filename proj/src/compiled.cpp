#include "hnc/compiled.hpp"

#include <stdexcept>

namespace hnc {

CompiledPolynomial::CompiledPolynomial(const Polynomial& p) {
  for (const auto& [e, c] : p.terms()) {
    Term t{c.get_d(), {}};
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t.factors.emplace_back(static_cast<std::uint32_t>(i), e[i]);
    }
    terms_.push_back(std::move(t));
  }
}

double CompiledPolynomial::operator()(std::span<const double> x) const {
  double s = 0.0;
  for (const auto& t : terms_) {
    double v = t.coefficient;
    for (const auto& [i, k] : t.factors) {
      const double xi = x[i];
      for (std::uint32_t j = 0; j < k; ++j) v *= xi;
    }
    s += v;
  }
  return s;
}

CompiledMap::CompiledMap(const std::vector<Polynomial>& components) {
  for (const auto& c : components) parts_.emplace_back(c);
}

void CompiledMap::operator()(std::span<const double> x, std::span<double> out) const {
  if (out.size() != parts_.size()) throw std::invalid_argument("CompiledMap: output size mismatch");
  for (std::size_t i = 0; i < parts_.size(); ++i) out[i] = parts_[i](x);
}

std::vector<double> CompiledMap::operator()(std::span<const double> x) const {
  std::vector<double> out(parts_.size());
  (*this)(x, out);
  return out;
}

}  // namespace hnc
