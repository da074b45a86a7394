#include "hnc/random.hpp"

#include <cmath>
#include <numbers>

namespace hnc {

long Rng::uniform_int(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Rational Rng::rational(long num, long den) {
  Rational q(uniform_int(-num, num), uniform_int(1, den));
  q.canonicalize();
  return q;
}

RationalVector Rng::rational_vector(std::size_t n, long num, long den) {
  RationalVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rational(num, den));
  return v;
}

RationalVector Rng::nonzero_integer_vector(std::size_t n, long bound) {
  while (true) {
    RationalVector v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(uniform_int(-bound, bound));
    if (!is_zero_vector(v)) return v;
  }
}

}  // namespace hnc
