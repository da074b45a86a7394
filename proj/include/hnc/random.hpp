#pragma once

// Seeded randomness that produces the same stream on every platform: the
// standard distributions are implementation-defined, so the mappings from
// raw 64-bit draws are done by hand.

#include <cstdint>
#include <random>
#include <vector>

#include "hnc/rational.hpp"

namespace hnc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long uniform_int(long lo, long hi);
  /// Uniform double in [0, 1).
  double uniform();
  double normal();
  /// p/q with p in [-num, num] and q in [1, den].
  Rational rational(long num, long den);
  RationalVector rational_vector(std::size_t n, long num, long den);
  /// Nonzero vector with integer entries in [-bound, bound].
  RationalVector nonzero_integer_vector(std::size_t n, long bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace hnc
