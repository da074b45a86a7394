#pragma once

// Exact rationals backed by GMP, plus the handful of helpers every other
// module needs (parsing, printing, vector utilities).

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hnc {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" with decimal integers. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// "a,b,c" with rational entries.
RationalVector parse_point(std::string_view text);
std::string point_to_string(std::span<const Rational> point);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

bool is_zero_vector(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Scales v in place to a primitive integer vector whose first nonzero entry
/// is positive. The zero vector is left untouched.
void make_primitive(RationalVector& v);

std::vector<double> to_double(std::span<const Rational> v);

}  // namespace hnc
