#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fdconvex {

/// Exact rational with arbitrary-precision numerator and denominator.
/// GMP keeps every value in lowest terms with a positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

/// "p/q" form, always with an explicit denominator ("3/1", "-1/24").
std::string to_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// p/q in lowest terms. q must be nonzero.
inline Rational frac(long p, long q)
{
  Rational r{BigInt(p), BigInt(q)};
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace fdconvex
