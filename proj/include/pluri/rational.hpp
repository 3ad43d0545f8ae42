#pragma once

#include <gmpxx.h>

#include <string>

namespace pluri {

/// Exact rational coefficient. GMP keeps results in lowest terms with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace pluri
