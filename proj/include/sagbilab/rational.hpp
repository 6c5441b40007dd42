#pragma once

#include <gmpxx.h>

#include <string>

namespace sagbilab {

// Exact rational scalar. gmp keeps denominator > 0 and gcd-reduced once
// canonicalized; every constructor below canonicalizes.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat(const std::string& text) {
  Rational q(text);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace sagbilab
