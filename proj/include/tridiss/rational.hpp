#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tridiss {

// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

// Serializes as "p/q"; integers carry an explicit "/1".
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace tridiss
