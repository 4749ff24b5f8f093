#pragma once

#include <gmpxx.h>

#include <string>

namespace atk {

/// Arbitrary-precision integer used for every exact computation.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

/// Quotient rounded toward zero, so |a - q*b| < |b|.
inline Integer truncated_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Integer& d, const Integer& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline std::string to_string(const Integer& a) { return a.get_str(); }

}  // namespace atk
