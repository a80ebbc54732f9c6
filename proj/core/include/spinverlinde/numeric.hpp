#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace spinverlinde {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Returns 2^n as a BigInt.
inline BigInt pow2(unsigned n) {
  BigInt r = 1;
  return r << n;
}

inline BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace spinverlinde
