#ifndef RMRW_BIGINT_HPP
#define RMRW_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace rmrw {

// Counts of multiset permutations, ball sizes and enumerative-code indices
// overflow 64 bits already at moderate block lengths, so every count and
// index in this library is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k), exact.
inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is a running binomial coefficient
  }
  return r;
}

/// log2 of a positive big integer, as a double.
inline double log2_big(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log2_big: value must be positive");
  const long bits = static_cast<long>(boost::multiprecision::msb(v));
  if (bits <= 510) return std::log2(v.convert_to<double>());
  // Scale down so the mantissa fits a double.
  const long shift = bits - 510;
  const BigInt top = v >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

inline BigInt big_pow(BigInt base, long exp) {
  BigInt r = 1;
  while (exp > 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

}  // namespace rmrw

#endif
