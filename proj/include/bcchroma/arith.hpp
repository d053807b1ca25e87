#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <stdexcept>

namespace bcchroma {

// All counts and matrix entries in this library are exact. Intermediate
// values (permanents of path matrices, inverse Kostka entries, trace
// evaluations) can overflow 64 bits already for modest ranks, so the
// arbitrary-precision types are used throughout instead of guessing bounds.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
  assert(n >= 0);
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Int int_pow(Int base, int exp) {
  assert(exp >= 0);
  Int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline Int two_pow(int exp) { return int_pow(2, exp); }

// Narrowing helper for places that index with machine ints.
inline long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error("value does not fit in long long");
  return static_cast<long long>(v);
}

}  // namespace bcchroma
