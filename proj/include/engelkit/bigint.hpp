#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace engelkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Binomial coefficient with C(n,k) = 0 for k < 0 or k > n.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace engelkit
