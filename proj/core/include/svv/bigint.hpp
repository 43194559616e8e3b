#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <stdexcept>

namespace svv {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

/// Multinomial coefficient n! / (p_1! ... p_k!). Zero when any part is
/// negative or the parts do not sum to n.
inline BigInt multinomial(int n, std::span<const int> parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) return 0;
    sum += p;
  }
  if (sum != n) return 0;
  BigInt r = factorial(n);
  for (int p : parts) r /= factorial(p);
  return r;
}

inline BigInt ipow(BigInt base, int exp) {
  BigInt r = 1;
  while (exp > 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

}  // namespace svv
