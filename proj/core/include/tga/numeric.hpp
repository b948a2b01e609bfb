#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <vector>

namespace tga {

using Int = mpz_class;
using Rat = mpq_class;

inline long lcm_long(long a, long b) { return std::lcm(a, b); }
inline long gcd_long(long a, long b) { return std::gcd(a, b); }

// a mod m in [0, m)
inline long mod_long(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline bool is_prime_long(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// largest e with p^e | n, plus p^e itself
inline long p_part(long n, long p) {
  long pe = 1;
  while (n % p == 0) {
    n /= p;
    pe *= p;
  }
  return pe;
}

inline long ipow(long base, long exp) {
  long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace tga
