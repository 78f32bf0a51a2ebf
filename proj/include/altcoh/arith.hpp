#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "altcoh/error.hpp"

namespace altcoh {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

inline void require_odd_prime(std::uint64_t p) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("p = " + std::to_string(p) + " is not an odd prime");
}

// Checked integer power; throws ResourceLimit on 64-bit overflow.
inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw ResourceLimit("integer power overflows 64 bits");
    r *= base;
  }
  return r;
}

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) {
    if (r > UINT64_MAX / i) throw ResourceLimit("factorial overflows 64 bits");
    r *= i;
  }
  return r;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Exponent of p in n! (Legendre).
inline unsigned legendre(std::uint64_t n, std::uint64_t p) {
  unsigned e = 0;
  for (std::uint64_t q = p; q <= n; q *= p) {
    e += static_cast<unsigned>(n / q);
    if (q > n / p) break;
  }
  return e;
}

inline bool is_power_of(std::uint64_t n, std::uint64_t base) {
  if (n == 0) return false;
  while (n % base == 0) n /= base;
  return n == 1;
}

// True when n is p^e with p prime and e >= 1.
inline bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  return is_power_of(n, p);
}

// Base-p digits of n, least significant first.
inline std::vector<unsigned> base_digits(std::uint64_t n, std::uint64_t p) {
  std::vector<unsigned> d;
  while (n > 0) {
    d.push_back(static_cast<unsigned>(n % p));
    n /= p;
  }
  return d;
}

}  // namespace altcoh
