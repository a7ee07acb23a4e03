#pragma once

#include <cstdint>
#include <vector>

#include "rlab/errors.hpp"

namespace rlab {

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

/// Distinct prime factors of n, ascending. distinct_prime_factors(1) == {}.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

/// base^exp mod m for m >= 1 (128-bit intermediate products).
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Overflow("integer overflow in checked add");
  return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow("integer overflow in checked sub");
  return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow("integer overflow in checked mul");
  return out;
}

/// Narrows a 128-bit accumulator back to int64, throwing instead of truncating.
inline std::int64_t narrow(__int128 v) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
    throw Overflow("exact sum leaves the 64-bit range");
  return static_cast<std::int64_t>(v);
}

}  // namespace checked
}  // namespace rlab
