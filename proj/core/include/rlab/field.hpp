#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rlab/errors.hpp"

namespace rlab {

/// Prime field F_p with its least primitive root and a full discrete-log table.
/// Immutable after construction and safe to share across threads.
class PrimeField {
 public:
  /// Largest accepted modulus. The index table costs 4*p bytes, so large p is
  /// for callers that know what they are asking for.
  static constexpr std::uint32_t kMaxPrime = 0x7FFFFFFF;

  /// Builds the field: primality check, least primitive root, index table.
  /// Throws CompositeInput for non-primes and p < 3, Overflow above kMaxPrime.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t generator() const { return g_; }

  /// ind_g(x) in [0, p-2] with g^ind = x. Throws ZeroHasNoIndex for x = 0.
  std::uint32_t index_of(std::uint32_t x) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;  // a, b < p <= 2^31, no wrap
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t base, std::uint64_t e) const;
  /// Multiplicative inverse of x != 0, read off the index table.
  std::uint32_t inverse(std::uint32_t x) const;

  /// Distinct prime factors of p-1, ascending.
  const std::vector<std::uint32_t>& order_factors() const { return factors_; }

 private:
  std::uint32_t p_ = 0;
  std::uint32_t g_ = 0;
  std::vector<std::uint32_t> index_;
  std::vector<std::uint32_t> factors_;
};

PrimeField build_field(std::uint32_t p);
std::uint32_t index_of(const PrimeField& field, std::uint32_t x);

/// A multiplicative character chi = psi^exponent, where psi is the canonical
/// character of the given order: psi(x) = zeta_order^(ind_g(x) mod order).
/// chi(0) is the distinguished zero value, not a root of unity.
struct CharacterSpec {
  std::uint32_t order = 2;
  std::uint32_t exponent = 1;

  /// Throws BadOrder unless order >= 2 divides p-1 and exponent lies in [1, order-1].
  void validate(const PrimeField& field) const;

  /// ord(chi) = order / gcd(exponent, order); always >= 2 for valid specs.
  std::uint32_t effective_order() const;
};

/// The exponent r with chi(x) = zeta_order^r, or nullopt for chi(0).
std::optional<std::uint32_t> char_exponent(const PrimeField& field, const CharacterSpec& spec,
                                           std::uint32_t x);

/// Exact accumulator for sums of roots of unity: counts[r] copies of zeta_m^r.
/// All arithmetic on counters is integer arithmetic; nothing is rounded until
/// a magnitude is requested for comparison against a bound.
class CyclotomicCounter {
 public:
  explicit CyclotomicCounter(std::uint32_t order);

  std::uint32_t order() const { return order_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }

  void add(std::uint32_t exponent, std::int64_t weight = 1);
  CyclotomicCounter& operator+=(const CyclotomicCounter& other);
  CyclotomicCounter& operator-=(const CyclotomicCounter& other);

  bool all_counts_equal() const;

  /// |sum_r counts[r] * zeta_m^r| in double precision. The all-equal counter
  /// evaluates to exactly 0.0 (the full root-of-unity sum is removed before
  /// any floating-point work happens).
  double magnitude() const;

  /// Exact test of "this sum equals the rational integer n", decided by
  /// reducing the counter polynomial modulo the m-th cyclotomic polynomial.
  bool equals_integer(std::int64_t n) const;

 private:
  std::uint32_t order_;
  std::vector<std::int64_t> counts_;
};

double counter_magnitude(const CyclotomicCounter& counter);

/// Coefficients of the m-th cyclotomic polynomial, ascending degree.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t m);

}  // namespace rlab
