#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rlab/decomposition.hpp"

namespace rlab {

/// tau(n, y, z): divisors d of n with y < d <= z. Strict lower bound,
/// inclusive upper bound, exactly in that asymmetric form.
std::uint32_t tau_interval(std::uint64_t n, double y, double z);

/// Bit n set iff some integer d in (y, z] divides n, for n in [1, x].
/// This is the multiples sieve behind count_h, exposed so tests can compare
/// it wholesale against the per-n tau oracle.
std::vector<std::uint64_t> divisor_marks(std::uint64_t x, double y, double z);

/// H(x, y, z) = #{n <= x : tau(n, y, z) >= 1}; sieve-based; x <= 10^8.
std::uint64_t count_h(std::uint64_t x, double y, double z);

/// Same count restricted to shifted primes n = q + lambda; |lambda| <= 10.
std::uint64_t count_h_shifted(std::uint64_t x, double y, double z, std::int32_t lambda);

/// pi(x) by segmented sieve; x <= 10^9. Segments count in parallel.
std::uint64_t prime_pi(std::uint64_t x, unsigned jobs = 1);

/// Plain sieve of Eratosthenes up to n inclusive.
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

struct CensusRow {
  std::uint64_t x = 0;
  std::uint64_t count = 0;
  std::uint64_t denominator = 0;
  double ratio = 0.0;  // NaN when the denominator is 0 ("undefined" in output)
};

struct CandidateOptions {
  bool nontrivial_divisors = false;        // exclude d in {1, n} from the filter
  std::optional<std::uint64_t> rescaled_x;  // use the interval (sqrt(X)/(100k), sqrt(X)] instead
};

/// Fraction of primes p <= x with p = 1 (mod k) for which (p-1)/k has a
/// divisor in the closed interval [sqrt(p)/(6k), sqrt(p)]. Only such primes
/// can carry a 2-part decomposition of D_k. Interval endpoints are compared
/// exactly through integer squares. x <= 10^8.
CensusRow candidate_ratio(std::uint32_t k, std::uint64_t x, const CandidateOptions& opt = {});

struct BadPrime {
  std::uint32_t p = 0;
  Decomposition witness;
};

struct BadPrimeCensus {
  std::uint32_t k = 0;
  std::uint32_t p_max = 0;
  std::uint32_t scanned = 0;  // primes p = 1 (mod k) with 1 < k < p-1 that were searched
  std::vector<BadPrime> bad;
};

/// Runs the decomposition search over every admissible prime up to p_max and
/// reports the primes whose D_k decomposes, with one witness orbit each.
/// p_max <= 4096 (the search ceiling).
BadPrimeCensus bad_prime_census(std::uint32_t k, std::uint32_t p_max,
                                SearchMode mode = SearchMode::perfect, unsigned jobs = 1);

struct FordConstants {
  double delta = 0.0;  // 1 - (1 + ln ln 2)/ln 2
  double u = 0.0;      // ln(100 k)/ln(y)
};

/// Throws DomainError for y <= 1.
FordConstants ford_constants(std::uint32_t k, double y);

}  // namespace rlab
