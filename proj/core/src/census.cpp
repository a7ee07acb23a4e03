#include "rlab/census.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "rlab/numeric.hpp"
#include "rlab/parallel.hpp"

namespace rlab {

namespace {

constexpr std::uint64_t kCountHCeiling = 100'000'000;
constexpr std::uint64_t kPiCeiling = 1'000'000'000;

// Integer divisor range for the half-open interval (y, z].
std::pair<std::uint64_t, std::uint64_t> divisor_range(double y, double z, std::uint64_t cap) {
  std::uint64_t lo = 1;
  if (y >= 1.0) lo = static_cast<std::uint64_t>(std::floor(y)) + 1;
  std::uint64_t hi = 0;
  if (z >= 1.0) hi = std::min(cap, static_cast<std::uint64_t>(std::floor(z)));
  return {lo, hi};
}

}  // namespace

std::uint32_t tau_interval(std::uint64_t n, double y, double z) {
  if (n == 0) throw DomainError("tau needs n >= 1");
  std::uint32_t count = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const std::uint64_t e = n / d;
    if (static_cast<double>(d) > y && static_cast<double>(d) <= z) ++count;
    if (e != d && static_cast<double>(e) > y && static_cast<double>(e) <= z) ++count;
  }
  return count;
}

std::vector<std::uint64_t> divisor_marks(std::uint64_t x, double y, double z) {
  if (x > kCountHCeiling) throw CeilingExceeded("H counts are capped at x = 10^8");
  std::vector<std::uint64_t> marks((x + 64) / 64 + 1, 0);
  const auto [lo, hi] = divisor_range(y, z, x);
  for (std::uint64_t d = lo; d <= hi && d >= 1; ++d)
    for (std::uint64_t n = d; n <= x; n += d) marks[n >> 6] |= std::uint64_t{1} << (n & 63);
  return marks;
}

std::uint64_t count_h(std::uint64_t x, double y, double z) {
  const auto marks = divisor_marks(x, y, z);
  std::uint64_t total = 0;
  for (std::uint64_t w : marks) total += std::popcount(w);
  return total;
}

namespace {

template <typename Fn>
void for_each_prime(std::uint64_t limit, Fn&& fn) {
  if (limit < 2) return;
  const std::uint32_t root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const std::vector<std::uint32_t> base = primes_up_to(root);
  constexpr std::uint64_t kSegment = 1 << 20;
  std::vector<std::uint8_t> seg(kSegment);
  for (std::uint64_t low = 2; low <= limit; low += kSegment) {
    const std::uint64_t high = std::min(limit, low + kSegment - 1);
    std::fill(seg.begin(), seg.end(), 1);
    for (std::uint32_t q : base) {
      const std::uint64_t q2 = static_cast<std::uint64_t>(q) * q;
      if (q2 > high) break;
      std::uint64_t start = std::max(q2, (low + q - 1) / q * q);
      for (std::uint64_t n = start; n <= high; n += q) seg[n - low] = 0;
    }
    for (std::uint64_t n = low; n <= high; ++n)
      if (seg[n - low]) fn(n);
  }
}

}  // namespace

std::uint64_t count_h_shifted(std::uint64_t x, double y, double z, std::int32_t lambda) {
  if (lambda < -10 || lambda > 10) throw DomainError("the shift is restricted to [-10, 10]");
  const auto marks = divisor_marks(x, y, z);
  std::uint64_t total = 0;
  const std::int64_t xs = static_cast<std::int64_t>(x);
  for_each_prime(static_cast<std::uint64_t>(std::max<std::int64_t>(0, xs - lambda)),
                 [&](std::uint64_t q) {
                   const std::int64_t n = static_cast<std::int64_t>(q) + lambda;
                   if (n < 1 || n > xs) return;
                   if ((marks[n >> 6] >> (n & 63)) & 1) ++total;
                 });
  return total;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  std::vector<std::uint8_t> flags(n + 1, 1);
  flags[0] = flags[1] = 0;
  for (std::uint64_t i = 2; i * i <= n; ++i)
    if (flags[i])
      for (std::uint64_t j = i * i; j <= n; j += i) flags[j] = 0;
  for (std::uint32_t i = 2; i <= n; ++i)
    if (flags[i]) out.push_back(i);
  return out;
}

std::uint64_t prime_pi(std::uint64_t x, unsigned jobs) {
  if (x > kPiCeiling) throw CeilingExceeded("pi(x) is capped at x = 10^9");
  if (x < 2) return 0;
  const std::uint32_t root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(x))) + 1;
  const std::vector<std::uint32_t> base = primes_up_to(root);

  constexpr std::uint64_t kSegment = 1 << 21;
  const std::uint64_t segments = (x - 2) / kSegment + 1;
  std::vector<std::uint64_t> counts(segments, 0);
  run_tasks(segments, jobs, [&](std::size_t si) {
    const std::uint64_t low = 2 + si * kSegment;
    const std::uint64_t high = std::min(x, low + kSegment - 1);
    std::vector<std::uint8_t> seg(high - low + 1, 1);
    for (std::uint32_t q : base) {
      const std::uint64_t q2 = static_cast<std::uint64_t>(q) * q;
      if (q2 > high) break;
      for (std::uint64_t n = std::max(q2, (low + q - 1) / q * q); n <= high; n += q)
        seg[n - low] = 0;
    }
    std::uint64_t c = 0;
    for (std::uint8_t f : seg) c += f;
    counts[si] = c;
  });
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  return total;
}

namespace {

// Exact closed-interval test sqrt(p)/(6k) <= d <= sqrt(p) through squares.
bool in_default_interval(std::uint64_t d, std::uint64_t p, std::uint64_t k) {
  const unsigned __int128 d2 = static_cast<unsigned __int128>(d) * d;
  if (d2 > p) return false;
  const unsigned __int128 lhs = static_cast<unsigned __int128>(36) * k * k * d2;
  return lhs >= p;
}

// Half-open rescaled variant: sqrt(X)/(100k) < d <= sqrt(X).
bool in_rescaled_interval(std::uint64_t d, std::uint64_t big_x, std::uint64_t k) {
  const unsigned __int128 d2 = static_cast<unsigned __int128>(d) * d;
  if (d2 > big_x) return false;
  const unsigned __int128 lhs = static_cast<unsigned __int128>(10'000) * k * k * d2;
  return lhs > big_x;
}

}  // namespace

CensusRow candidate_ratio(std::uint32_t k, std::uint64_t x, const CandidateOptions& opt) {
  if (k < 2) throw BadOrder("k must be >= 2");
  if (x > kCountHCeiling) throw CeilingExceeded("the candidate census is capped at x = 10^8");

  CensusRow row;
  row.x = x;
  for_each_prime(x, [&](std::uint64_t p) {
    if (p % k != 1) return;
    ++row.denominator;
    const std::uint64_t n = (p - 1) / k;
    bool pass = false;
    for (std::uint64_t d = 1; d * d <= n && !pass; ++d) {
      if (n % d != 0) continue;
      for (std::uint64_t cand : {d, n / d}) {
        if (opt.nontrivial_divisors && (cand == 1 || cand == n)) continue;
        const bool hit = opt.rescaled_x ? in_rescaled_interval(cand, *opt.rescaled_x, k)
                                        : in_default_interval(cand, p, k);
        if (hit) {
          pass = true;
          break;
        }
      }
    }
    if (pass) ++row.count;
  });
  row.ratio = row.denominator == 0
                  ? std::numeric_limits<double>::quiet_NaN()
                  : static_cast<double>(row.count) / static_cast<double>(row.denominator);
  return row;
}

BadPrimeCensus bad_prime_census(std::uint32_t k, std::uint32_t p_max, SearchMode mode,
                                unsigned jobs) {
  if (k < 2) throw BadOrder("k must be >= 2");
  if (p_max > 4096) throw CeilingExceeded("the bad-prime census is capped at p_max = 4096");
  if (mode == SearchMode::general && p_max > 128)
    throw CeilingExceeded("general-mode census is capped at p_max = 128");

  BadPrimeCensus census;
  census.k = k;
  census.p_max = p_max;
  for (std::uint32_t p : primes_up_to(p_max)) {
    if (p % k != 1 || k >= p - 1) continue;
    ++census.scanned;
    const PrimeField field(p);
    SearchReport report = enumerate_2_decompositions(field, k, mode, jobs);
    if (!report.orbits.empty())
      census.bad.push_back({p, std::move(report.orbits.front())});
  }
  return census;
}

FordConstants ford_constants(std::uint32_t k, double y) {
  if (k < 1) throw BadOrder("k must be >= 1");
  if (y <= 1.0) throw DomainError("u(y) needs y > 1");
  FordConstants c;
  c.delta = 1.0 - (1.0 + std::log(std::log(2.0))) / std::log(2.0);
  c.u = std::log(100.0 * static_cast<double>(k)) / std::log(y);
  return c;
}

}  // namespace rlab
