#include "rlab/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include "rlab/numeric.hpp"

namespace rlab {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > kMaxPrime) throw Overflow("p exceeds the configured field ceiling 2^31-1");
  if (p < 3) throw CompositeInput("p must be an odd prime, p >= 3");
  if (!is_prime(p)) throw CompositeInput("p = " + std::to_string(p) + " is not prime");

  for (std::uint64_t q : distinct_prime_factors(p - 1))
    factors_.push_back(static_cast<std::uint32_t>(q));

  // Least primitive root by increasing trial: g is primitive iff
  // g^((p-1)/q) != 1 for every prime q | p-1.
  for (std::uint32_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (std::uint32_t q : factors_) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g_ = g;
      break;
    }
  }

  index_.assign(p, 0);
  std::uint64_t x = 1;
  for (std::uint32_t e = 0; e + 1 < p; ++e) {
    index_[x] = e;
    x = x * g_ % p;
  }
}

std::uint32_t PrimeField::index_of(std::uint32_t x) const {
  x %= p_;
  if (x == 0) throw ZeroHasNoIndex("0 has no discrete logarithm");
  return index_[x];
}

std::uint32_t PrimeField::pow(std::uint32_t base, std::uint64_t e) const {
  return static_cast<std::uint32_t>(pow_mod(base, e, p_));
}

std::uint32_t PrimeField::inverse(std::uint32_t x) const {
  std::uint32_t e = index_of(x);
  return pow(g_, (p_ - 1 - e) % (p_ - 1));
}

PrimeField build_field(std::uint32_t p) { return PrimeField(p); }

std::uint32_t index_of(const PrimeField& field, std::uint32_t x) { return field.index_of(x); }

void CharacterSpec::validate(const PrimeField& field) const {
  if (order < 2 || (field.p() - 1) % order != 0)
    throw BadOrder("character order must be >= 2 and divide p-1");
  if (exponent < 1 || exponent >= order)
    throw BadOrder("character exponent must lie in [1, order-1]");
}

std::uint32_t CharacterSpec::effective_order() const {
  return order / std::gcd(exponent, order);
}

std::optional<std::uint32_t> char_exponent(const PrimeField& field, const CharacterSpec& spec,
                                           std::uint32_t x) {
  spec.validate(field);
  x %= field.p();
  if (x == 0) return std::nullopt;
  std::uint64_t ind = field.index_of(x);
  return static_cast<std::uint32_t>(ind % spec.order * spec.exponent % spec.order);
}

CyclotomicCounter::CyclotomicCounter(std::uint32_t order) : order_(order) {
  if (order == 0) throw BadOrder("counter order must be >= 1");
  counts_.assign(order, 0);
}

void CyclotomicCounter::add(std::uint32_t exponent, std::int64_t weight) {
  counts_[exponent % order_] = checked::add(counts_[exponent % order_], weight);
}

CyclotomicCounter& CyclotomicCounter::operator+=(const CyclotomicCounter& other) {
  if (other.order_ != order_) throw BadOrder("counter orders differ");
  for (std::uint32_t r = 0; r < order_; ++r) counts_[r] = checked::add(counts_[r], other.counts_[r]);
  return *this;
}

CyclotomicCounter& CyclotomicCounter::operator-=(const CyclotomicCounter& other) {
  if (other.order_ != order_) throw BadOrder("counter orders differ");
  for (std::uint32_t r = 0; r < order_; ++r) counts_[r] = checked::sub(counts_[r], other.counts_[r]);
  return *this;
}

bool CyclotomicCounter::all_counts_equal() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [&](std::int64_t c) { return c == counts_[0]; });
}

double CyclotomicCounter::magnitude() const {
  if (order_ == 1) return std::abs(static_cast<double>(counts_[0]));

  // Remove the full vanishing sum (all-equal part) exactly, then for even m
  // fold zeta^(r+m/2) = -zeta^r. Both steps are integer arithmetic, so the
  // frequent exact cancellations never reach floating point.
  std::vector<std::int64_t> c = counts_;
  std::int64_t lo = *std::min_element(c.begin(), c.end());
  for (auto& v : c) v -= lo;
  std::uint32_t terms = order_;
  if (order_ % 2 == 0) {
    terms = order_ / 2;
    for (std::uint32_t r = 0; r < terms; ++r) c[r] -= c[r + terms];
    c.resize(terms);
  }

  double re = 0.0, im = 0.0;
  for (std::uint32_t r = 0; r < terms; ++r) {
    if (c[r] == 0) continue;
    double angle = 2.0 * std::numbers::pi * r / order_;
    re += static_cast<double>(c[r]) * std::cos(angle);
    im += static_cast<double>(c[r]) * std::sin(angle);
  }
  return std::hypot(re, im);
}

bool CyclotomicCounter::equals_integer(std::int64_t n) const {
  if (order_ == 1) return counts_[0] == n;
  std::vector<std::int64_t> rem = counts_;
  rem[0] = checked::sub(rem[0], n);

  const std::vector<std::int64_t> phi = cyclotomic_polynomial(order_);
  const std::size_t d = phi.size() - 1;  // phi is monic of degree phi(m)
  for (std::size_t i = rem.size(); i-- > d;) {
    std::int64_t q = rem[i];
    if (q == 0) continue;
    for (std::size_t j = 0; j <= d; ++j)
      rem[i - d + j] = checked::sub(rem[i - d + j], checked::mul(q, phi[j]));
  }
  return std::all_of(rem.begin(), rem.end(), [](std::int64_t v) { return v == 0; });
}

double counter_magnitude(const CyclotomicCounter& counter) { return counter.magnitude(); }

namespace {

// Exact division of integer polynomials, divisor monic. Ascending coefficients.
std::vector<std::int64_t> divide_exact(const std::vector<std::int64_t>& num,
                                       const std::vector<std::int64_t>& den) {
  std::vector<std::int64_t> rem = num;
  const std::size_t dd = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    std::int64_t q = rem[i];
    if (q == 0) continue;
    quot[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j)
      rem[i - dd + j] = checked::sub(rem[i - dd + j], checked::mul(q, den[j]));
  }
  for (std::int64_t v : rem)
    if (v != 0) throw Error("cyclotomic division left a remainder");
  return quot;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t m) {
  if (m == 0) throw BadOrder("cyclotomic polynomial needs m >= 1");
  std::map<std::uint32_t, std::vector<std::int64_t>> memo;
  for (std::uint64_t d : divisors_of(m)) {
    // X^d - 1 divided by every proper-divisor cyclotomic polynomial.
    std::vector<std::int64_t> q(d + 1, 0);
    q[0] = -1;
    q[d] = 1;
    for (std::uint64_t e : divisors_of(d))
      if (e < d) q = divide_exact(q, memo.at(static_cast<std::uint32_t>(e)));
    memo[static_cast<std::uint32_t>(d)] = std::move(q);
  }
  return memo.at(m);
}

}  // namespace rlab
