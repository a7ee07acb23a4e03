#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rlab/field.hpp"
#include "rlab/residue.hpp"

namespace rlab {

/// Integer-valued function on F_p. All correlation machinery below is exact:
/// sums accumulate in 128-bit arithmetic and throw Overflow instead of wrapping.
struct IntFunction {
  std::uint32_t p = 0;
  std::vector<std::int64_t> values;

  static IntFunction zeros(std::uint32_t p) { return {p, std::vector<std::int64_t>(p, 0)}; }
  static IntFunction indicator(const ElementSet& s);
  static IntFunction from_fk(const FkTable& t) { return {t.p, t.values}; }
};

/// (f o g)(x) = sum_y f(y) g(x+y). Note the plus: this is a correlation.
IntFunction convolve(const IntFunction& f, const IntFunction& g);

/// Dense r-parameter correlation tensor of g:
/// values(x_1..x_r) = sum_x g(x) g(x+x_1) ... g(x+x_r).
class CorrelationTensor {
 public:
  CorrelationTensor(std::uint32_t p, std::uint32_t r, std::vector<std::int64_t> values)
      : p_(p), r_(r), v_(std::move(values)) {}

  std::uint32_t p() const { return p_; }
  std::uint32_t r() const { return r_; }
  std::uint64_t size() const { return v_.size(); }
  const std::vector<std::int64_t>& flat() const { return v_; }
  std::int64_t at(const std::vector<std::uint32_t>& idx) const;

 private:
  std::uint32_t p_;
  std::uint32_t r_;
  std::vector<std::int64_t> v_;
};

/// Full tensor; requires p^r <= 10^7 (CeilingExceeded otherwise).
CorrelationTensor correlation_tensor(const IntFunction& g, std::uint32_t r, unsigned jobs = 1);

/// sum_x f(x) f(x+t).
std::int64_t pair_correlation(const IntFunction& f, std::uint32_t t);
/// sum_x f(x) f(x+t1) f(x+t2).
std::int64_t triple_correlation(const IntFunction& f, std::uint32_t t1, std::uint32_t t2);

struct ShkredovReport {
  std::int64_t lhs = 0;  // sum_x (f o g)^(r+1)(x)
  std::int64_t rhs = 0;  // sum over F_p^r of C_{r+1}(f) * C_{r+1}(g)
  bool equal = false;
};

/// Both sides of the moment identity, computed independently; they must agree
/// exactly for every integer-valued f, g.
ShkredovReport shkredov_check(const IntFunction& f, const IntFunction& g, std::uint32_t r,
                              unsigned jobs = 1);

/// a * prod_i (x + shift_i)^(exponent_i), shifts pairwise distinct mod p.
struct FactoredPoly {
  struct Factor {
    std::uint32_t shift = 0;
    std::uint32_t exponent = 1;
  };
  std::vector<Factor> factors;
  std::uint32_t lead = 1;

  std::uint32_t distinct_roots() const { return static_cast<std::uint32_t>(factors.size()); }
  void validate(const PrimeField& field) const;
  std::uint32_t eval(const PrimeField& field, std::uint32_t x) const;

  /// CLI syntax "shift:exponent[,shift:exponent...]", e.g. "0:1,1:1,2:1".
  static FactoredPoly parse(const std::string& text, std::uint32_t p);
  std::string to_string() const;
};

struct WeilReport {
  double magnitude = 0.0;
  double bound = 0.0;
  bool holds = false;
  std::uint32_t distinct_roots = 0;
};

/// |sum_x chi(poly(x))| against (r-1)*sqrt(p). The sum accumulates exactly in a
/// CyclotomicCounter; only the final comparison is floating point (1e-6 slack).
/// Throws IsMthPower when every exponent vanishes mod ord(chi).
WeilReport weil_verify(const PrimeField& field, const CharacterSpec& spec,
                       const FactoredPoly& poly);

/// Report for the exact expansion of sum_x G(x), where
/// G(x) = (k-1-f_k(x+t)) (k-1-f_k(x-t)) (1+f_k(x)).
/// direct evaluates G pointwise; expanded uses the correlation-sum formula
/// (k-1)^2 p - 2(k-1) S(t) + S(2t) + T(t,2t). The two must agree exactly.
struct B2ExpansionReport {
  std::int64_t direct = 0;
  std::int64_t expanded = 0;
  bool equal = false;
  std::int64_t g0 = 0;  // G(0), always within [0, k^2]
  std::int64_t corr_t = 0;
  std::int64_t corr_2t = 0;
  std::int64_t corr_triple = 0;
};

B2ExpansionReport b2_product_expansion_check(const PrimeField& field, std::uint32_t k,
                                             std::uint32_t t);

/// The two binomial identities behind the k^(-r) product expansion:
///   sum_{i=2..r} C(r,i) i (k-1)^i  = (r k^(r-1) - r)(k-1)
///   sum_{i=2..r} C(r,i) (k-1)^i    = k^r - 1 - r(k-1)
bool membership_identities_hold(std::uint32_t r, std::uint32_t k);

/// H(x) = k^(-r) prod_j (1 + f_k(x + y_j)) over the given distinct shifts.
/// sum_x H(x) is reported as the exact rational numerator / k^r.
struct MembershipProductReport {
  std::int64_t sum_numerator = 0;
  std::int64_t sum_denominator = 1;  // k^r
  bool pointwise_ok = false;         // H in [0,1], and H(x)=1 iff all shifts land in D_k
  bool identities_ok = false;
};

MembershipProductReport membership_product_check(const PrimeField& field, std::uint32_t k,
                                                 const std::vector<std::uint32_t>& shifts);

/// Tuples (x,x,0), (x,0,x), (0,x,x) with x != 0, plus the origin.
bool exceptional_tuple(std::uint32_t x1, std::uint32_t x2, std::uint32_t x3);

struct C4ClassStat {
  std::int64_t max_abs = 0;
  double bound = 0.0;
  bool holds = true;
  std::uint64_t tuples = 0;
};

/// Full scan of C_4(f_k) over F_p^3 with per-class maxima. The three diagonal
/// patterns are scanned separately on purpose: any asymmetry between them
/// would show up here instead of being assumed away.
struct C4ScanReport {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  C4ClassStat off_e;        // bound 3 (k-1)^4 sqrt(p)
  C4ClassStat pattern_xx0;  // bound (k-1)^2 p + ((k-1)^4 - (k-1)^2) sqrt(p)
  C4ClassStat pattern_x0x;
  C4ClassStat pattern_0xx;
  C4ClassStat origin;  // bound 3 (k-1)^3 p
  bool all_hold() const {
    return off_e.holds && pattern_xx0.holds && pattern_x0x.holds && pattern_0xx.holds &&
           origin.holds;
  }
};

/// Requires p <= 200 (the scan costs p^4 multiplications).
C4ScanReport c4_fk_scan(const PrimeField& field, std::uint32_t k, unsigned jobs = 1);

}  // namespace rlab
