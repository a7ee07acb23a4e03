#include "rlab/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "rlab/numeric.hpp"
#include "rlab/parallel.hpp"

namespace rlab {

IntFunction IntFunction::indicator(const ElementSet& s) {
  IntFunction f = zeros(s.universe());
  for (std::uint32_t x : s.members()) f.values[x] = 1;
  return f;
}

IntFunction convolve(const IntFunction& f, const IntFunction& g) {
  if (f.p != g.p) throw UniverseMismatch("convolve over different p");
  const std::uint32_t p = f.p;
  IntFunction out = IntFunction::zeros(p);
  for (std::uint32_t x = 0; x < p; ++x) {
    __int128 acc = 0;
    for (std::uint32_t y = 0; y < p; ++y) {
      std::uint32_t s = x + y;
      if (s >= p) s -= p;
      acc += static_cast<__int128>(f.values[y]) * g.values[s];
    }
    out.values[x] = checked::narrow(acc);
  }
  return out;
}

std::int64_t CorrelationTensor::at(const std::vector<std::uint32_t>& idx) const {
  if (idx.size() != r_) throw Error("tensor index arity mismatch");
  std::uint64_t flat = 0;
  for (std::uint32_t i : idx) flat = flat * p_ + (i % p_);
  return v_[flat];
}

namespace {

std::uint64_t tensor_cells(std::uint32_t p, std::uint32_t r) {
  std::uint64_t cells = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    if (cells > 10'000'000 / p + 1) return UINT64_MAX;
    cells *= p;
  }
  return cells;
}

}  // namespace

CorrelationTensor correlation_tensor(const IntFunction& g, std::uint32_t r, unsigned jobs) {
  if (r == 0) throw Error("tensor order r must be >= 1");
  const std::uint32_t p = g.p;
  const std::uint64_t cells = tensor_cells(p, r);
  if (cells == UINT64_MAX || cells > 10'000'000)
    throw CeilingExceeded("p^r exceeds the 10^7 tensor ceiling");

  std::vector<std::int64_t> v(cells, 0);
  const std::uint64_t slab = cells / p;  // cells per value of x_1
  run_tasks(p, jobs, [&](std::size_t x1) {
    std::vector<std::uint32_t> idx(r, 0);
    idx[0] = static_cast<std::uint32_t>(x1);
    for (std::uint64_t off = 0; off < slab; ++off) {
      std::uint64_t rest = off;
      for (std::uint32_t j = r; j-- > 1;) {
        idx[j] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      __int128 acc = 0;
      for (std::uint32_t x = 0; x < p; ++x) {
        __int128 term = g.values[x];
        for (std::uint32_t j = 0; j < r && term != 0; ++j) {
          std::uint32_t s = x + idx[j];
          if (s >= p) s -= p;
          term *= g.values[s];
        }
        acc += term;
      }
      v[x1 * slab + off] = checked::narrow(acc);
    }
  });
  return CorrelationTensor(p, r, std::move(v));
}

std::int64_t pair_correlation(const IntFunction& f, std::uint32_t t) {
  const std::uint32_t p = f.p;
  t %= p;
  __int128 acc = 0;
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint32_t s = x + t;
    if (s >= p) s -= p;
    acc += static_cast<__int128>(f.values[x]) * f.values[s];
  }
  return checked::narrow(acc);
}

std::int64_t triple_correlation(const IntFunction& f, std::uint32_t t1, std::uint32_t t2) {
  const std::uint32_t p = f.p;
  t1 %= p;
  t2 %= p;
  __int128 acc = 0;
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint32_t s1 = x + t1;
    if (s1 >= p) s1 -= p;
    std::uint32_t s2 = x + t2;
    if (s2 >= p) s2 -= p;
    acc += static_cast<__int128>(f.values[x]) * f.values[s1] * f.values[s2];
  }
  return checked::narrow(acc);
}

ShkredovReport shkredov_check(const IntFunction& f, const IntFunction& g, std::uint32_t r,
                              unsigned jobs) {
  if (f.p != g.p) throw UniverseMismatch("shkredov check over different p");
  const std::uint64_t cells = tensor_cells(f.p, r);
  if (cells == UINT64_MAX || cells > 10'000'000)
    throw CeilingExceeded("p^r exceeds the 10^7 ceiling");

  ShkredovReport rep;

  const IntFunction conv = convolve(f, g);
  __int128 lhs = 0;
  for (std::int64_t v : conv.values) {
    __int128 pw = 1;
    for (std::uint32_t i = 0; i <= r; ++i) {
      pw *= v;
      checked::narrow(pw);  // keep each partial power in range
    }
    lhs += pw;
  }
  rep.lhs = checked::narrow(lhs);

  const CorrelationTensor tf = correlation_tensor(f, r, jobs);
  const CorrelationTensor tg = correlation_tensor(g, r, jobs);
  __int128 rhs = 0;
  for (std::uint64_t i = 0; i < tf.size(); ++i)
    rhs += static_cast<__int128>(tf.flat()[i]) * tg.flat()[i];
  rep.rhs = checked::narrow(rhs);

  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

void FactoredPoly::validate(const PrimeField& field) const {
  if (factors.empty()) throw DomainError("factored polynomial needs at least one factor");
  if (lead % field.p() == 0) throw DomainError("leading coefficient must be nonzero mod p");
  std::set<std::uint32_t> seen;
  for (const Factor& f : factors) {
    if (f.exponent == 0) throw DomainError("factor exponents must be >= 1");
    if (!seen.insert(f.shift % field.p()).second)
      throw DomainError("factor shifts must be pairwise distinct mod p");
  }
}

std::uint32_t FactoredPoly::eval(const PrimeField& field, std::uint32_t x) const {
  std::uint32_t v = lead % field.p();
  for (const Factor& f : factors) {
    std::uint32_t base = field.add(x % field.p(), f.shift % field.p());
    v = field.mul(v, field.pow(base, f.exponent));
  }
  return v;
}

FactoredPoly FactoredPoly::parse(const std::string& text, std::uint32_t p) {
  FactoredPoly poly;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw DomainError("bad polynomial factor '" + item + "', expected shift:exponent");
    try {
      const std::uint64_t shift = std::stoull(item.substr(0, colon));
      const std::uint64_t expo = std::stoull(item.substr(colon + 1));
      poly.factors.push_back({static_cast<std::uint32_t>(shift % p),
                              static_cast<std::uint32_t>(expo)});
    } catch (const std::logic_error&) {
      throw DomainError("bad polynomial factor '" + item + "'");
    }
    pos = comma + 1;
  }
  if (poly.factors.empty()) throw DomainError("empty polynomial spec");
  return poly;
}

std::string FactoredPoly::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(factors[i].shift) + ':' + std::to_string(factors[i].exponent);
  }
  return out;
}

WeilReport weil_verify(const PrimeField& field, const CharacterSpec& spec,
                       const FactoredPoly& poly) {
  spec.validate(field);
  poly.validate(field);

  // The bound applies to chi of order m' = ord(chi); the polynomial must not be
  // an m'-th power. With distinct shifts that means some exponent != 0 mod m'.
  const std::uint32_t m_eff = spec.effective_order();
  bool all_zero = true;
  for (const auto& f : poly.factors)
    if (f.exponent % m_eff != 0) {
      all_zero = false;
      break;
    }
  if (all_zero)
    throw IsMthPower("every exponent vanishes mod ord(chi) = " + std::to_string(m_eff));

  CyclotomicCounter counter(spec.order);
  for (std::uint32_t x = 0; x < field.p(); ++x) {
    const std::uint32_t v = poly.eval(field, x);
    if (v == 0) continue;  // chi(0) = 0 contributes nothing
    counter.add(*char_exponent(field, spec, v));
  }

  WeilReport rep;
  rep.distinct_roots = poly.distinct_roots();
  rep.magnitude = counter.magnitude();
  rep.bound = (static_cast<double>(rep.distinct_roots) - 1.0) * std::sqrt(field.p());
  rep.holds = rep.magnitude <= rep.bound + 1e-6;
  return rep;
}

B2ExpansionReport b2_product_expansion_check(const PrimeField& field, std::uint32_t k,
                                             std::uint32_t t) {
  const std::uint32_t p = field.p();
  t %= p;
  if (t == 0) throw DomainError("shift t must be nonzero");
  const FkTable fk = fk_table(field, k);
  const std::int64_t a = static_cast<std::int64_t>(k) - 1;

  B2ExpansionReport rep;

  __int128 direct = 0;
  for (std::uint32_t x = 0; x < p; ++x) {
    const std::uint32_t xp = field.add(x, t);
    const std::uint32_t xm = field.sub(x, t);
    direct += static_cast<__int128>(a - fk.values[xp]) * (a - fk.values[xm]) *
              (1 + fk.values[x]);
  }
  rep.direct = checked::narrow(direct);

  const IntFunction f = IntFunction::from_fk(fk);
  const std::uint32_t t2 = field.add(t, t);
  rep.corr_t = pair_correlation(f, t);
  rep.corr_2t = pair_correlation(f, t2);
  rep.corr_triple = triple_correlation(f, t, t2);
  rep.expanded = checked::narrow(static_cast<__int128>(a) * a * p -
                                 static_cast<__int128>(2) * a * rep.corr_t + rep.corr_2t +
                                 rep.corr_triple);

  rep.equal = rep.direct == rep.expanded;
  rep.g0 = (a - fk.values[t]) * (a - fk.values[field.neg(t)]) * (1 + fk.values[0]);
  return rep;
}

bool membership_identities_hold(std::uint32_t r, std::uint32_t k) {
  if (r < 2 || k < 2) throw DomainError("identities need r >= 2 and k >= 2");
  // Binomials and powers stay exact in 64 bits through r, k <= 16; checked anyway.
  const std::int64_t km1 = static_cast<std::int64_t>(k) - 1;
  // binom[i] = C(r, i) via in-place Pascal rows.
  std::vector<std::int64_t> binom(r + 1, 0);
  binom[0] = 1;
  for (std::uint32_t n = 1; n <= r; ++n)
    for (std::uint32_t i = n; i >= 1; --i) binom[i] = checked::add(binom[i], binom[i - 1]);

  std::int64_t lhs1 = 0, lhs2 = 0;
  std::int64_t pw = checked::mul(km1, km1);  // (k-1)^i starting at i = 2
  for (std::uint32_t i = 2; i <= r; ++i) {
    lhs1 = checked::add(lhs1, checked::mul(checked::mul(binom[i], i), pw));
    lhs2 = checked::add(lhs2, checked::mul(binom[i], pw));
    if (i < r) pw = checked::mul(pw, km1);
  }

  std::int64_t k_pow_rm1 = 1;
  for (std::uint32_t i = 0; i + 1 < r; ++i) k_pow_rm1 = checked::mul(k_pow_rm1, k);
  const std::int64_t k_pow_r = checked::mul(k_pow_rm1, k);
  const std::int64_t rhs1 =
      checked::mul(checked::sub(checked::mul(static_cast<std::int64_t>(r), k_pow_rm1), r), km1);
  const std::int64_t rhs2 =
      checked::sub(checked::sub(k_pow_r, 1), checked::mul(static_cast<std::int64_t>(r), km1));
  return lhs1 == rhs1 && lhs2 == rhs2;
}

MembershipProductReport membership_product_check(const PrimeField& field, std::uint32_t k,
                                                 const std::vector<std::uint32_t>& shifts) {
  const std::uint32_t p = field.p();
  const std::uint32_t r = static_cast<std::uint32_t>(shifts.size());
  if (r < 2) throw DomainError("need at least two shifts");
  {
    std::set<std::uint32_t> seen;
    for (std::uint32_t y : shifts)
      if (!seen.insert(y % p).second) throw DomainError("shifts must be distinct mod p");
  }
  const FkTable fk = fk_table(field, k);
  const ElementSet d = power_residues(field, k);

  MembershipProductReport rep;
  std::int64_t den = 1;
  for (std::uint32_t i = 0; i < r; ++i) den = checked::mul(den, k);
  rep.sum_denominator = den;

  __int128 total = 0;
  bool pointwise = true;
  for (std::uint32_t x = 0; x < p; ++x) {
    __int128 prod = 1;
    bool all_in_d = true;
    for (std::uint32_t y : shifts) {
      const std::uint32_t s = field.add(x, y % p);
      prod *= 1 + fk.values[s];
      all_in_d = all_in_d && d.test(s);
    }
    const std::int64_t prod64 = checked::narrow(prod);
    if (prod64 < 0 || prod64 > den) pointwise = false;
    if ((prod64 == den) != all_in_d) pointwise = false;
    total += prod64;
  }
  rep.sum_numerator = checked::narrow(total);
  rep.pointwise_ok = pointwise;
  rep.identities_ok = membership_identities_hold(r, k);
  return rep;
}

bool exceptional_tuple(std::uint32_t x1, std::uint32_t x2, std::uint32_t x3) {
  if (x1 == 0 && x2 == 0 && x3 == 0) return true;
  if (x1 != 0 && x1 == x2 && x3 == 0) return true;
  if (x1 != 0 && x1 == x3 && x2 == 0) return true;
  if (x2 != 0 && x2 == x3 && x1 == 0) return true;
  return false;
}

C4ScanReport c4_fk_scan(const PrimeField& field, std::uint32_t k, unsigned jobs) {
  const std::uint32_t p = field.p();
  if (p > 200) throw CeilingExceeded("the C_4 scan costs p^4 and is capped at p = 200");
  const FkTable fk = fk_table(field, k);
  std::vector<std::int32_t> f(fk.values.begin(), fk.values.end());

  const double sp = std::sqrt(static_cast<double>(p));
  const double km1 = static_cast<double>(k) - 1.0;
  const double bound_off = 3.0 * std::pow(km1, 4) * sp;
  const double bound_diag = km1 * km1 * p + (std::pow(km1, 4) - km1 * km1) * sp;
  const double bound_origin = 3.0 * std::pow(km1, 3) * p;

  struct Acc {
    std::int64_t off = 0, xx0 = 0, x0x = 0, zxx = 0, origin = 0;
    std::uint64_t n_off = 0, n_xx0 = 0, n_x0x = 0, n_zxx = 0, n_origin = 0;
  };
  std::vector<Acc> parts(p);

  run_tasks(p, jobs, [&](std::size_t x1_raw) {
    const std::uint32_t x1 = static_cast<std::uint32_t>(x1_raw);
    Acc acc;
    for (std::uint32_t x2 = 0; x2 < p; ++x2) {
      for (std::uint32_t x3 = 0; x3 < p; ++x3) {
        std::int64_t sum = 0;
        for (std::uint32_t x = 0; x < p; ++x) {
          std::uint32_t s1 = x + x1;
          if (s1 >= p) s1 -= p;
          std::uint32_t s2 = x + x2;
          if (s2 >= p) s2 -= p;
          std::uint32_t s3 = x + x3;
          if (s3 >= p) s3 -= p;
          sum += static_cast<std::int64_t>(f[x]) * f[s1] * f[s2] * f[s3];
        }
        const std::int64_t mag = std::abs(sum);
        if (x1 == 0 && x2 == 0 && x3 == 0) {
          acc.origin = std::max(acc.origin, mag);
          ++acc.n_origin;
        } else if (x1 != 0 && x1 == x2 && x3 == 0) {
          acc.xx0 = std::max(acc.xx0, mag);
          ++acc.n_xx0;
        } else if (x1 != 0 && x1 == x3 && x2 == 0) {
          acc.x0x = std::max(acc.x0x, mag);
          ++acc.n_x0x;
        } else if (x1 == 0 && x2 != 0 && x2 == x3) {
          acc.zxx = std::max(acc.zxx, mag);
          ++acc.n_zxx;
        } else {
          acc.off = std::max(acc.off, mag);
          ++acc.n_off;
        }
      }
    }
    parts[x1_raw] = acc;
  });

  C4ScanReport rep;
  rep.p = p;
  rep.k = k;
  auto fold = [](C4ClassStat& cls, std::int64_t mx, std::uint64_t n, double bound) {
    cls.max_abs = std::max(cls.max_abs, mx);
    cls.tuples += n;
    cls.bound = bound;
    cls.holds = static_cast<double>(cls.max_abs) <= bound;
  };
  for (const Acc& acc : parts) {
    fold(rep.off_e, acc.off, acc.n_off, bound_off);
    fold(rep.pattern_xx0, acc.xx0, acc.n_xx0, bound_diag);
    fold(rep.pattern_x0x, acc.x0x, acc.n_x0x, bound_diag);
    fold(rep.pattern_0xx, acc.zxx, acc.n_zxx, bound_diag);
    fold(rep.origin, acc.origin, acc.n_origin, bound_origin);
  }
  return rep;
}

}  // namespace rlab
