#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rlab/correlation.hpp"
#include "rlab/numeric.hpp"

using namespace rlab;

namespace {

IntFunction random_function(std::mt19937_64& rng, std::uint32_t p) {
  IntFunction f = IntFunction::zeros(p);
  for (auto& v : f.values) v = static_cast<std::int64_t>(rng() % 11) - 5;
  return f;
}

}  // namespace

TEST_CASE("convolve definition and sign convention") {
  // f = g = indicator of {0}: a single term survives at x = 0.
  const IntFunction delta = IntFunction::indicator(ElementSet::from_members(7, {0}));
  CHECK(convolve(delta, delta).values == delta.values);

  // (f o g)(x) = sum f(y) g(x+y) is a correlation, not a flip convolution:
  // with f = 1_{1}, g = 1_{3} the mass sits at x = 2, not x = 4.
  const IntFunction f1 = IntFunction::indicator(ElementSet::from_members(7, {1}));
  const IntFunction g3 = IntFunction::indicator(ElementSet::from_members(7, {3}));
  const IntFunction corr = convolve(f1, g3);
  for (std::uint32_t x = 0; x < 7; ++x) CHECK(corr.values[x] == (x == 2 ? 1 : 0));

  const PrimeField f13(13);
  const IntFunction ind15 = IntFunction::indicator(ElementSet::from_members(13, {1, 5}));
  const IntFunction fk3 = IntFunction::from_fk(fk_table(f13, 3));
  CHECK(convolve(ind15, fk3).values[0] == 4);  // both 1 and 5 are cubes

  const PrimeField f7(7);
  const IntFunction fk2 = IntFunction::from_fk(fk_table(f7, 2));
  const IntFunction auto2 = convolve(fk2, fk2);
  CHECK(auto2.values[0] == 6);
  for (std::uint32_t t = 1; t < 7; ++t) CHECK(auto2.values[t] == -1);
}

TEST_CASE("correlation tensor basics") {
  const PrimeField f7(7);
  const IntFunction fk2 = IntFunction::from_fk(fk_table(f7, 2));
  const CorrelationTensor t1 = correlation_tensor(fk2, 1);
  CHECK(t1.at({0}) == 6);
  for (std::uint32_t t = 1; t < 7; ++t) CHECK(t1.at({t}) == -1);

  const PrimeField f13(13);
  const IntFunction fk3 = IntFunction::from_fk(fk_table(f13, 3));
  CHECK(correlation_tensor(fk3, 1).at({0}) == 24);  // (p-1)(k-1)

  // r = 1 tensor coincides with the self-correlation for any g
  std::mt19937_64 rng(5);
  const IntFunction g = random_function(rng, 13);
  const CorrelationTensor tg = correlation_tensor(g, 1);
  const IntFunction gg = convolve(g, g);
  for (std::uint32_t t = 0; t < 13; ++t) CHECK(tg.at({t}) == gg.values[t]);
}

TEST_CASE("tensor symmetry for a single function") {
  std::mt19937_64 rng(17);
  const IntFunction g = random_function(rng, 13);
  const CorrelationTensor t = correlation_tensor(g, 2);
  for (std::uint32_t a = 0; a < 13; ++a)
    for (std::uint32_t b = 0; b < 13; ++b) CHECK(t.at({a, b}) == t.at({b, a}));
}

TEST_CASE("tensor ceiling") {
  const IntFunction g = IntFunction::zeros(1009);
  CHECK_THROWS_AS(correlation_tensor(g, 3), CeilingExceeded);
  CHECK_THROWS_AS(shkredov_check(g, g, 3), CeilingExceeded);
}

TEST_CASE("moment identity worked examples") {
  const PrimeField f7(7);
  const IntFunction fk2 = IntFunction::from_fk(fk_table(f7, 2));
  const ShkredovReport rep = shkredov_check(fk2, fk2, 2);
  CHECK(rep.lhs == 210);  // 6^3 + 6 * (-1)^3
  CHECK(rep.rhs == 210);
  CHECK(rep.equal);

  const IntFunction delta = IntFunction::indicator(ElementSet::from_members(7, {0}));
  for (std::uint32_t r : {1u, 2u, 3u}) {
    const ShkredovReport d = shkredov_check(delta, delta, r);
    CHECK(d.lhs == 1);
    CHECK(d.rhs == 1);
    CHECK(d.equal);
  }

  const PrimeField f13(13);
  const IntFunction fk3 = IntFunction::from_fk(fk_table(f13, 3));
  const IntFunction ind = IntFunction::indicator(power_residues(f13, 3));
  CHECK(shkredov_check(fk3, ind, 2).equal);
}

TEST_CASE("moment identity on random integer pairs") {
  std::mt19937_64 rng(29);
  for (std::uint32_t p : {7u, 13u}) {
    for (std::uint32_t r : {1u, 2u, 3u}) {
      for (int iter = 0; iter < 10; ++iter) {
        const IntFunction f = random_function(rng, p);
        const IntFunction g = random_function(rng, p);
        CHECK(shkredov_check(f, g, r).equal);
      }
    }
  }
}

TEST_CASE("weil bound worked instances") {
  const PrimeField f7(7);
  const FactoredPoly xx1{{{0, 1}, {1, 1}}, 1};  // x(x+1)
  const WeilReport rep = weil_verify(f7, CharacterSpec{2, 1}, xx1);
  CHECK(rep.magnitude == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.bound == doctest::Approx(std::sqrt(7.0)));
  CHECK(rep.holds);

  const FactoredPoly square{{{1, 2}}, 1};  // (x+1)^2 with a quadratic character
  CHECK_THROWS_AS(weil_verify(f7, CharacterSpec{2, 1}, square), IsMthPower);

  const PrimeField f13(13);
  const FactoredPoly cubic{{{0, 1}, {1, 1}, {2, 1}}, 1};
  const WeilReport r13 = weil_verify(f13, CharacterSpec{3, 1}, cubic);
  CHECK(r13.bound == doctest::Approx(2.0 * std::sqrt(13.0)));
  CHECK(r13.holds);

  // chi = psi^2 of order 4 has effective order 2, and (x+1)^2 is then a power
  const PrimeField f17(17);
  CHECK_THROWS_AS(weil_verify(f17, CharacterSpec{4, 2}, square), IsMthPower);
  CHECK_NOTHROW(weil_verify(f17, CharacterSpec{4, 1}, square));
}

TEST_CASE("weil bound random fuzz") {
  std::mt19937_64 rng(31);
  const auto primes = primes_up_to(97);
  int checked = 0;
  while (checked < 100) {
    const std::uint32_t p = primes[rng() % primes.size()];
    if (p < 3) continue;
    std::vector<std::uint32_t> orders;
    for (std::uint64_t d : divisors_of(p - 1))
      if (d >= 2) orders.push_back(static_cast<std::uint32_t>(d));
    const std::uint32_t m = orders[rng() % orders.size()];
    FactoredPoly poly;
    const std::uint32_t nshifts = 1 + rng() % 4;
    if (nshifts > p) continue;
    std::set<std::uint32_t> used;
    while (poly.factors.size() < nshifts) {
      const std::uint32_t s = static_cast<std::uint32_t>(rng() % p);
      if (!used.insert(s).second) continue;
      poly.factors.push_back({s, 1 + static_cast<std::uint32_t>(rng() % (m - 1))});
    }
    const PrimeField field(p);
    CHECK(weil_verify(field, CharacterSpec{m, 1}, poly).holds);
    ++checked;
  }
}

TEST_CASE("factored polynomial parsing and validation") {
  const FactoredPoly poly = FactoredPoly::parse("0:1,1:1,2:1", 13);
  CHECK(poly.distinct_roots() == 3);
  CHECK(poly.to_string() == "0:1,1:1,2:1");

  const PrimeField f13(13);
  CHECK(poly.eval(f13, 1) == 1 * 2 * 3 % 13);
  CHECK_THROWS_AS(FactoredPoly::parse("0;1", 13), DomainError);
  FactoredPoly dup{{{1, 1}, {14, 1}}, 1};  // 14 = 1 mod 13
  CHECK_THROWS_AS(dup.validate(f13), DomainError);
}

TEST_CASE("shifted triple product expansion is an exact identity") {
  const PrimeField f13(13);
  CHECK(b2_product_expansion_check(f13, 3, 1).equal);

  const PrimeField f7(7);
  const B2ExpansionReport rep = b2_product_expansion_check(f7, 2, 3);
  CHECK(rep.equal);
  CHECK(rep.corr_t == -1);  // |sum f_2(x) f_2(x+3)| = 1 <= sqrt(7)
  CHECK(std::abs(rep.corr_t) <= std::sqrt(7.0));

  for (std::uint32_t p : {7u, 11u, 13u, 31u, 61u}) {
    const PrimeField field(p);
    for (std::uint64_t k : divisors_of(p - 1)) {
      if (k <= 1 || k >= p - 1) continue;
      for (std::uint32_t t = 1; t < std::min(p, 8u); ++t) {
        const auto r = b2_product_expansion_check(field, static_cast<std::uint32_t>(k), t);
        CHECK(r.equal);
        CHECK(r.g0 >= 0);
        CHECK(r.g0 <= static_cast<std::int64_t>(k * k));
      }
    }
  }

  CHECK_THROWS_AS(b2_product_expansion_check(f13, 3, 0), DomainError);
  CHECK_THROWS_AS(b2_product_expansion_check(f13, 3, 13), DomainError);
}

TEST_CASE("pair and triple correlation bounds from the complete scans") {
  // |sum f_k(x) f_k(x+t)| <= (k-1)^2 sqrt(p) and the triple analogue with
  // factor 2 (k-1)^3, for every nonzero shift.
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{13, 3}, {31, 5}}) {
    const PrimeField field(p);
    const IntFunction f = IntFunction::from_fk(fk_table(field, k));
    const double sp = std::sqrt(static_cast<double>(p));
    const double km1 = k - 1.0;
    for (std::uint32_t t = 1; t < p; ++t) {
      CHECK(std::abs(pair_correlation(f, t)) <= km1 * km1 * sp);
      CHECK(std::abs(triple_correlation(f, t, (2 * t) % p)) <= 2.0 * km1 * km1 * km1 * sp);
    }
  }
}

TEST_CASE("membership product identities") {
  CHECK(membership_identities_hold(3, 2));  // 6 + 3 = 9 = (3*4-3)*1 and 3 + 1 = 4 = 8-1-3
  for (std::uint32_t r = 2; r <= 12; ++r)
    for (std::uint32_t k = 2; k <= 12; ++k) CHECK(membership_identities_hold(r, k));
  CHECK_THROWS_AS(membership_identities_hold(1, 2), DomainError);
}

TEST_CASE("membership product over a window") {
  const PrimeField f13(13);
  const MembershipProductReport rep = membership_product_check(f13, 3, {0, 7});
  CHECK(rep.pointwise_ok);
  CHECK(rep.identities_ok);
  CHECK(rep.sum_denominator == 9);

  // worked value: the x = 1 factor product is (1+f(1))(1+f(8)) = 9, i.e. H(1) = 1
  const FkTable t = fk_table(f13, 3);
  CHECK((1 + t.values[1]) * (1 + t.values[8]) == 9);

  CHECK_THROWS_AS(membership_product_check(f13, 3, {0}), DomainError);
  CHECK_THROWS_AS(membership_product_check(f13, 3, {0, 13}), DomainError);
}

TEST_CASE("exceptional tuple classification") {
  CHECK(exceptional_tuple(5, 5, 0));
  CHECK(exceptional_tuple(0, 0, 0));
  CHECK_FALSE(exceptional_tuple(1, 2, 3));
  CHECK(exceptional_tuple(0, 5, 5));
  CHECK(exceptional_tuple(5, 0, 5));
  CHECK_FALSE(exceptional_tuple(3, 3, 3));
  CHECK_FALSE(exceptional_tuple(0, 0, 3));
}

TEST_CASE("C_4 scan on small fields") {
  const PrimeField f7(7);
  const C4ScanReport rep7 = c4_fk_scan(f7, 2);
  CHECK(rep7.all_hold());
  CHECK(rep7.origin.tuples == 1);
  CHECK(rep7.pattern_xx0.tuples == 6);
  CHECK(rep7.off_e.tuples == 7 * 7 * 7 - 3 * 6 - 1);

  const PrimeField f13(13);
  const C4ScanReport rep13 = c4_fk_scan(f13, 3);
  CHECK(rep13.all_hold());
  CHECK(rep13.origin.max_abs == 72);  // sum f_3^4 = 4*16 + 8
  CHECK(rep13.origin.bound == doctest::Approx(3.0 * 8.0 * 13.0));

  const PrimeField f1009(251);
  CHECK_THROWS_AS(c4_fk_scan(f1009, 2), CeilingExceeded);
}
