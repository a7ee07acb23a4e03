#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "rlab/field.hpp"
#include "rlab/numeric.hpp"
#include "rlab/residue.hpp"
#include "rlab/serialize.hpp"

using namespace rlab;

namespace {

// Oracle: D_k straight from the definition {x^k : x != 0}.
std::set<std::uint32_t> powers_oracle(std::uint32_t p, std::uint32_t k) {
  std::set<std::uint32_t> out;
  for (std::uint32_t x = 1; x < p; ++x) out.insert(static_cast<std::uint32_t>(pow_mod(x, k, p)));
  return out;
}

ElementSet random_set(std::mt19937_64& rng, std::uint32_t p, double density) {
  ElementSet s(p);
  for (std::uint32_t x = 0; x < p; ++x)
    if (static_cast<double>(rng() % 1000) < 1000 * density) s.set(x);
  return s;
}

}  // namespace

TEST_CASE("power residues match direct enumeration") {
  const PrimeField f7(7);
  CHECK(power_residues(f7, 3).members() == std::vector<std::uint32_t>{1, 6});
  CHECK(power_residues(f7, 2).members() == std::vector<std::uint32_t>{1, 2, 4});
  const PrimeField f13(13);
  CHECK(power_residues(f13, 3).members() == std::vector<std::uint32_t>{1, 5, 8, 12});

  for (std::uint32_t p : {5u, 7u, 11u, 13u, 31u, 61u}) {
    const PrimeField field(p);
    for (std::uint64_t k : divisors_of(p - 1)) {
      if (k <= 1 || k >= p - 1) continue;
      const auto d = power_residues(field, static_cast<std::uint32_t>(k));
      const auto oracle = powers_oracle(p, static_cast<std::uint32_t>(k));
      CHECK(d.count() == (p - 1) / k);
      CHECK(std::set<std::uint32_t>(d.members().begin(), d.members().end()) == oracle);
    }
  }
}

TEST_CASE("power residues reject bad orders") {
  const PrimeField f13(13);
  CHECK_THROWS_AS(power_residues(f13, 5), BadOrder);
  CHECK_THROWS_AS(power_residues(f13, 1), BadOrder);
  CHECK_THROWS_AS(power_residues(f13, 12), BadOrder);
  CHECK_THROWS_AS(fk_table(f13, 5), BadOrder);
}

TEST_CASE("D_k is closed under multiplication by its own elements") {
  const PrimeField f(31);
  for (std::uint32_t k : {3u, 5u}) {
    const ElementSet d = power_residues(f, k);
    for (std::uint32_t c : d.members()) CHECK(d.scaled(c) == d);
  }
}

TEST_CASE("f_k table values and zero sum") {
  const PrimeField f7(7);
  const FkTable t = fk_table(f7, 3);
  CHECK(t.values[0] == 0);
  CHECK(t.values[1] == 2);
  CHECK(t.values[6] == 2);
  for (std::uint32_t x : {2u, 3u, 4u, 5u}) CHECK(t.values[x] == -1);

  const PrimeField f13(13);
  CHECK(fk_table(f13, 3).values[5] == 2);

  for (std::uint32_t p : {7u, 13u, 31u}) {
    const PrimeField field(p);
    for (std::uint64_t k : divisors_of(p - 1)) {
      if (k <= 1 || k >= p - 1) continue;
      const FkTable tab = fk_table(field, static_cast<std::uint32_t>(k));
      std::int64_t sum = 0;
      for (std::int64_t v : tab.values) sum += v;
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("f_k case-split equals the exact character-sum path") {
  // sum_{i=1..k-1} psi^i(x), accumulated in a counter, must equal the table
  // value as a rational integer, decided exactly.
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {13, 3}, {17, 2}, {31, 5}, {31, 6}}) {
    const PrimeField field(p);
    const FkTable tab = fk_table(field, k);
    for (std::uint32_t x = 0; x < p; ++x) {
      CyclotomicCounter counter(k);
      for (std::uint32_t i = 1; i < k; ++i) {
        const auto e = char_exponent(field, CharacterSpec{k, i}, x);
        if (e) counter.add(*e);
      }
      CHECK(counter.equals_integer(tab.values[x]));
    }
  }
}

TEST_CASE("sumset worked examples") {
  const ElementSet a = ElementSet::from_members(13, {0, 7});
  const ElementSet b = ElementSet::from_members(13, {1, 5});
  CHECK(sumset(a, b).members() == std::vector<std::uint32_t>{1, 5, 8, 12});

  const ElementSet zero = ElementSet::from_members(13, {0});
  CHECK(sumset(zero, b) == b);

  const ElementSet full = ElementSet::full(13);
  CHECK(sumset(full, b) == full);

  CHECK(sumset(ElementSet(13), b).empty());
  CHECK_THROWS_AS(sumset(ElementSet::from_members(7, {1}), b), UniverseMismatch);
}

TEST_CASE("sumset kernels agree with each other and the naive oracle") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {13u, 89u, 127u, 1009u}) {
    for (double density : {0.05, 0.3, 0.7}) {
      const ElementSet a = random_set(rng, p, density);
      const ElementSet b = random_set(rng, p, density / 2);
      if (a.empty() || b.empty()) continue;
      const ElementSet via_pairs = detail::sumset_pairwise(a, b);
      const ElementSet via_shift = detail::sumset_shift_or(a, b);
      CHECK(via_pairs == via_shift);
      CHECK(sumset(a, b) == via_pairs);

      std::set<std::uint32_t> oracle;
      for (std::uint32_t x : a.members())
        for (std::uint32_t y : b.members()) oracle.insert((x + y) % p);
      CHECK(std::set<std::uint32_t>(via_pairs.members().begin(), via_pairs.members().end()) ==
            oracle);
    }
  }
}

TEST_CASE("cyclic shift matches per-element remap") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {7u, 64u, 65u, 127u, 130u}) {
    const ElementSet s = random_set(rng, p, 0.4);
    for (std::uint32_t t : {0u, 1u, 13u, p - 1}) {
      ElementSet expect(p);
      for (std::uint32_t x : s.members()) expect.set((x + t) % p);
      CHECK(s.shifted(t) == expect);
    }
  }
}

TEST_CASE("scaling permutes indices") {
  const PrimeField f(13);
  const ElementSet d = power_residues(f, 3);
  ElementSet expect(13);
  for (std::uint32_t x : d.members()) expect.set(static_cast<std::uint32_t>(2ull * x % 13));
  CHECK(d.scaled(2) == expect);
  CHECK_THROWS_AS(d.scaled(0), DomainError);
  CHECK_THROWS_AS(d.scaled(13), DomainError);
}

TEST_CASE("representation counts") {
  const ElementSet a = ElementSet::from_members(13, {0, 7});
  const ElementSet b = ElementSet::from_members(13, {1, 5});
  const auto r = representation_counts(a, b);
  for (std::uint32_t x = 0; x < 13; ++x) {
    const bool in = x == 1 || x == 5 || x == 8 || x == 12;
    CHECK(r[x] == (in ? 1u : 0u));
  }

  const ElementSet single = ElementSet::from_members(13, {0});
  const auto rb = representation_counts(single, b);
  for (std::uint32_t x = 0; x < 13; ++x) CHECK(rb[x] == (b.test(x) ? 1u : 0u));

  const ElementSet ab7 = ElementSet::from_members(7, {0, 1});
  const auto r7 = representation_counts(ab7, ab7);
  CHECK(r7[0] == 1);
  CHECK(r7[1] == 2);
  CHECK(r7[2] == 1);
}

TEST_CASE("sumset equals the support of representation counts") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 20; ++iter) {
    const std::uint32_t p = 101;
    const ElementSet a = random_set(rng, p, 0.2);
    const ElementSet b = random_set(rng, p, 0.2);
    if (a.empty() || b.empty()) continue;
    const auto r = representation_counts(a, b);
    const ElementSet s = sumset(a, b);
    std::uint64_t total = 0;
    for (std::uint32_t x = 0; x < p; ++x) {
      CHECK(s.test(x) == (r[x] > 0));
      total += r[x];
    }
    CHECK(total == a.count() * b.count());
  }
}

TEST_CASE("element sets serialize as ascending member arrays") {
  const ElementSet d = ElementSet::from_members(13, {12, 1, 8, 5});
  CHECK(json_of(d).dump() == "[1,5,8,12]");
  CHECK(json_of(ElementSet(5)).dump() == "[]");
}
