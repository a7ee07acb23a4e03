#include "rlab/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>

#include "rlab/numeric.hpp"
#include "rlab/parallel.hpp"

namespace rlab {

namespace {

using MemberPair = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;

// ---------------------------------------------------------------------------
// General mode: branch on the first part in increasing element order, keeping
// the viability set Bmax(A) = intersection of (T - a) as a bit vector. A found
// pair is completed by enumerating every covering subset of Bmax containing 0.
// The swap symmetry lets the search stop at |A| <= |B|: every orbit has a
// representative of that shape, so requiring |Bmax| >= |A| is a sound prune
// and is what keeps the tree polynomial-ish at the p <= 128 ceiling.
// ---------------------------------------------------------------------------
struct GeneralSearch {
  const ElementSet& target;
  std::uint32_t p;
  std::vector<std::uint32_t> tm;           // target members, ascending
  std::vector<ElementSet> shifted_target;  // shifted_target[i] = target - tm[i]
  std::uint64_t tsize;

  std::vector<MemberPair> found;
  std::uint64_t nodes = 0;

  explicit GeneralSearch(const ElementSet& t)
      : target(t), p(t.universe()), tm(t.members()), tsize(t.count()) {
    shifted_target.reserve(tm.size());
    for (std::uint32_t x : tm) shifted_target.push_back(target.shifted(p - x % p));
  }

  void run_root(std::size_t i, std::size_t j) {
    ElementSet bmax = shifted_target[i] & shifted_target[j];
    std::vector<std::uint32_t> a{tm[i], tm[j]};
    extend(a, bmax, j + 1);
  }

  void extend(std::vector<std::uint32_t>& a, const ElementSet& bmax, std::size_t next_start) {
    ++nodes;
    const std::uint64_t bcnt = bmax.count();
    if (bcnt < std::max<std::uint64_t>(2, a.size())) return;

    ElementSet cov(p);
    for (std::uint32_t x : a) rotate_or_into(cov, bmax, x);
    if (cov == target) enumerate_b(a, bmax);

    // Feasibility of any extension: future elements of A come from the target
    // members past next_start, and B stays inside the current Bmax.
    std::size_t future = tm.size() - next_start;
    if ((a.size() + future) * bcnt < tsize) return;
    ElementSet covf = cov;
    for (std::size_t idx = next_start; idx < tm.size(); ++idx)
      rotate_or_into(covf, bmax, tm[idx]);
    if (!target.is_subset_of(covf)) return;

    for (std::size_t idx = next_start; idx < tm.size(); ++idx) {
      ElementSet child = bmax & shifted_target[idx];
      if (child.count() < std::max<std::uint64_t>(2, a.size() + 1)) continue;
      a.push_back(tm[idx]);
      extend(a, child, idx + 1);
      a.pop_back();
    }
  }

  void enumerate_b(const std::vector<std::uint32_t>& a, const ElementSet& bmax) {
    if (!bmax.test(0)) return;  // canonical form needs 0 in B
    const ElementSet a_bits = ElementSet::from_members(p, a);
    std::vector<std::uint32_t> bm = bmax.members();  // bm[0] == 0
    std::vector<std::uint32_t> chosen{0};
    ElementSet covered = a_bits;
    descend_b(a, a_bits, bm, chosen, covered, 1);
  }

  void descend_b(const std::vector<std::uint32_t>& a, const ElementSet& a_bits,
                 const std::vector<std::uint32_t>& bm, std::vector<std::uint32_t>& chosen,
                 const ElementSet& covered, std::size_t start) {
    if (covered == target && chosen.size() >= std::max<std::size_t>(2, a.size()))
      found.emplace_back(a, chosen);
    ElementSet rest = covered;
    for (std::size_t i = start; i < bm.size(); ++i) rotate_or_into(rest, a_bits, bm[i]);
    if (!target.is_subset_of(rest)) return;
    for (std::size_t i = start; i < bm.size(); ++i) {
      ElementSet next = covered;
      rotate_or_into(next, a_bits, bm[i]);
      chosen.push_back(bm[i]);
      descend_b(a, a_bits, bm, chosen, next, i + 1);
      chosen.pop_back();
    }
  }
};

// ---------------------------------------------------------------------------
// Perfect mode: exact-cover search. The state carries both partial parts and
// branches on who covers the least uncovered element of the target; every
// addition must cover fresh cells only. This is the cover-exactly-once
// formulation, and the disjointness is what makes the deep levels collapse.
// ---------------------------------------------------------------------------
struct PerfectSearch {
  const ElementSet& target;
  std::uint32_t p;
  std::uint64_t tsize;
  std::vector<std::uint64_t> divisors;

  std::vector<MemberPair> found;
  std::uint64_t nodes = 0;

  std::vector<std::uint32_t> a_members, b_members;
  ElementSet a_bits, b_bits, cand_a, cand_b, covered;

  explicit PerfectSearch(const ElementSet& t)
      : target(t), p(t.universe()), tsize(t.count()), divisors(divisors_of(tsize)) {
    a_bits = ElementSet(p);
    b_bits = ElementSet(p);
    b_bits.set(0);
    b_members = {0};
    cand_a = target;   // 0 in B forces A inside the target
    cand_b = ElementSet::full(p);
    cand_b.reset(0);
    covered = ElementSet(p);
  }

  struct Branch {
    bool add_to_a;    // false: add element to B
    bool both;        // add a to A and then b to B in one step
    std::uint32_t a = 0, b = 0;
  };

  std::vector<Branch> branches_at(std::uint32_t m) const {
    std::vector<Branch> out;
    for (std::uint32_t a : a_members) {
      const std::uint32_t b = a <= m ? m - a : m + p - a;
      if (cand_b.test(b)) out.push_back({false, false, a, b});
    }
    for (std::uint32_t b : b_members) {
      const std::uint32_t a = b <= m ? m - b : m + p - b;
      if (cand_a.test(a)) out.push_back({true, false, a, b});
    }
    for (std::uint32_t a : cand_a.members()) {
      const std::uint32_t b = a <= m ? m - a : m + p - a;
      if (cand_b.test(b)) out.push_back({true, true, a, b});
    }
    return out;
  }

  // Applies one addition if its translate is disjoint from the covered cells;
  // returns false (state untouched) otherwise.
  bool try_add_a(std::uint32_t a, ElementSet& saved_cand_b, ElementSet& saved_covered) {
    ElementSet translate(p);
    rotate_or_into(translate, b_bits, a);
    ElementSet overlap = translate & covered;
    if (!overlap.empty()) return false;
    saved_covered = covered;
    covered |= translate;
    saved_cand_b = cand_b;
    cand_b &= target.shifted(p - a);
    cand_a.reset(a);
    a_bits.set(a);
    a_members.push_back(a);
    return true;
  }

  void undo_add_a(std::uint32_t a, const ElementSet& saved_cand_b,
                  const ElementSet& saved_covered) {
    a_members.pop_back();
    a_bits.reset(a);
    cand_a.set(a);
    cand_b = saved_cand_b;
    covered = saved_covered;
  }

  bool try_add_b(std::uint32_t b, ElementSet& saved_cand_a, ElementSet& saved_covered) {
    ElementSet translate(p);
    rotate_or_into(translate, a_bits, b);
    ElementSet overlap = translate & covered;
    if (!overlap.empty()) return false;
    saved_covered = covered;
    covered |= translate;
    saved_cand_a = cand_a;
    cand_a &= target.shifted(p - b);
    cand_b.reset(b);
    b_bits.set(b);
    b_members.push_back(b);
    return true;
  }

  void undo_add_b(std::uint32_t b, const ElementSet& saved_cand_a,
                  const ElementSet& saved_covered) {
    b_members.pop_back();
    b_bits.reset(b);
    cand_b.set(b);
    cand_a = saved_cand_a;
    covered = saved_covered;
  }

  bool size_window_open() const {
    const std::uint64_t amax = a_members.size() + cand_a.count();
    const std::uint64_t bmax = b_members.size() + cand_b.count();
    if (amax * bmax < tsize) return false;
    for (std::uint64_t d : divisors) {
      const std::uint64_t cof = tsize / d;
      if (d >= std::max<std::uint64_t>(2, a_members.size()) && d <= amax &&
          cof >= std::max<std::uint64_t>(2, b_members.size()) && cof <= bmax)
        return true;
    }
    return false;
  }

  void search() {
    ++nodes;
    if (covered == target) {
      if (a_members.size() >= 2 && b_members.size() >= 2) {
        auto a = a_members;
        auto b = b_members;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        found.emplace_back(std::move(a), std::move(b));
      }
      return;  // perfect covers cannot extend: anything more would double-cover
    }
    if (!size_window_open()) return;

    const std::uint32_t m = first_uncovered();
    if (m >= p) return;
    for (const Branch& br : branches_at(m)) apply_branch(br);
  }

  std::uint32_t first_uncovered() const {
    const auto& tw = target.words();
    const auto& cw = covered.words();
    for (std::size_t i = 0; i < tw.size(); ++i) {
      const std::uint64_t w = tw[i] & ~cw[i];
      if (w != 0) {
        const std::uint32_t x = static_cast<std::uint32_t>(i * 64 + std::countr_zero(w));
        return x < p ? x : p;
      }
    }
    return p;
  }

  void apply_branch(const Branch& br) {
    ElementSet saved_pool, saved_cov;
    if (!br.add_to_a) {
      if (try_add_b(br.b, saved_pool, saved_cov)) {
        search();
        undo_add_b(br.b, saved_pool, saved_cov);
      }
      return;
    }
    if (!try_add_a(br.a, saved_pool, saved_cov)) return;
    if (br.both) {
      ElementSet saved_pool2, saved_cov2;
      if (cand_b.test(br.b) && try_add_b(br.b, saved_pool2, saved_cov2)) {
        search();
        undo_add_b(br.b, saved_pool2, saved_cov2);
      }
    } else {
      search();
    }
    undo_add_a(br.a, saved_pool, saved_cov);
  }
};

// Canonical orbit representative: among all symmetric images with 0 in the
// second part, the one minimizing (|A|, A ascending, B ascending).
struct CanonKey {
  std::vector<std::uint32_t> a, b;
  bool operator<(const CanonKey& o) const {
    if (a.size() != o.a.size()) return a.size() < o.a.size();
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
  bool operator==(const CanonKey& o) const = default;
};

std::vector<std::uint32_t> map_members(std::uint32_t p, const std::vector<std::uint32_t>& xs,
                                       std::uint32_t shift, std::uint32_t scale) {
  std::vector<std::uint32_t> out;
  out.reserve(xs.size());
  for (std::uint32_t x : xs) {
    const std::uint64_t v = (static_cast<std::uint64_t>(x) + shift) % p * scale % p;
    out.push_back(static_cast<std::uint32_t>(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CanonKey canonical_key(std::uint32_t p, const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b,
                       const std::vector<std::uint32_t>& scalings) {
  CanonKey best;
  bool have = false;
  auto consider = [&](const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y,
                      std::uint32_t t, std::uint32_t c) {
    CanonKey key{map_members(p, x, t, c), map_members(p, y, p - t % p, c)};
    if (!have || key < best) {
      best = std::move(key);
      have = true;
    }
  };
  for (std::uint32_t c : scalings) {
    for (std::uint32_t t : b) consider(a, b, t, c);   // shift by t in B puts 0 into B-t
    for (std::uint32_t s : a) consider(b, a, s, c);   // swapped representative
  }
  return best;
}

}  // namespace

std::vector<MemberPair> orbit_images(std::uint32_t p, const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b,
                                     const std::vector<std::uint32_t>& scalings) {
  std::set<MemberPair> images;
  for (std::uint32_t c : scalings) {
    for (std::uint32_t t : b)
      images.insert({map_members(p, a, t, c), map_members(p, b, p - t % p, c)});
    for (std::uint32_t s : a)
      images.insert({map_members(p, b, s, c), map_members(p, a, p - s % p, c)});
  }
  return {images.begin(), images.end()};
}

namespace detail {

std::vector<MemberPair> two_part_search_general(const ElementSet& target, std::uint64_t& nodes) {
  GeneralSearch search(target);
  for (std::size_t i = 0; i < search.tm.size(); ++i)
    for (std::size_t j = i + 1; j < search.tm.size(); ++j) search.run_root(i, j);
  nodes += search.nodes;
  return search.found;
}

}  // namespace detail

SearchReport enumerate_2_decompositions(const PrimeField& field, std::uint32_t k, SearchMode mode,
                                        unsigned jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint32_t p = field.p();
  if (mode == SearchMode::general && p > 128)
    throw CeilingExceeded("general-mode search is capped at p = 128");
  if (mode == SearchMode::perfect && p > 4096)
    throw CeilingExceeded("perfect-mode search is capped at p = 4096");

  const ElementSet d = power_residues(field, k);

  SearchReport report;
  report.p = p;
  report.k = k;
  report.mode = mode;
  report.trivial_count = d.count();

  std::vector<MemberPair> raw;
  if (mode == SearchMode::general) {
    GeneralSearch proto(d);
    const std::size_t n = proto.tm.size();
    std::vector<std::pair<std::size_t, std::size_t>> roots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) roots.emplace_back(i, j);

    std::vector<std::vector<MemberPair>> slot_found(roots.size());
    std::vector<std::uint64_t> slot_nodes(roots.size(), 0);
    run_tasks(roots.size(), jobs, [&](std::size_t idx) {
      GeneralSearch s(d);
      s.run_root(roots[idx].first, roots[idx].second);
      slot_found[idx] = std::move(s.found);
      slot_nodes[idx] = s.nodes;
    });
    for (std::size_t idx = 0; idx < roots.size(); ++idx) {
      report.nodes += slot_nodes[idx];
      for (auto& mp : slot_found[idx]) raw.push_back(std::move(mp));
    }
  } else {
    PerfectSearch root(d);
    const std::uint32_t m = root.first_uncovered();
    const auto branches = root.branches_at(m);
    std::vector<std::vector<MemberPair>> slot_found(branches.size());
    std::vector<std::uint64_t> slot_nodes(branches.size(), 0);
    run_tasks(branches.size(), jobs, [&](std::size_t idx) {
      PerfectSearch s(d);
      ++s.nodes;  // the shared root node, counted once per subtree for determinism
      s.apply_branch(branches[idx]);
      slot_found[idx] = std::move(s.found);
      slot_nodes[idx] = s.nodes - 1;
    });
    report.nodes = 1;
    for (std::size_t idx = 0; idx < branches.size(); ++idx) {
      report.nodes += slot_nodes[idx];
      for (auto& mp : slot_found[idx]) raw.push_back(std::move(mp));
    }
  }

  const std::vector<std::uint32_t> scalings = d.members();
  std::map<CanonKey, bool> orbits;
  for (const auto& [a, b] : raw) orbits.emplace(canonical_key(p, a, b, scalings), true);

  for (const auto& [key, _] : orbits) {
    Decomposition dec;
    dec.A = ElementSet::from_members(p, key.a);
    dec.B = ElementSet::from_members(p, key.b);
    dec.canonical = true;
    dec.rigidity = verify_rigidity(field, k, dec.A, dec.B);
    report.orbits.push_back(std::move(dec));
  }

  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  return report;
}

std::vector<std::uint32_t> search_b2(const PrimeField& field, std::uint32_t k, unsigned jobs) {
  const std::uint32_t p = field.p();
  if (p > 1'000'000) throw CeilingExceeded("the shift scan is capped at p = 10^6");
  const ElementSet d = power_residues(field, k);

  const unsigned chunks = jobs <= 1 ? 1 : jobs;
  std::vector<std::vector<std::uint32_t>> hits(chunks);
  run_tasks(chunks, jobs, [&](std::size_t ci) {
    const std::uint32_t lo = 1 + static_cast<std::uint32_t>((p - 1) * ci / chunks);
    const std::uint32_t hi = 1 + static_cast<std::uint32_t>((p - 1) * (ci + 1) / chunks);
    ElementSet a(p), cov(p);
    for (std::uint32_t t = lo; t < hi; ++t) {
      a.clear();
      rotate_or_into(a, d, p - t);  // D - t
      a &= d;
      if (a.count() < 2) continue;
      cov.clear();
      cov |= a;
      rotate_or_into(cov, a, t);
      if (cov == d) hits[ci].push_back(t);
    }
  });

  std::vector<std::uint32_t> out;
  for (auto& h : hits) out.insert(out.end(), h.begin(), h.end());
  std::sort(out.begin(), out.end());
  return out;
}

RigidityCertificate verify_rigidity(const PrimeField& field, std::uint32_t k, const ElementSet& a,
                                    const ElementSet& b) {
  const ElementSet d = power_residues(field, k);
  if (a.universe() != d.universe() || b.universe() != d.universe())
    throw UniverseMismatch("decomposition parts live over a different p");
  if (a.count() < 2 || b.count() < 2)
    throw NotADecomposition("trivial pair: both parts need at least 2 elements");
  if (sumset(a, b) != d) throw NotADecomposition("A + B does not equal D_k");

  RigidityCertificate cert;
  cert.sizes_product = a.count() * b.count();
  cert.sizes_ok = cert.sizes_product == d.count();
  cert.unique_rep = true;
  const auto reps = representation_counts(a, b);
  for (std::uint32_t x = 0; x < field.p(); ++x) {
    const std::uint64_t want = d.test(x) ? 1 : 0;
    if (reps[x] != want) {
      cert.unique_rep = false;
      break;
    }
  }
  return cert;
}

namespace {

// Anchored search for A + A = D: branch on the pairs that can cover the least
// uncovered element. Candidates live in {x : 2x in D} and shrink by D - a on
// every addition.
struct DoubleSearch {
  const ElementSet& d;
  std::uint32_t p;
  std::optional<std::vector<std::uint32_t>> witness;

  std::vector<std::uint32_t> members;
  ElementSet bits, cand, covered;

  DoubleSearch(const ElementSet& target, const ElementSet& halved)
      : d(target), p(target.universe()), bits(p), cand(halved), covered(p) {}

  std::uint32_t first_uncovered() const {
    const auto& tw = d.words();
    const auto& cw = covered.words();
    for (std::size_t i = 0; i < tw.size(); ++i) {
      const std::uint64_t w = tw[i] & ~cw[i];
      if (w != 0) {
        const std::uint32_t x = static_cast<std::uint32_t>(i * 64 + std::countr_zero(w));
        return x < p ? x : p;
      }
    }
    return p;
  }

  bool add(std::uint32_t a, ElementSet& saved_cand, ElementSet& saved_cov) {
    saved_cov = covered;
    saved_cand = cand;
    bits.set(a);
    members.push_back(a);
    rotate_or_into(covered, bits, a);  // new sums a + (A including a)
    cand &= d.shifted(p - a);
    cand.reset(a);
    return true;
  }

  void undo(std::uint32_t a, const ElementSet& saved_cand, const ElementSet& saved_cov) {
    members.pop_back();
    bits.reset(a);
    cand = saved_cand;
    covered = saved_cov;
  }

  bool search() {
    if (covered == d) {
      if (members.size() >= 2) {
        witness = members;
        std::sort(witness->begin(), witness->end());
        return true;
      }
      return false;
    }
    const std::uint64_t n = members.size() + cand.count();
    if (n * (n + 1) / 2 < d.count()) return false;
    const std::uint32_t m = first_uncovered();
    if (m >= p) return false;

    // who covers m: a chosen x with a new partner, or two fresh candidates
    for (std::uint32_t x : members) {
      const std::uint32_t y = x <= m ? m - x : m + p - x;
      if (!cand.test(y)) continue;
      ElementSet sc, sv;
      add(y, sc, sv);
      if (search()) return true;
      undo(y, sc, sv);
    }
    for (std::uint32_t x : cand.members()) {
      const std::uint32_t y = x <= m ? m - x : m + p - x;
      if (y < x) continue;  // unordered pair, visit once
      if (!cand.test(y)) continue;
      ElementSet sc1, sv1;
      add(x, sc1, sv1);
      if (x == y) {
        if (search()) return true;
      } else if (cand.test(y)) {
        ElementSet sc2, sv2;
        add(y, sc2, sv2);
        if (search()) return true;
        undo(y, sc2, sv2);
      }
      undo(x, sc1, sv1);
    }
    return false;
  }
};

}  // namespace

std::optional<ElementSet> search_aa(const PrimeField& field, std::uint32_t k, unsigned jobs) {
  const std::uint32_t p = field.p();
  if (p > 128) throw CeilingExceeded("the A+A search is capped at p = 128");
  const ElementSet d = power_residues(field, k);
  const ElementSet halved = d.scaled(field.inverse(2));  // {x : 2x in D}

  (void)jobs;  // the anchored tree is small enough that one worker always wins
  DoubleSearch s(d, halved);
  if (s.search()) return ElementSet::from_members(p, *s.witness);
  return std::nullopt;
}

ThreePartReport search_3_decompositions(const PrimeField& field, std::uint32_t k, unsigned jobs) {
  const std::uint32_t p = field.p();
  if (p > 128) throw CeilingExceeded("the 3-part search is capped at p = 128");
  const ElementSet d = power_residues(field, k);

  ThreePartReport report;
  report.p = p;
  report.k = k;

  const SearchReport two = enumerate_2_decompositions(field, k, SearchMode::general, jobs);
  report.nodes = two.nodes;

  for (const Decomposition& dec : two.orbits) {
    for (const ElementSet* parts : {&dec.A, &dec.B}) {
      const ElementSet& first = parts == &dec.A ? dec.B : dec.A;
      const ElementSet& rest = *parts;
      const auto splits = detail::two_part_search_general(rest, report.nodes);
      for (const auto& [bm, cm] : splits) {
        TripleDecomposition triple{first, ElementSet::from_members(p, bm),
                                   ElementSet::from_members(p, cm)};
        if (sumset(sumset(triple.A, triple.B), triple.C) == d)
          report.triples.push_back(std::move(triple));
      }
    }
  }
  return report;
}

RuzsaReport ruzsa_triple_check(const ElementSet& a, const ElementSet& b, const ElementSet& c) {
  if (a.empty() || b.empty() || c.empty()) throw EmptyInput("all three sets must be nonempty");
  const ElementSet ab = sumset(a, b);
  const ElementSet bc = sumset(b, c);
  const ElementSet ca = sumset(c, a);
  const std::uint64_t abc = sumset(ab, c).count();

  RuzsaReport rep;
  rep.lhs = abc * abc;
  rep.rhs = ab.count() * bc.count() * ca.count();
  rep.holds = rep.lhs <= rep.rhs;
  return rep;
}

BoundsReport thresholds_and_bounds(std::uint64_t p, std::uint32_t k) {
  BoundsReport rep;
  rep.p = p;
  rep.k = k;

  const auto check_u64 = [](unsigned __int128 v) -> std::uint64_t {
    if (v > static_cast<unsigned __int128>(UINT64_MAX))
      throw Overflow("threshold exceeds 64 bits; k is too large for the calculators");
    return static_cast<std::uint64_t>(v);
  };
  const unsigned __int128 k2 = static_cast<unsigned __int128>(k) * k;
  const unsigned __int128 w = static_cast<unsigned __int128>(3) * k + 8;
  rep.window_threshold = check_u64(static_cast<unsigned __int128>(42 * 42) * k2 * w * w);
  rep.window_applicable = p > rep.window_threshold;
  rep.triple_threshold = check_u64(static_cast<unsigned __int128>(217 * 217) * k2 * k2);
  rep.triple_applicable = p > rep.triple_threshold;
  rep.b2_threshold = check_u64(static_cast<unsigned __int128>(16) * k2);
  rep.b2_applicable = p > rep.b2_threshold;

  const double pd = static_cast<double>(p);
  const double sp = std::sqrt(pd);
  const double kd = static_cast<double>(k);
  rep.window_lo = sp / (6.0 * kd);
  rep.window_hi = 6.0 * sp;

  rep.discriminant = (pd - 1.0) * (pd - 1.0) - 12.0 * kd * sp * (8.0 * pd + 3.0 * kd * sp);
  rep.discriminant_positive = rep.discriminant > 0.0;

  // radicand clamps at zero for the tiny p where (k^2-3) p < k^2
  const double radicand = ((kd * kd - 3.0) * pd - kd * kd) / (kd * kd * (kd - 1.0) * sp);
  rep.min_size_bound = radicand > 0.0 ? std::sqrt(radicand) : 0.0;

  rep.k2_windows_valid = (k == 2);
  if (rep.k2_windows_valid) {
    const double lp = std::log(pd);
    rep.sarkozy_lo = sp / (3.0 * lp);
    rep.sarkozy_hi = sp * lp;
    const double s17 = std::sqrt(17.0);
    rep.chen_yan_lo = (7.0 - s17) / 6.0 * sp + 1.0;
    rep.chen_yan_hi = (7.0 + s17) / 4.0 * sp - 6.63;
    rep.chen_xi_lo = sp / 4.0 + 0.125;
    rep.chen_xi_hi = 2.0 * sp - 1.0;
  }
  return rep;
}

}  // namespace rlab
