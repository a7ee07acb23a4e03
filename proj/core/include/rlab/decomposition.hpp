#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "rlab/field.hpp"
#include "rlab/residue.hpp"

namespace rlab {

/// Certificate attached to every decomposition a search emits: the size
/// product against |D_k| and the exactly-once representation property.
struct RigidityCertificate {
  std::uint64_t sizes_product = 0;
  bool sizes_ok = false;
  bool unique_rep = false;
  bool ok() const { return sizes_ok && unique_rep; }
};

/// A pair with sumset(A, B) equal to the target set, canonicalized so that
/// 0 is in B (hence A lies inside the target).
struct Decomposition {
  ElementSet A;
  ElementSet B;
  bool canonical = false;
  RigidityCertificate rigidity;
};

enum class SearchMode { general, perfect };

struct SearchReport {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  SearchMode mode = SearchMode::general;
  std::vector<Decomposition> orbits;  // one canonical representative per symmetry orbit
  std::uint64_t trivial_count = 0;    // singleton decompositions, counted but not listed
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Exhaustive search for non-trivial A + B = D_k, up to shift, scaling by
/// elements of D_k, and swap. General mode assumes nothing and is the oracle;
/// perfect mode requires every element covered exactly once and exists for
/// speed. Ceilings: p <= 128 (general), p <= 4096 (perfect).
SearchReport enumerate_2_decompositions(const PrimeField& field, std::uint32_t k, SearchMode mode,
                                        unsigned jobs = 1);

/// All t for which {0, t} completes a decomposition A + {0,t} = D_k with
/// |A| >= 2. One pass of word-level set algebra per shift; p <= 10^6.
std::vector<std::uint32_t> search_b2(const PrimeField& field, std::uint32_t k, unsigned jobs = 1);

/// Checks sumset(A,B) == D_k and produces the certificate. Trivial pairs and
/// non-decompositions are rejected with NotADecomposition.
RigidityCertificate verify_rigidity(const PrimeField& field, std::uint32_t k, const ElementSet& a,
                                    const ElementSet& b);

/// Witness A with A + A = D_k and |A| >= 2, if one exists; p <= 128.
std::optional<ElementSet> search_aa(const PrimeField& field, std::uint32_t k, unsigned jobs = 1);

struct TripleDecomposition {
  ElementSet A;
  ElementSet B;
  ElementSet C;
};

struct ThreePartReport {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::vector<TripleDecomposition> triples;
  std::uint64_t nodes = 0;
};

/// Searches D_k = A + B + C with all three parts of size >= 2 by splitting the
/// parts of every 2-decomposition; every reported triple is re-verified by a
/// direct triple sumset. p <= 128.
ThreePartReport search_3_decompositions(const PrimeField& field, std::uint32_t k,
                                        unsigned jobs = 1);

struct RuzsaReport {
  std::uint64_t lhs = 0;  // |A+B+C|^2
  std::uint64_t rhs = 0;  // |A+B| |B+C| |C+A|
  bool holds = false;
};

/// |A+B+C|^2 <= |A+B| |B+C| |C+A|; throws EmptyInput on empty sets.
RuzsaReport ruzsa_triple_check(const ElementSet& a, const ElementSet& b, const ElementSet& c);

/// Every explicit threshold and size window this library knows, evaluated
/// numerically at (p, k). The historical windows only apply to k = 2.
struct BoundsReport {
  std::uint64_t p = 0;
  std::uint32_t k = 0;

  std::uint64_t window_threshold = 0;  // 42^2 k^2 (3k+8)^2
  bool window_applicable = false;      // p above that threshold
  double window_lo = 0.0;              // sqrt(p)/(6k)
  double window_hi = 0.0;              // 6 sqrt(p)

  std::uint64_t triple_threshold = 0;  // 217^2 k^4, no 3-part decompositions above it
  bool triple_applicable = false;

  std::uint64_t b2_threshold = 0;  // 16 k^2, no |B| = 2 decompositions above it
  bool b2_applicable = false;

  double discriminant = 0.0;  // (p-1)^2 - 12 k sqrt(p) (8p + 3k sqrt(p))
  bool discriminant_positive = false;

  double min_size_bound = 0.0;  // sqrt(((k^2-3)p - k^2) / (k^2 (k-1) sqrt(p)))

  bool k2_windows_valid = false;  // the three windows below require k = 2
  double sarkozy_lo = 0.0, sarkozy_hi = 0.0;    // sqrt(p)/(3 ln p) .. sqrt(p) ln p
  double chen_yan_lo = 0.0, chen_yan_hi = 0.0;  // (7-sqrt17)/6 sqrt(p)+1 .. (7+sqrt17)/4 sqrt(p)-6.63
  double chen_xi_lo = 0.0, chen_xi_hi = 0.0;    // sqrt(p)/4+1/8 .. 2 sqrt(p)-1
};

BoundsReport thresholds_and_bounds(std::uint64_t p, std::uint32_t k);

/// Every symmetric image of (A, B) that is in canonical form (0 in the second
/// part): shifts by elements of B, swapped shifts by elements of A, then the
/// given scalings. Sorted and deduplicated; pass {1} when scaling is not a
/// symmetry of the target.
std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> orbit_images(
    std::uint32_t p, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
    const std::vector<std::uint32_t>& scalings);

namespace detail {
/// Two-part search against an arbitrary target set (0 canonicalized into the
/// second part). Used by the top-level search with target D_k and by the
/// 3-part search when splitting a part. Scalings are only a symmetry of D_k
/// itself, so orbit reduction under scaling is optional.
std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>>
two_part_search_general(const ElementSet& target, std::uint64_t& nodes);
}  // namespace detail

}  // namespace rlab
