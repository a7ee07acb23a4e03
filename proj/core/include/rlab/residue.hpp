#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "rlab/errors.hpp"
#include "rlab/field.hpp"

namespace rlab {

/// Subset of F_p stored as a p-bit vector. Value type, cheap to copy at the
/// p this library works with; all operations preserve the universe size.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::uint32_t universe);
  static ElementSet from_members(std::uint32_t universe, std::initializer_list<std::uint32_t> xs);
  static ElementSet from_members(std::uint32_t universe, const std::vector<std::uint32_t>& xs);
  static ElementSet full(std::uint32_t universe);

  std::uint32_t universe() const { return p_; }
  bool test(std::uint32_t x) const { return (w_[x >> 6] >> (x & 63)) & 1; }
  void set(std::uint32_t x) { w_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void reset(std::uint32_t x) { w_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
  std::uint64_t count() const;
  bool empty() const;
  void clear();

  ElementSet& operator&=(const ElementSet& o);
  ElementSet& operator|=(const ElementSet& o);
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  bool operator==(const ElementSet& o) const = default;
  bool is_subset_of(const ElementSet& o) const;

  /// Cyclic shift: x in result iff x - t (mod p) in *this.
  ElementSet shifted(std::uint32_t t) const;
  /// Index remap x -> c*x mod p; requires c != 0 mod p.
  ElementSet scaled(std::uint32_t c) const;
  /// First member >= from, or universe() when none.
  std::uint32_t next_member(std::uint32_t from) const;

  std::vector<std::uint32_t> members() const;

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::uint32_t p_ = 0;
  std::vector<std::uint64_t> w_;
  void mask_top();
  friend void rotate_or_into(ElementSet& acc, const ElementSet& src, std::uint32_t t);
};

/// acc |= src.shifted(t), without allocating a temporary.
void rotate_or_into(ElementSet& acc, const ElementSet& src, std::uint32_t t);

/// {a+b mod p : a in A, b in B}. Small products are enumerated pairwise, large
/// ones go through the word-level shift-or kernel driven by the smaller set.
ElementSet sumset(const ElementSet& a, const ElementSet& b);

/// r[x] = #{(a,b) in A x B : a+b = x mod p}; sum of r equals |A|*|B|.
std::vector<std::uint64_t> representation_counts(const ElementSet& a, const ElementSet& b);

namespace detail {
ElementSet sumset_pairwise(const ElementSet& a, const ElementSet& b);
ElementSet sumset_shift_or(const ElementSet& a, const ElementSet& b);
}  // namespace detail

/// The set D_k of k-th power residues; requires k | p-1 and 1 < k < p-1.
ElementSet power_residues(const PrimeField& field, std::uint32_t k);

/// Integer table of f_k over F_p: k-1 on D_k, 0 at 0, -1 elsewhere.
struct FkTable {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::vector<std::int64_t> values;
};

FkTable fk_table(const PrimeField& field, std::uint32_t k);

}  // namespace rlab
