#include "rlab/residue.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace rlab {

namespace {

constexpr std::uint32_t kWordBits = 64;

inline std::size_t word_count(std::uint32_t p) { return (p + kWordBits - 1) / kWordBits; }

// dst |= (src << s) over a p-bit integer; bits pushed past p are dropped.
void shl_or(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
            std::uint32_t s) {
  const std::size_t nw = dst.size();
  const std::size_t ws = s / kWordBits;
  const std::uint32_t bs = s % kWordBits;
  for (std::size_t i = 0; i + ws < nw; ++i) {
    const std::uint64_t v = src[i];
    if (v == 0) continue;
    dst[i + ws] |= v << bs;
    if (bs != 0 && i + ws + 1 < nw) dst[i + ws + 1] |= v >> (kWordBits - bs);
  }
}

// dst |= (src >> s); the bits below s vanish.
void shr_or(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
            std::uint32_t s) {
  const std::size_t nw = dst.size();
  const std::size_t ws = s / kWordBits;
  const std::uint32_t bs = s % kWordBits;
  for (std::size_t i = ws; i < nw; ++i) {
    const std::uint64_t v = src[i];
    if (v == 0) continue;
    dst[i - ws] |= v >> bs;
    if (bs != 0 && i - ws >= 1) dst[i - ws - 1] |= v << (kWordBits - bs);
  }
}

}  // namespace

ElementSet::ElementSet(std::uint32_t universe) : p_(universe), w_(word_count(universe), 0) {}

ElementSet ElementSet::from_members(std::uint32_t universe,
                                    std::initializer_list<std::uint32_t> xs) {
  ElementSet s(universe);
  for (std::uint32_t x : xs) s.set(x % universe);
  return s;
}

ElementSet ElementSet::from_members(std::uint32_t universe, const std::vector<std::uint32_t>& xs) {
  ElementSet s(universe);
  for (std::uint32_t x : xs) s.set(x % universe);
  return s;
}

ElementSet ElementSet::full(std::uint32_t universe) {
  ElementSet s(universe);
  for (auto& w : s.w_) w = ~std::uint64_t{0};
  s.mask_top();
  return s;
}

void ElementSet::mask_top() {
  const std::uint32_t tail = p_ % kWordBits;
  if (tail != 0 && !w_.empty()) w_.back() &= (std::uint64_t{1} << tail) - 1;
}

std::uint64_t ElementSet::count() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool ElementSet::empty() const {
  for (std::uint64_t w : w_)
    if (w != 0) return false;
  return true;
}

void ElementSet::clear() { std::fill(w_.begin(), w_.end(), 0); }

ElementSet& ElementSet::operator&=(const ElementSet& o) {
  if (o.p_ != p_) throw UniverseMismatch("element sets live over different p");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
  if (o.p_ != p_) throw UniverseMismatch("element sets live over different p");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
  if (o.p_ != p_) throw UniverseMismatch("element sets live over different p");
  for (std::size_t i = 0; i < w_.size(); ++i)
    if ((w_[i] & ~o.w_[i]) != 0) return false;
  return true;
}

void rotate_or_into(ElementSet& acc, const ElementSet& src, std::uint32_t t) {
  if (acc.p_ != src.p_) throw UniverseMismatch("element sets live over different p");
  t %= acc.p_;
  if (t == 0) {
    acc |= src;
    return;
  }
  shl_or(acc.w_, src.w_, t);
  shr_or(acc.w_, src.w_, acc.p_ - t);
  acc.mask_top();
}

ElementSet ElementSet::shifted(std::uint32_t t) const {
  ElementSet out(p_);
  rotate_or_into(out, *this, t);
  return out;
}

ElementSet ElementSet::scaled(std::uint32_t c) const {
  c %= p_;
  if (c == 0) throw DomainError("scaling factor must be invertible mod p");
  ElementSet out(p_);
  for (std::uint32_t x : members())
    out.set(static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * x % p_));
  return out;
}

std::uint32_t ElementSet::next_member(std::uint32_t from) const {
  if (from >= p_) return p_;
  std::size_t wi = from >> 6;
  std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w != 0) {
      std::uint32_t x = static_cast<std::uint32_t>(wi * kWordBits + std::countr_zero(w));
      return x < p_ ? x : p_;
    }
    if (++wi >= w_.size()) return p_;
    w = w_[wi];
  }
}

std::vector<std::uint32_t> ElementSet::members() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for (std::size_t wi = 0; wi < w_.size(); ++wi) {
    std::uint64_t w = w_[wi];
    while (w != 0) {
      out.push_back(static_cast<std::uint32_t>(wi * kWordBits + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

namespace detail {

ElementSet sumset_pairwise(const ElementSet& a, const ElementSet& b) {
  const std::uint32_t p = a.universe();
  ElementSet out(p);
  for (std::uint32_t x : a.members())
    for (std::uint32_t y : b.members()) {
      std::uint32_t s = x + y;
      out.set(s >= p ? s - p : s);
    }
  return out;
}

ElementSet sumset_shift_or(const ElementSet& a, const ElementSet& b) {
  // Drive by the smaller set: one word-level rotation of the other per member.
  const ElementSet& small = a.count() <= b.count() ? a : b;
  const ElementSet& large = a.count() <= b.count() ? b : a;
  ElementSet out(a.universe());
  for (std::uint32_t x : small.members()) rotate_or_into(out, large, x);
  return out;
}

}  // namespace detail

ElementSet sumset(const ElementSet& a, const ElementSet& b) {
  if (a.universe() != b.universe()) throw UniverseMismatch("sumset over different p");
  const std::uint64_t ca = a.count(), cb = b.count();
  if (ca == 0 || cb == 0) return ElementSet(a.universe());
  if (ca * cb <= 64) return detail::sumset_pairwise(a, b);
  return detail::sumset_shift_or(a, b);
}

std::vector<std::uint64_t> representation_counts(const ElementSet& a, const ElementSet& b) {
  if (a.universe() != b.universe()) throw UniverseMismatch("representation counts over different p");
  const std::uint32_t p = a.universe();
  std::vector<std::uint64_t> r(p, 0);
  const auto bs = b.members();
  for (std::uint32_t x : a.members())
    for (std::uint32_t y : bs) {
      std::uint32_t s = x + y;
      ++r[s >= p ? s - p : s];
    }
  return r;
}

ElementSet power_residues(const PrimeField& field, std::uint32_t k) {
  const std::uint32_t p = field.p();
  if (k <= 1 || k >= p - 1 || (p - 1) % k != 0)
    throw BadOrder("k must divide p-1 with 1 < k < p-1 (got k = " + std::to_string(k) + ")");
  ElementSet d(p);
  for (std::uint32_t x = 1; x < p; ++x)
    if (field.index_of(x) % k == 0) d.set(x);
  return d;
}

FkTable fk_table(const PrimeField& field, std::uint32_t k) {
  const ElementSet d = power_residues(field, k);
  FkTable t;
  t.p = field.p();
  t.k = k;
  t.values.assign(t.p, -1);
  t.values[0] = 0;
  for (std::uint32_t x : d.members()) t.values[x] = static_cast<std::int64_t>(k) - 1;
  return t;
}

}  // namespace rlab
