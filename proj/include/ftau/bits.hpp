#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace ftau {

// Bit set over outcome indices 0..n-1. A single machine word holds universes
// of up to 64 outcomes; larger universes spill into a word array. Every set
// operation reduces to word-parallel AND/OR/NOT plus popcount.
//
// Invariant: bits at positions >= n are always zero.
class Bits {
 public:
  static constexpr std::size_t kWordBits = 64;

  Bits() = default;

  explicit Bits(std::size_t nbits) : n_(nbits) {
    if (n_ > kWordBits) ext_.assign(word_count(), 0);
  }

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const {
    return (words()[i / kWordBits] >> (i % kWordBits)) & 1u;
  }

  void set(std::size_t i) { words()[i / kWordBits] |= 1ull << (i % kWordBits); }

  void reset(std::size_t i) {
    words()[i / kWordBits] &= ~(1ull << (i % kWordBits));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words()) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (std::uint64_t w : words())
      if (w != 0) return true;
    return false;
  }

  bool none() const { return !any(); }

  bool full() const { return count() == n_; }

  Bits operator&(const Bits& o) const {
    Bits r = with_same_width(o);
    auto rw = r.words();
    auto ow = o.words();
    for (std::size_t i = 0; i < rw.size(); ++i) rw[i] &= ow[i];
    return r;
  }

  Bits operator|(const Bits& o) const {
    Bits r = with_same_width(o);
    auto rw = r.words();
    auto ow = o.words();
    for (std::size_t i = 0; i < rw.size(); ++i) rw[i] |= ow[i];
    return r;
  }

  // Set difference: *this minus o.
  Bits operator-(const Bits& o) const {
    Bits r = with_same_width(o);
    auto rw = r.words();
    auto ow = o.words();
    for (std::size_t i = 0; i < rw.size(); ++i) rw[i] &= ~ow[i];
    return r;
  }

  Bits& operator|=(const Bits& o) {
    check_width(o);
    auto rw = words();
    auto ow = o.words();
    for (std::size_t i = 0; i < rw.size(); ++i) rw[i] |= ow[i];
    return *this;
  }

  Bits complement() const {
    Bits r(n_);
    auto rw = r.words();
    auto sw = words();
    for (std::size_t i = 0; i < rw.size(); ++i) rw[i] = ~sw[i];
    r.mask_top();
    return r;
  }

  bool is_subset_of(const Bits& o) const {
    check_width(o);
    auto sw = words();
    auto ow = o.words();
    for (std::size_t i = 0; i < sw.size(); ++i)
      if ((sw[i] & ~ow[i]) != 0) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    check_width(o);
    auto sw = words();
    auto ow = o.words();
    for (std::size_t i = 0; i < sw.size(); ++i)
      if ((sw[i] & ow[i]) != 0) return true;
    return false;
  }

  // Index of the lowest set bit, or size() when empty.
  std::size_t first_set() const {
    auto sw = words();
    for (std::size_t i = 0; i < sw.size(); ++i)
      if (sw[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(sw[i]));
    return n_;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    auto sw = words();
    for (std::size_t i = 0; i < sw.size(); ++i) {
      std::uint64_t w = sw[i];
      while (w != 0) {
        out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  friend bool operator==(const Bits&, const Bits&) = default;

  // Numeric order on the underlying bit pattern; total and deterministic.
  friend std::strong_ordering operator<=>(const Bits& a, const Bits& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    auto aw = a.words();
    auto bw = b.words();
    for (std::size_t i = aw.size(); i-- > 0;) {
      if (aw[i] != bw[i]) return aw[i] <=> bw[i];
    }
    return std::strong_ordering::equal;
  }

 private:
  std::size_t word_count() const { return (n_ + kWordBits - 1) / kWordBits; }

  bool small() const { return n_ <= kWordBits; }

  std::span<std::uint64_t> words() {
    return small() ? std::span<std::uint64_t>(&word_, 1)
                   : std::span<std::uint64_t>(ext_);
  }

  std::span<const std::uint64_t> words() const {
    return small() ? std::span<const std::uint64_t>(&word_, 1)
                   : std::span<const std::uint64_t>(ext_);
  }

  void mask_top() {
    if (n_ == 0) {
      word_ = 0;
      return;
    }
    const std::size_t rem = n_ % kWordBits;
    if (rem != 0) words().back() &= (1ull << rem) - 1;
  }

  void check_width(const Bits& o) const {
    if (n_ != o.n_) throw std::logic_error("Bits: operand width mismatch");
  }

  Bits with_same_width(const Bits& o) const {
    check_width(o);
    return *this;
  }

  std::size_t n_ = 0;
  std::uint64_t word_ = 0;           // storage when n_ <= 64
  std::vector<std::uint64_t> ext_;   // storage when n_ > 64
};

}  // namespace ftau
