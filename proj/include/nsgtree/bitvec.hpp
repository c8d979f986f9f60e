#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace nsgtree {

// Packed dynamic bitset over 64-bit words. Unused high bits of the last
// word are kept zero at all times, so whole-word scans need no masking.
class BitVec {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  BitVec() = default;
  explicit BitVec(std::size_t bits, bool fill = false)
      : nbits_(bits),
        words_((bits + 63) / 64, fill ? ~std::uint64_t{0} : std::uint64_t{0}) {
    trim();
  }

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const {
    assert(i < nbits_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i, bool v = true) {
    assert(i < nbits_);
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void reset(std::size_t i) { set(i, false); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Index of the first set bit at or after `from`, or npos.
  std::size_t find_first_set(std::size_t from = 0) const {
    if (from >= nbits_) return npos;
    std::size_t w = from >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
    for (;;) {
      if (cur) return w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == words_.size()) return npos;
      cur = words_[w];
    }
  }

  // Index of the first zero bit at or after `from`, or npos.
  std::size_t find_first_zero(std::size_t from = 0) const {
    if (from >= nbits_) return npos;
    std::size_t w = from >> 6;
    std::uint64_t cur = ~words_[w] & (~std::uint64_t{0} << (from & 63));
    for (;;) {
      if (cur) {
        const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
        return i < nbits_ ? i : npos;
      }
      if (++w == words_.size()) return npos;
      cur = ~words_[w];
    }
  }

  // Calls fn(i) for every set bit, in ascending order.
  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  // All valid bits flipped; padding stays zero.
  BitVec complemented() const {
    BitVec out(nbits_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
    out.trim();
    return out;
  }

  // Bit i of the result equals bit (size-1-i) of this.
  BitVec reversed() const {
    BitVec out(nbits_);
    for_each_set([&](std::size_t i) { out.set(nbits_ - 1 - i); });
    return out;
  }

  // True iff some j in [lo, hi] has test(j) && other.test(j + shift).
  // The caller guarantees hi < size() and hi + shift < other.size().
  bool intersects_shifted(const BitVec& other, std::size_t shift,
                          std::size_t lo, std::size_t hi) const {
    if (lo > hi) return false;
    assert(hi < nbits_ && hi + shift < other.nbits_);
    const std::size_t w_lo = lo >> 6, w_hi = hi >> 6;
    for (std::size_t w = w_lo; w <= w_hi; ++w) {
      std::uint64_t a = words_[w];
      if (w == w_lo && (lo & 63)) a &= ~std::uint64_t{0} << (lo & 63);
      if (w == w_hi && (hi & 63) != 63) a &= (std::uint64_t{2} << (hi & 63)) - 1;
      if (!a) continue;
      const std::size_t base = w * 64 + shift;
      const std::size_t k = base >> 6;
      const unsigned r = base & 63;
      std::uint64_t b = k < other.words_.size() ? other.words_[k] >> r : 0;
      if (r && k + 1 < other.words_.size()) b |= other.words_[k + 1] << (64 - r);
      if (a & b) return true;
    }
    return false;
  }

  bool operator==(const BitVec&) const = default;

 private:
  void trim() {
    if (!words_.empty() && (nbits_ & 63))
      words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace nsgtree
