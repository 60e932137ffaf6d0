#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace nsdeg {

/// Fixed-length dynamic bitset backed by 64-bit words. Bits past size() are
/// kept zero so word-level comparisons and popcounts stay exact.
class Bitset {
 public:
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t nbits, bool value = false)
      : nbits_(nbits), words_((nbits + kWordBits - 1) / kWordBits, value ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t size() const noexcept { return nbits_; }
  bool empty() const noexcept { return nbits_ == 0; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits)); }
  void assign(std::size_t i, bool v) noexcept { v ? set(i) : reset(i); }

  /// Sets bits [from, size()).
  void set_from(std::size_t from) noexcept {
    for (std::size_t i = from; i < nbits_ && i % kWordBits != 0; ++i) set(i);
    for (std::size_t w = (from + kWordBits - 1) / kWordBits; w < words_.size(); ++w) words_[w] = ~std::uint64_t{0};
    trim();
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool all() const noexcept { return count() == nbits_; }

  /// Index of the first set bit, or size() when none.
  std::size_t find_first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return nbits_;
  }

  /// Index one past the last clear bit, i.e. the smallest i such that every
  /// bit in [i, size()) is set. Returns 0 when the whole set is full.
  std::size_t tail_start() const noexcept {
    for (std::size_t w = words_.size(); w-- > 0;) {
      std::uint64_t inv = ~words_[w];
      if (w + 1 == words_.size() && nbits_ % kWordBits != 0) inv &= (std::uint64_t{1} << (nbits_ % kWordBits)) - 1;
      if (inv) return w * kWordBits + (kWordBits - static_cast<std::size_t>(std::countl_zero(inv)));
    }
    return 0;
  }

  /// this |= (other << shift), truncated to size().
  void or_shifted(const Bitset& other, std::size_t shift) noexcept {
    const std::size_t ws = shift / kWordBits;
    const unsigned bs = static_cast<unsigned>(shift % kWordBits);
    const std::size_t n = words_.size();
    for (std::size_t i = 0; i < other.words_.size() && i + ws < n; ++i) {
      const std::uint64_t v = other.words_[i];
      if (!v) continue;
      words_[i + ws] |= v << bs;
      if (bs && i + ws + 1 < n) words_[i + ws + 1] |= v >> (kWordBits - bs);
    }
    trim();
  }

  /// True when (other << shift) & this is nonzero within size().
  bool intersects_shifted(const Bitset& other, std::size_t shift) const noexcept {
    const std::size_t ws = shift / kWordBits;
    const unsigned bs = static_cast<unsigned>(shift % kWordBits);
    const std::size_t n = words_.size();
    for (std::size_t i = 0; i < other.words_.size() && i + ws < n; ++i) {
      const std::uint64_t v = other.words_[i];
      if (!v) continue;
      if (words_[i + ws] & (v << bs)) return true;
      if (bs && i + ws + 1 < n && (words_[i + ws + 1] & (v >> (kWordBits - bs)))) return true;
    }
    return false;
  }

  /// Bits [from, from + len) as a new bitset; positions past size() read as 0.
  Bitset slice(std::size_t from, std::size_t len) const {
    Bitset r(len);
    const std::size_t ws = from / kWordBits;
    const unsigned bs = static_cast<unsigned>(from % kWordBits);
    for (std::size_t i = 0; i < r.words_.size(); ++i) {
      std::uint64_t v = 0;
      if (i + ws < words_.size()) v = words_[i + ws] >> bs;
      if (bs && i + ws + 1 < words_.size()) v |= words_[i + ws + 1] << (kWordBits - bs);
      r.words_[i] = v;
    }
    r.trim();
    return r;
  }

  Bitset operator~() const {
    Bitset r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) noexcept = default;

 private:
  void trim() noexcept {
    if (nbits_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (nbits_ % kWordBits)) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace nsdeg
