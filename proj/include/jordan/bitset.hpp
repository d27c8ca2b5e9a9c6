#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "jordan/simd/kernels.hpp"

namespace jordan {

// Fixed-width bit vector. Width is set at construction; binary operations
// require equal widths. Bits past size() in the last word are always zero.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  static Bitset full(std::size_t nbits) {
    Bitset b(nbits);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  std::size_t size() const noexcept { return nbits_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::uint64_t* data() noexcept { return words_.data(); }
  const std::uint64_t* data() const noexcept { return words_.data(); }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept { return simd::active().popcount(data(), word_count()); }
  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    simd::active().and_words(data(), data(), o.data(), word_count());
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    simd::active().or_words(data(), data(), o.data(), word_count());
    return *this;
  }
  // this &= ~o
  Bitset& subtract(const Bitset& o) noexcept {
    simd::active().andnot_words(data(), data(), o.data(), word_count());
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
  friend Bitset minus(Bitset a, const Bitset& b) noexcept { return a.subtract(b); }

  std::size_t and_count(const Bitset& o) const noexcept {
    return simd::active().and_popcount(data(), o.data(), word_count());
  }
  std::size_t minus_count(const Bitset& o) const noexcept {
    return simd::active().andnot_popcount(data(), o.data(), word_count());
  }
  bool is_subset_of(const Bitset& o) const noexcept {
    return simd::active().is_subset(data(), o.data(), word_count());
  }
  bool intersects(const Bitset& o) const noexcept {
    return simd::active().intersects(data(), o.data(), word_count());
  }

  // Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const noexcept {
    if (from >= nbits_) return nbits_;
    std::size_t w = from >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur) return (w << 6) + static_cast<std::size_t>(__builtin_ctzll(cur));
      if (++w == words_.size()) return nbits_;
      cur = words_[w];
    }
  }
  std::size_t find_first() const noexcept { return find_next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t cur = words_[w];
      while (cur) {
        f((w << 6) + static_cast<std::size_t>(__builtin_ctzll(cur)));
        cur &= cur - 1;
      }
    }
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend auto operator<=>(const Bitset& a, const Bitset& b) {
    return a.words_ <=> b.words_;
  }

 private:
  void trim() noexcept {
    if (nbits_ & 63) words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace jordan
