#include "jordan/simd/kernels.hpp"

#include <bit>

namespace jordan::simd {
namespace {

void and_words(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
               std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_words(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void or_words(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
              std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

std::size_t popcount(const std::uint64_t* a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::size_t andnot_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i)
    c += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
  return c;
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

void eq_mask_u16(const std::uint16_t* a, const std::uint16_t* b, std::size_t n,
                 std::uint64_t* out) {
  const std::size_t words = (n + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] == b[i]) out[i / 64] |= std::uint64_t{1} << (i % 64);
}

constexpr Kernels kScalar{
    Isa::scalar,     and_words, andnot_words, or_words,   popcount,
    and_popcount,    andnot_popcount, is_subset, intersects, eq_mask_u16,
};

}  // namespace

const Kernels& scalar_kernels() noexcept { return kScalar; }

}  // namespace jordan::simd
