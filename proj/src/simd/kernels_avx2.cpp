// Compiled with -mavx2 only on x86-64; callers reach these functions solely
// through the dispatch table after a cpuid check.

#include "jordan/simd/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace jordan::simd {
namespace {

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint64_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Nibble-table popcount: per-byte counts via pshufb, summed into four 64-bit
// lanes with sad_epu8.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::size_t hsum_epi64(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

void and_words(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
               std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_and_si256(load(a + i), load(b + i)));
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_words(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                  std::size_t n) {
  std::size_t i = 0;
  // _mm256_andnot_si256(x, y) computes ~x & y.
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_andnot_si256(load(b + i), load(a + i)));
  for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void or_words(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
              std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_or_si256(load(a + i), load(b + i)));
  for (; i < n; ++i) dst[i] = a[i] | b[i];
}

std::size_t popcount(const std::uint64_t* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
  std::size_t c = hsum_epi64(acc);
  for (; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
  std::size_t c = hsum_epi64(acc);
  for (; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::size_t andnot_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_andnot_si256(load(b + i), load(a + i))));
  std::size_t c = hsum_epi64(acc);
  for (; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
  return c;
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i diff = _mm256_andnot_si256(load(b + i), load(a + i));
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

// 32 halfword comparisons -> 32 mask bits, in element order.
inline std::uint32_t eq_mask32(const std::uint16_t* a, const std::uint16_t* b) {
  const __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  const __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + 16));
  const __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
  const __m256i b1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + 16));
  const __m256i e0 = _mm256_cmpeq_epi16(a0, b0);
  const __m256i e1 = _mm256_cmpeq_epi16(a1, b1);
  // packs works per 128-bit lane: [e0.lo e1.lo e0.hi e1.hi]; permute restores order.
  const __m256i packed = _mm256_permute4x64_epi64(_mm256_packs_epi16(e0, e1), 0xD8);
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(packed));
}

void eq_mask_u16(const std::uint16_t* a, const std::uint16_t* b, std::size_t n,
                 std::uint64_t* out) {
  const std::size_t words = (n + 63) / 64;
  std::size_t i = 0;
  std::size_t w = 0;
  for (; i + 64 <= n; i += 64, ++w) {
    const std::uint64_t lo = eq_mask32(a + i, b + i);
    const std::uint64_t hi = eq_mask32(a + i + 32, b + i + 32);
    out[w] = lo | (hi << 32);
  }
  for (std::size_t k = w; k < words; ++k) out[k] = 0;
  for (; i < n; ++i)
    if (a[i] == b[i]) out[i / 64] |= std::uint64_t{1} << (i % 64);
}

constexpr Kernels kAvx2{
    Isa::avx2,    and_words,       andnot_words, or_words,   popcount,
    and_popcount, andnot_popcount, is_subset,    intersects, eq_mask_u16,
};

}  // namespace

const Kernels* avx2_kernels_unchecked() noexcept { return &kAvx2; }

}  // namespace jordan::simd
