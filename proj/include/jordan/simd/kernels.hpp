#pragma once

// Word-level kernels behind Bitset and the table scans in the subgroup search.
//
// Every kernel has a scalar reference implementation. An AVX2 variant is
// compiled on x86-64 and picked at runtime when the CPU reports AVX2; the
// JORDAN_SIMD environment variable ("scalar" or "avx2") overrides the choice.
// Both variants must agree bit-for-bit; tests/unit/test_simd.cpp checks that.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace jordan::simd {

enum class Isa { scalar, avx2 };

struct Kernels {
  Isa isa;
  // dst = a & b
  void (*and_words)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                    std::size_t n);
  // dst = a & ~b
  void (*andnot_words)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                       std::size_t n);
  // dst = a | b
  void (*or_words)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                   std::size_t n);
  std::size_t (*popcount)(const std::uint64_t* a, std::size_t n);
  // popcount(a & b)
  std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  // popcount(a & ~b)
  std::size_t (*andnot_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  // (a & ~b) == 0
  bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  // (a & b) != 0
  bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  // Bit i of out is set iff a[i] == b[i]. out must hold ceil(n/64) words; bits
  // past n in the last word are cleared.
  void (*eq_mask_u16)(const std::uint16_t* a, const std::uint16_t* b, std::size_t n,
                      std::uint64_t* out);
};

const Kernels& scalar_kernels() noexcept;

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const Kernels* avx2_kernels() noexcept;

// The kernel table used by the library. Resolved once on first call.
const Kernels& active() noexcept;

std::string_view isa_name(Isa isa) noexcept;

}  // namespace jordan::simd
