#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"

#include "jordan/bitset.hpp"
#include "jordan/simd/kernels.hpp"

using namespace jordan;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n, int density) {
  std::vector<std::uint64_t> v(n);
  for (auto& w : v) {
    w = rng();
    // Sparse and dense inputs both exercise the popcount lanes and the
    // all-zero early exits.
    if (density == 0) w &= rng() & rng() & rng();
    if (density == 2) w |= rng() | rng();
  }
  return v;
}

// Pairs of (a, b) with many equal lanes.
std::vector<std::uint16_t> random_u16(std::mt19937_64& rng, std::size_t n, std::uint16_t range) {
  std::vector<std::uint16_t> v(n);
  for (auto& x : v) x = static_cast<std::uint16_t>(rng() % range);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels match a naive loop") {
  const auto& k = simd::scalar_kernels();
  std::mt19937_64 rng(1);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 64u}) {
    const auto a = random_words(rng, n, 1), b = random_words(rng, n, 1);
    std::size_t pc = 0, apc = 0, npc = 0;
    bool subset = true, inter = false;
    for (std::size_t i = 0; i < n; ++i) {
      pc += static_cast<std::size_t>(__builtin_popcountll(a[i]));
      apc += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
      npc += static_cast<std::size_t>(__builtin_popcountll(a[i] & ~b[i]));
      subset = subset && (a[i] & ~b[i]) == 0;
      inter = inter || (a[i] & b[i]) != 0;
    }
    CHECK(k.popcount(a.data(), n) == pc);
    CHECK(k.and_popcount(a.data(), b.data(), n) == apc);
    CHECK(k.andnot_popcount(a.data(), b.data(), n) == npc);
    CHECK(k.is_subset(a.data(), b.data(), n) == subset);
    CHECK(k.intersects(a.data(), b.data(), n) == inter);
  }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const auto* avx = simd::avx2_kernels();
  if (!avx) {
    MESSAGE("AVX2 unavailable; nothing to compare");
    return;
  }
  const auto& ref = simd::scalar_kernels();
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = rng() % 70;  // covers every tail length mod 4
    const int density = trial % 3;
    const auto a = random_words(rng, n, density);
    auto b = random_words(rng, n, density);
    if (trial % 5 == 0) b = a;  // subset and equality paths

    std::vector<std::uint64_t> d1(n), d2(n);
    ref.and_words(d1.data(), a.data(), b.data(), n);
    avx->and_words(d2.data(), a.data(), b.data(), n);
    CHECK(d1 == d2);
    ref.andnot_words(d1.data(), a.data(), b.data(), n);
    avx->andnot_words(d2.data(), a.data(), b.data(), n);
    CHECK(d1 == d2);
    ref.or_words(d1.data(), a.data(), b.data(), n);
    avx->or_words(d2.data(), a.data(), b.data(), n);
    CHECK(d1 == d2);

    CHECK(ref.popcount(a.data(), n) == avx->popcount(a.data(), n));
    CHECK(ref.and_popcount(a.data(), b.data(), n) == avx->and_popcount(a.data(), b.data(), n));
    CHECK(ref.andnot_popcount(a.data(), b.data(), n) ==
          avx->andnot_popcount(a.data(), b.data(), n));
    CHECK(ref.is_subset(a.data(), b.data(), n) == avx->is_subset(a.data(), b.data(), n));
    CHECK(ref.intersects(a.data(), b.data(), n) == avx->intersects(a.data(), b.data(), n));
  }
}

TEST_CASE("avx2 kernels handle aliasing dst == a") {
  const auto* avx = simd::avx2_kernels();
  if (!avx) return;
  std::mt19937_64 rng(7);
  const auto a = random_words(rng, 37, 1), b = random_words(rng, 37, 1);
  auto x = a, y = a;
  simd::scalar_kernels().andnot_words(x.data(), x.data(), b.data(), x.size());
  avx->andnot_words(y.data(), y.data(), b.data(), y.size());
  CHECK(x == y);
}

TEST_CASE("eq_mask_u16 agrees across variants and clears the tail") {
  const auto& ref = simd::scalar_kernels();
  const auto* avx = simd::avx2_kernels();
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng() % 700;
    const auto range = static_cast<std::uint16_t>(1 + rng() % 4);
    const auto a = random_u16(rng, n, range), b = random_u16(rng, n, range);
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> want(words, ~std::uint64_t{0});
    ref.eq_mask_u16(a.data(), b.data(), n, want.data());
    for (std::size_t i = 0; i < n; ++i)
      REQUIRE(((want[i / 64] >> (i % 64)) & 1u) == (a[i] == b[i] ? 1u : 0u));
    if (n % 64) CHECK((want.back() >> (n % 64)) == 0);
    if (avx) {
      std::vector<std::uint64_t> got(words, ~std::uint64_t{0});
      avx->eq_mask_u16(a.data(), b.data(), n, got.data());
      CHECK(got == want);
    }
  }
}

TEST_CASE("active kernels are one of the two variants") {
  const auto& k = simd::active();
  CHECK((k.isa == simd::Isa::scalar || k.isa == simd::Isa::avx2));
  CHECK(!simd::isa_name(k.isa).empty());
}

TEST_CASE("bitset operations") {
  Bitset a(130), b(130);
  for (std::size_t i = 0; i < 130; i += 3) a.set(i);
  for (std::size_t i = 0; i < 130; i += 2) b.set(i);
  CHECK(a.count() == 44);
  CHECK((a & b).count() == 22);
  CHECK(minus(a, b).count() == 22);
  CHECK(a.and_count(b) == 22);
  CHECK(a.minus_count(b) == 22);
  CHECK((a | b).count() == 87);
  CHECK_FALSE(a.is_subset_of(b));
  CHECK((a & b).is_subset_of(b));
  CHECK(a.intersects(b));
  CHECK(Bitset::full(130).count() == 130);
  CHECK(a.find_first() == 0);
  CHECK(a.find_next(1) == 3);
  CHECK(a.find_next(130) == 130);
  std::vector<std::size_t> seen;
  (a & b).for_each([&](std::size_t i) { seen.push_back(i); });
  CHECK(seen.size() == 22);
  CHECK(seen.front() == 0);
  CHECK(seen.back() == 126);
}
