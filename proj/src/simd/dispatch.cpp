#include <cstdlib>
#include <string_view>

#include "jordan/simd/kernels.hpp"

namespace jordan::simd {

#if defined(JORDAN_HAVE_AVX2)
const Kernels* avx2_kernels_unchecked() noexcept;
#endif

namespace {

bool cpu_has_avx2() noexcept {
#if defined(JORDAN_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const Kernels& resolve() noexcept {
  const Kernels* avx2 = avx2_kernels();
  if (const char* env = std::getenv("JORDAN_SIMD")) {
    const std::string_view want{env};
    if (want == "scalar") return scalar_kernels();
    if (want == "avx2" && avx2 != nullptr) return *avx2;
  }
  return avx2 != nullptr ? *avx2 : scalar_kernels();
}

}  // namespace

const Kernels* avx2_kernels() noexcept {
#if defined(JORDAN_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? avx2_kernels_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

const Kernels& active() noexcept {
  static const Kernels& k = resolve();
  return k;
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

}  // namespace jordan::simd
