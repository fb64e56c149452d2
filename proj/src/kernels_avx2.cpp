#include "fintop/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#define FINTOP_TARGET_AVX2 __attribute__((target("avx2")))

namespace fintop::kernels {

namespace {

constexpr std::size_t kLanes = 16;

FINTOP_TARGET_AVX2 void interior_avx2(std::span<const Mask> nbhd, std::span<const Mask> in, std::span<Mask> out) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= in.size(); i += kLanes) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.data() + i));
    __m256i acc = zero;
    for (Mask nb : nbhd) {
      const __m256i n = _mm256_set1_epi16(static_cast<short>(nb));
      // lanes where nbhd[x] & ~a == 0
      const __m256i inside = _mm256_cmpeq_epi16(_mm256_andnot_si256(a, n), zero);
      acc = _mm256_or_si256(acc, _mm256_and_si256(inside, n));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), acc);
  }
  if (i < in.size()) scalar_kernels().interior(nbhd, in.subspan(i), out.subspan(i));
}

FINTOP_TARGET_AVX2 void closure_avx2(std::span<const Mask> nbhd, std::span<const Mask> in, std::span<Mask> out) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= in.size(); i += kLanes) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.data() + i));
    __m256i acc = zero;
    for (std::size_t x = 0; x < nbhd.size(); ++x) {
      const __m256i n = _mm256_set1_epi16(static_cast<short>(nbhd[x]));
      const __m256i bit = _mm256_set1_epi16(static_cast<short>(1u << x));
      const __m256i disjoint = _mm256_cmpeq_epi16(_mm256_and_si256(a, n), zero);
      acc = _mm256_or_si256(acc, _mm256_andnot_si256(disjoint, bit));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), acc);
  }
  if (i < in.size()) scalar_kernels().closure(nbhd, in.subspan(i), out.subspan(i));
}

FINTOP_TARGET_AVX2 void contained_avx2(std::span<const Mask> inner, std::span<const Mask> outer,
                                       std::span<std::uint8_t> out) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= inner.size(); i += kLanes) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(inner.data() + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(outer.data() + i));
    const __m256i ok = _mm256_cmpeq_epi16(_mm256_andnot_si256(b, a), zero);
    // two mask bits per 16-bit lane
    const auto bits = static_cast<std::uint32_t>(_mm256_movemask_epi8(ok));
    for (std::size_t lane = 0; lane < kLanes; ++lane) out[i + lane] = static_cast<std::uint8_t>((bits >> (2 * lane)) & 1u);
  }
  if (i < inner.size()) scalar_kernels().contained(inner.subspan(i), outer.subspan(i), out.subspan(i));
}

constexpr KernelTable kAvx2{Isa::avx2, &interior_avx2, &closure_avx2, &contained_avx2};

}  // namespace

const KernelTable* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace fintop::kernels

#else

namespace fintop::kernels {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace fintop::kernels

#endif
