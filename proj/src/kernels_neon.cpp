#include "fintop/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace fintop::kernels {

namespace {

constexpr std::size_t kLanes = 8;

void interior_neon(std::span<const Mask> nbhd, std::span<const Mask> in, std::span<Mask> out) {
  std::size_t i = 0;
  for (; i + kLanes <= in.size(); i += kLanes) {
    const uint16x8_t a = vld1q_u16(in.data() + i);
    uint16x8_t acc = vdupq_n_u16(0);
    for (Mask nb : nbhd) {
      const uint16x8_t n = vdupq_n_u16(nb);
      const uint16x8_t inside = vceqq_u16(vbicq_u16(n, a), vdupq_n_u16(0));
      acc = vorrq_u16(acc, vandq_u16(inside, n));
    }
    vst1q_u16(out.data() + i, acc);
  }
  if (i < in.size()) scalar_kernels().interior(nbhd, in.subspan(i), out.subspan(i));
}

void closure_neon(std::span<const Mask> nbhd, std::span<const Mask> in, std::span<Mask> out) {
  std::size_t i = 0;
  for (; i + kLanes <= in.size(); i += kLanes) {
    const uint16x8_t a = vld1q_u16(in.data() + i);
    uint16x8_t acc = vdupq_n_u16(0);
    for (std::size_t x = 0; x < nbhd.size(); ++x) {
      const uint16x8_t meets = vtstq_u16(a, vdupq_n_u16(nbhd[x]));
      acc = vorrq_u16(acc, vandq_u16(meets, vdupq_n_u16(static_cast<Mask>(1u << x))));
    }
    vst1q_u16(out.data() + i, acc);
  }
  if (i < in.size()) scalar_kernels().closure(nbhd, in.subspan(i), out.subspan(i));
}

void contained_neon(std::span<const Mask> inner, std::span<const Mask> outer, std::span<std::uint8_t> out) {
  std::size_t i = 0;
  for (; i + kLanes <= inner.size(); i += kLanes) {
    const uint16x8_t stray = vbicq_u16(vld1q_u16(inner.data() + i), vld1q_u16(outer.data() + i));
    const uint8x8_t ok = vmovn_u16(vceqq_u16(stray, vdupq_n_u16(0)));
    vst1_u8(out.data() + i, vand_u8(ok, vdup_n_u8(1)));
  }
  if (i < inner.size()) scalar_kernels().contained(inner.subspan(i), outer.subspan(i), out.subspan(i));
}

constexpr KernelTable kNeon{Isa::neon, &interior_neon, &closure_neon, &contained_neon};

}  // namespace

const KernelTable* neon_kernels() { return &kNeon; }

}  // namespace fintop::kernels

#else

namespace fintop::kernels {
const KernelTable* neon_kernels() { return nullptr; }
}  // namespace fintop::kernels

#endif
