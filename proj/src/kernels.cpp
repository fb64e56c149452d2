#include "fintop/kernels.hpp"

#include <cstdlib>
#include <string>

namespace fintop::kernels {

namespace {

void interior_scalar(std::span<const Mask> nbhd, std::span<const Mask> in, std::span<Mask> out) {
  for (std::size_t i = 0; i < in.size(); ++i) {
    const Mask a = in[i];
    Mask acc = 0;
    for (Mask nb : nbhd)
      if ((nb & ~a) == 0) acc |= nb;
    out[i] = acc;
  }
}

void closure_scalar(std::span<const Mask> nbhd, std::span<const Mask> in, std::span<Mask> out) {
  for (std::size_t i = 0; i < in.size(); ++i) {
    const Mask a = in[i];
    Mask acc = 0;
    for (std::size_t x = 0; x < nbhd.size(); ++x)
      if ((nbhd[x] & a) != 0) acc |= static_cast<Mask>(1u << x);
    out[i] = acc;
  }
}

void contained_scalar(std::span<const Mask> inner, std::span<const Mask> outer, std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = (inner[i] & ~outer[i]) == 0 ? 1 : 0;
}

constexpr KernelTable kScalar{Isa::scalar, &interior_scalar, &closure_scalar, &contained_scalar};

const KernelTable& select() {
  const char* pinned = std::getenv("FINTOP_ISA");
  if (pinned != nullptr) {
    const std::string want(pinned);
    if (want == "avx2" && avx2_kernels() != nullptr) return *avx2_kernels();
    if (want == "neon" && neon_kernels() != nullptr) return *neon_kernels();
    return kScalar;
  }
  if (const KernelTable* t = avx2_kernels()) return *t;
  if (const KernelTable* t = neon_kernels()) return *t;
  return kScalar;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable& active_kernels() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace fintop::kernels
