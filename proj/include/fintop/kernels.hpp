#pragma once

// Batch set-operator kernels over 16-bit subset masks.
//
// A finite topology is fully described by its minimal-neighbourhood table
// nbhd[x] (smallest open set containing x). Interior and closure then act
// lane-wise on subset masks:
//
//   interior(A) = OR { nbhd[x] : nbhd[x] subset of A }
//   closure(A)  = { x : nbhd[x] meets A }
//
// Every kernel has a scalar reference implementation; vector variants must
// agree with it bit for bit.

#include <cstdint>
#include <span>
#include <string_view>

#include "fintop/subset.hpp"

namespace fintop::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;
  /// out[i] = interior of in[i] under the topology with the given minimal neighbourhoods.
  void (*interior)(std::span<const Mask> nbhd, std::span<const Mask> in, std::span<Mask> out);
  /// out[i] = closure of in[i].
  void (*closure)(std::span<const Mask> nbhd, std::span<const Mask> in, std::span<Mask> out);
  /// out[i] = 1 if inner[i] is a subset of outer[i], else 0.
  void (*contained)(std::span<const Mask> inner, std::span<const Mask> outer, std::span<std::uint8_t> out);
};

const KernelTable& scalar_kernels();

/// nullptr when the build target or the running CPU lacks the instruction set.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// The fastest supported table. FINTOP_ISA=scalar|avx2|neon in the environment
/// pins the choice (falls back to scalar if the pinned ISA is unavailable).
const KernelTable& active_kernels();

}  // namespace fintop::kernels
