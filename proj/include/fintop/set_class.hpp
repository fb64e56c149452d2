#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/subset.hpp"

namespace fintop {

enum class ClassKind {
  open,
  closed,
  semi_open,
  semi_closed,
  regular_open,
  regular_closed,
  alpha_open,
  alpha_closed,
  preopen,
  beta_open,
  nowhere_dense,
  dense,
  codense,
  clopen,
  g_closed,
  g_open,
  sg_closed,
  sg_open,
  g_alpha_closed,
  f_sigma_g_alpha_closed,
};

inline constexpr ClassKind kAllClassKinds[] = {
    ClassKind::open,          ClassKind::closed,         ClassKind::semi_open,     ClassKind::semi_closed,
    ClassKind::regular_open,  ClassKind::regular_closed, ClassKind::alpha_open,    ClassKind::alpha_closed,
    ClassKind::preopen,       ClassKind::beta_open,      ClassKind::nowhere_dense, ClassKind::dense,
    ClassKind::codense,       ClassKind::clopen,         ClassKind::g_closed,      ClassKind::g_open,
    ClassKind::sg_closed,     ClassKind::sg_open,        ClassKind::g_alpha_closed,
    ClassKind::f_sigma_g_alpha_closed,
};

/// Stable lowercase-hyphenated tag, e.g. "semi-open".
std::string_view to_string(ClassKind kind);
std::optional<ClassKind> parse_class_kind(std::string_view tag);

/// A family of subsets sharing one defining property, sorted and duplicate-free.
struct SetClass {
  ClassKind kind = ClassKind::open;
  int n = 0;
  std::vector<Subset> members;

  /// Sorts and deduplicates `members`; throws InputError if a member does not fit `n`.
  static SetClass make(ClassKind kind, int n, std::vector<Subset> members);

  bool contains(Subset s) const;
  std::size_t size() const { return members.size(); }

  /// Equality of the member lists only; the kind tag is ignored.
  bool same_members(const SetClass& other) const { return n == other.n && members == other.members; }
};

}  // namespace fintop
