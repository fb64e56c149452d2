#include "fintop/subset.hpp"

#include <algorithm>

#include "fintop/set_class.hpp"

namespace fintop {

std::string to_letters(Subset s, bool name_full) {
  if (s.empty()) return "∅";
  if (name_full && s.is_full()) return "X";
  std::string out = "{";
  bool first = true;
  for (int x : s.points()) {
    if (!first) out += ',';
    out += point_letter(x);
    first = false;
  }
  out += '}';
  return out;
}

namespace {

constexpr std::pair<ClassKind, std::string_view> kClassTags[] = {
    {ClassKind::open, "open"},
    {ClassKind::closed, "closed"},
    {ClassKind::semi_open, "semi-open"},
    {ClassKind::semi_closed, "semi-closed"},
    {ClassKind::regular_open, "regular-open"},
    {ClassKind::regular_closed, "regular-closed"},
    {ClassKind::alpha_open, "alpha-open"},
    {ClassKind::alpha_closed, "alpha-closed"},
    {ClassKind::preopen, "preopen"},
    {ClassKind::beta_open, "beta-open"},
    {ClassKind::nowhere_dense, "nowhere-dense"},
    {ClassKind::dense, "dense"},
    {ClassKind::codense, "codense"},
    {ClassKind::clopen, "clopen"},
    {ClassKind::g_closed, "g-closed"},
    {ClassKind::g_open, "g-open"},
    {ClassKind::sg_closed, "sg-closed"},
    {ClassKind::sg_open, "sg-open"},
    {ClassKind::g_alpha_closed, "g-alpha-closed"},
    {ClassKind::f_sigma_g_alpha_closed, "f-sigma-g-alpha-closed"},
};

}  // namespace

std::string_view to_string(ClassKind kind) {
  for (const auto& [k, tag] : kClassTags)
    if (k == kind) return tag;
  return "?";
}

std::optional<ClassKind> parse_class_kind(std::string_view tag) {
  for (const auto& [k, t] : kClassTags)
    if (t == tag) return k;
  return std::nullopt;
}

SetClass SetClass::make(ClassKind kind, int n, std::vector<Subset> members) {
  for (Subset s : members)
    if (s.universe() != n) throw InputError("class member does not fit the point count");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return SetClass{kind, n, std::move(members)};
}

bool SetClass::contains(Subset s) const { return std::binary_search(members.begin(), members.end(), s); }

}  // namespace fintop
