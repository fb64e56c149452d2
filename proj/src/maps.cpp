#include "fintop/maps.hpp"

#include <algorithm>
#include <string>

#include "fintop/covers.hpp"
#include "fintop/operators.hpp"

namespace fintop {

namespace {

constexpr std::pair<MapKind, std::string_view> kMapTags[] = {
    {MapKind::continuous, "continuous"},
    {MapKind::open, "open"},
    {MapKind::closed, "closed"},
    {MapKind::alpha_irresolute, "alpha-irresolute"},
    {MapKind::surjective, "surjective"},
    {MapKind::injective, "injective"},
};

}  // namespace

SpaceMap::SpaceMap(std::shared_ptr<const Topology> domain, std::shared_ptr<const Topology> codomain,
                   std::vector<int> fn)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), fn_(std::move(fn)) {
  if (fn_.size() != static_cast<std::size_t>(domain_->size()))
    throw InputError("map table has " + std::to_string(fn_.size()) + " entries for a " +
                     std::to_string(domain_->size()) + "-point domain");
  for (int v : fn_)
    if (v < 0 || v >= codomain_->size()) throw InputError("map value out of codomain range: " + std::to_string(v));
}

SpaceMap::SpaceMap(Topology domain, Topology codomain, std::vector<int> fn)
    : SpaceMap(std::make_shared<const Topology>(std::move(domain)), std::make_shared<const Topology>(std::move(codomain)),
               std::move(fn)) {}

Subset SpaceMap::image(Subset a) const {
  Mask out = 0;
  for (int x : a.points()) out |= static_cast<Mask>(1u << fn_[x]);
  return Subset::raw(codomain_->size(), out);
}

Subset SpaceMap::preimage(Subset b) const {
  Mask out = 0;
  for (std::size_t x = 0; x < fn_.size(); ++x)
    if (b.contains(fn_[x])) out |= static_cast<Mask>(1u << x);
  return Subset::raw(domain_->size(), out);
}

std::string_view to_string(MapKind kind) {
  for (const auto& [k, tag] : kMapTags)
    if (k == kind) return tag;
  return "?";
}

std::optional<MapKind> parse_map_kind(std::string_view tag) {
  for (const auto& [k, t] : kMapTags)
    if (t == tag) return k;
  return std::nullopt;
}

bool alpha_irresolute(const SpaceMap& f) {
  const Topology& y = f.codomain();
  const std::size_t count = std::size_t{1} << y.size();
  for (std::size_t i = 0; i < count; ++i) {
    const Subset v = Subset::raw(y.size(), static_cast<Mask>(i));
    if (is_alpha_open(y, v) && !is_alpha_open(f.domain(), f.preimage(v))) return false;
  }
  return true;
}

bool map_predicate(const SpaceMap& f, MapKind kind) {
  const Topology& x = f.domain();
  const Topology& y = f.codomain();
  switch (kind) {
    case MapKind::continuous:
      return std::all_of(y.opens().begin(), y.opens().end(), [&](Subset v) { return x.is_open(f.preimage(v)); });
    case MapKind::open:
      return std::all_of(x.opens().begin(), x.opens().end(), [&](Subset u) { return y.is_open(f.image(u)); });
    case MapKind::closed:
      return std::all_of(x.opens().begin(), x.opens().end(),
                         [&](Subset u) { return y.is_closed(f.image(u.complement())); });
    case MapKind::alpha_irresolute: return alpha_irresolute(f);
    case MapKind::surjective: return f.image(x.full()).is_full();
    case MapKind::injective: {
      auto t = f.table();
      std::sort(t.begin(), t.end());
      return std::adjacent_find(t.begin(), t.end()) == t.end();
    }
  }
  return false;
}

void for_each_map(const Topology& x, const Topology& y, bool surjective_only,
                  const std::function<void(const std::vector<int>&)>& visit, std::uint64_t budget) {
  const int n = x.size();
  const int m = y.size();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(m);
    if (total > budget)
      throw BudgetError("map enumeration " + std::to_string(m) + "^" + std::to_string(n) + " exceeds budget");
  }
  if (surjective_only && m > n) return;

  std::vector<int> fn(n, 0);
  const Mask all = full_mask(m);
  for (;;) {
    if (!surjective_only) {
      visit(fn);
    } else {
      Mask hit = 0;
      for (int v : fn) hit |= static_cast<Mask>(1u << v);
      if (hit == all) visit(fn);
    }
    int i = n - 1;
    while (i >= 0 && fn[i] == m - 1) fn[i--] = 0;
    if (i < 0) break;
    ++fn[i];
  }
}

std::vector<SpaceMap> enumerate_maps(const Topology& x, const Topology& y, bool surjective_only,
                                     std::uint64_t budget) {
  auto dom = std::make_shared<const Topology>(x);
  auto cod = std::make_shared<const Topology>(y);
  std::vector<SpaceMap> out;
  for_each_map(x, y, surjective_only, [&](const std::vector<int>& fn) { out.emplace_back(dom, cod, fn); }, budget);
  return out;
}

std::string_view to_string(Fm1Verdict v) {
  switch (v) {
    case Fm1Verdict::not_applicable: return "not-applicable";
    case Fm1Verdict::holds: return "holds";
    case Fm1Verdict::violation: return "VIOLATION";
  }
  return "?";
}

Fm1Verdict verify_fm1(const SpaceMap& f) {
  if (!map_predicate(f, MapKind::surjective) || !map_predicate(f, MapKind::closed) || !alpha_irresolute(f))
    return Fm1Verdict::not_applicable;
  if (!check_property(f.domain(), PropertyId::alpha_subparacompact)) return Fm1Verdict::not_applicable;
  return check_property(f.codomain(), PropertyId::alpha_subparacompact) ? Fm1Verdict::holds : Fm1Verdict::violation;
}

}  // namespace fintop
