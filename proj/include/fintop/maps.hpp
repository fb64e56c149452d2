#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "fintop/topology.hpp"

namespace fintop {

/// A total function between finite spaces; not required to be continuous.
class SpaceMap {
 public:
  /// Throws InputError unless `fn` has one entry per domain point, each
  /// below the codomain size.
  SpaceMap(std::shared_ptr<const Topology> domain, std::shared_ptr<const Topology> codomain, std::vector<int> fn);
  SpaceMap(Topology domain, Topology codomain, std::vector<int> fn);

  const Topology& domain() const { return *domain_; }
  const Topology& codomain() const { return *codomain_; }
  const std::vector<int>& table() const { return fn_; }
  int operator()(int x) const { return fn_[x]; }

  Subset image(Subset a) const;
  Subset preimage(Subset b) const;

 private:
  std::shared_ptr<const Topology> domain_;
  std::shared_ptr<const Topology> codomain_;
  std::vector<int> fn_;
};

enum class MapKind { continuous, open, closed, alpha_irresolute, surjective, injective };

std::string_view to_string(MapKind kind);
std::optional<MapKind> parse_map_kind(std::string_view tag);

bool map_predicate(const SpaceMap& f, MapKind kind);

/// Preimage of every alpha-open set of the codomain is alpha-open in the
/// domain, tested with the alpha membership formula in each space.
bool alpha_irresolute(const SpaceMap& f);

/// Default ceiling on |Y|^|X| for map enumeration.
inline constexpr std::uint64_t kDefaultMapBudget = std::uint64_t{1} << 24;

/// Visits every total function X -> Y (or every surjection) in lexicographic
/// order of the value table, the last point varying fastest. Throws
/// BudgetError when |Y|^|X| exceeds `budget`.
void for_each_map(const Topology& x, const Topology& y, bool surjective_only,
                  const std::function<void(const std::vector<int>&)>& visit,
                  std::uint64_t budget = kDefaultMapBudget);

std::vector<SpaceMap> enumerate_maps(const Topology& x, const Topology& y, bool surjective_only,
                                     std::uint64_t budget = kDefaultMapBudget);

enum class Fm1Verdict { not_applicable, holds, violation };
std::string_view to_string(Fm1Verdict v);

/// Image theorem check: when f is a closed, alpha-irresolute surjection out of
/// an alpha-subparacompact space, its codomain must be alpha-subparacompact.
Fm1Verdict verify_fm1(const SpaceMap& f);

}  // namespace fintop
