#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/operators.hpp"
#include "fintop/topology.hpp"

namespace fintop {

/// An ordered family of subsets, e.g. a cover or a candidate refinement.
struct SetFamily {
  int n = 0;
  std::vector<Subset> members;
  std::string label;
  bool allow_duplicates = false;

  /// Throws InputError on members that do not fit `n`, or on repeated
  /// members unless `allow_duplicates` is set.
  static SetFamily make(int n, std::vector<Subset> members, std::string label = {}, bool allow_duplicates = false);

  Subset union_all() const;
  bool covers() const { return union_all().is_full(); }
};

enum class FamilyPredicate {
  discrete,
  sigma_discrete,
  locally_finite,
  locally_countable,
  closure_preserving,
  sigma_closure_preserving,
};

enum class RefinementConstraint {
  closed_sigma_discrete,
  open_locally_finite,
  closed_sigma_closure_preserving,
  semi_open_locally_finite_dense_union,
  regular_closed_locally_finite,
  regular_closed_locally_countable,
};

inline constexpr RefinementConstraint kAllConstraints[] = {
    RefinementConstraint::closed_sigma_discrete,
    RefinementConstraint::open_locally_finite,
    RefinementConstraint::closed_sigma_closure_preserving,
    RefinementConstraint::semi_open_locally_finite_dense_union,
    RefinementConstraint::regular_closed_locally_finite,
    RefinementConstraint::regular_closed_locally_countable,
};

enum class PropertyId {
  compact,
  semi_compact,
  s_closed_lower,
  s_closed_upper,
  sg_compact,
  rc_lindelof,
  para_rc_lindelof,
  para_s_closed,
  locally_s_closed_upper,
  locally_s_closed_lower,
  subparacompact,
  alpha_subparacompact,
  alpha_paracompact,
  extremally_disconnected,
  hausdorff,
  normal,
  nodec,
  alpha_compact,
};

inline constexpr PropertyId kAllProperties[] = {
    PropertyId::compact,
    PropertyId::semi_compact,
    PropertyId::s_closed_lower,
    PropertyId::s_closed_upper,
    PropertyId::sg_compact,
    PropertyId::rc_lindelof,
    PropertyId::para_rc_lindelof,
    PropertyId::para_s_closed,
    PropertyId::locally_s_closed_upper,
    PropertyId::locally_s_closed_lower,
    PropertyId::subparacompact,
    PropertyId::alpha_subparacompact,
    PropertyId::alpha_paracompact,
    PropertyId::extremally_disconnected,
    PropertyId::hausdorff,
    PropertyId::normal,
    PropertyId::nodec,
    PropertyId::alpha_compact,
};

std::string_view to_string(FamilyPredicate p);
std::string_view to_string(RefinementConstraint c);
std::string_view to_string(PropertyId p);
std::optional<PropertyId> parse_property(std::string_view tag);
std::optional<RefinementConstraint> parse_constraint(std::string_view tag);

/// simplified: finite-space reductions (canonical covers, pointwise witnesses,
/// singleton partitions). exhaustive: enumerate irredundant covers and
/// candidate families and test every definition literally.
enum class SearchMode { simplified, exhaustive };

enum class Reason {
  computed,
  /// Holds on every finite space because every cover is finite; the checker
  /// still evaluates the defining condition within its enumeration budget.
  finite_space_theorem,
};

std::string_view to_string(Reason r);

/// Every member of `f` lies inside some member of `g`.
bool refines(const SetFamily& f, const SetFamily& g);

/// Evaluates a structural family predicate. In exhaustive mode the sigma-
/// predicates run a generic partition search; in simplified mode they use the
/// fact that a finite family splits into one-member subfamilies.
bool family_predicate(const Topology& t, const SetFamily& f, FamilyPredicate pred,
                      SearchMode mode = SearchMode::simplified);

/// Partition of `f` (as member indices) into subfamilies each satisfying
/// `base`, found by first-fit backtracking; nullopt if none exists.
std::optional<std::vector<std::vector<int>>> find_partition(const Topology& t, const SetFamily& f,
                                                            FamilyPredicate base);

/// Minimal alpha-open neighbourhoods of all points, sorted and deduplicated.
/// Refines every alpha-open cover.
SetFamily canonical_alpha_cover(const Topology& t);
/// Minimal open neighbourhoods of all points, sorted and deduplicated.
SetFamily canonical_open_cover(const Topology& t);

struct RefinementResult {
  bool found = false;
  std::optional<SetFamily> witness;
};

/// Whether some family from the constrained class refines `cover` and covers
/// X (has dense union, for the semi-open variant). Throws InputError if
/// `cover` does not cover X and BudgetError if exhaustive mode would scan
/// more than 2^20 candidate families.
RefinementResult has_refinement(const Topology& t, const SetFamily& cover, RefinementConstraint constraint,
                                SearchMode mode = SearchMode::simplified);

/// Calls `visit` for each irredundant family of `members` whose union
/// contains `target` (no member lies inside the union of the others), in
/// lexicographic index order. Stops early when `visit` returns false. Returns
/// false if more than `budget` families would be visited.
bool for_each_irredundant_cover(std::span<const Subset> members, Subset target, std::size_t budget,
                                const std::function<bool(const SetFamily&)>& visit);

/// Every cover of X drawn from `cover_kind` has a refinement meeting `constraint`.
bool every_cover_has_refinement(const SpaceAnalysis& space, ClassKind cover_kind, RefinementConstraint constraint,
                                SearchMode mode = SearchMode::simplified);

/// The cover class paired with each refinement constraint by the covering
/// properties that use it.
struct RefinementPairing {
  ClassKind cover_kind;
  RefinementConstraint constraint;
  std::string_view property;
};
std::span<const RefinementPairing> refinement_pairings();

struct PropertyResult {
  bool holds = false;
  Reason reason = Reason::computed;
};

PropertyResult evaluate_property(const SpaceAnalysis& space, PropertyId prop,
                                 SearchMode mode = SearchMode::simplified);
bool check_property(const Topology& t, PropertyId prop);

/// Paracompact: every open cover has a locally finite open refinement.
bool is_paracompact(const SpaceAnalysis& space, SearchMode mode = SearchMode::simplified);

}  // namespace fintop
