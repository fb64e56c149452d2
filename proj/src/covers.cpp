#include "fintop/covers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fintop {

namespace {

constexpr std::size_t kMaxCandidates = 20;
constexpr std::size_t kCoverBudget = std::size_t{1} << 16;
constexpr std::size_t kBoundedBudget = 4096;
constexpr std::size_t kClosurePreservingExact = 16;

constexpr std::pair<FamilyPredicate, std::string_view> kFamilyTags[] = {
    {FamilyPredicate::discrete, "discrete"},
    {FamilyPredicate::sigma_discrete, "sigma-discrete"},
    {FamilyPredicate::locally_finite, "locally-finite"},
    {FamilyPredicate::locally_countable, "locally-countable"},
    {FamilyPredicate::closure_preserving, "closure-preserving"},
    {FamilyPredicate::sigma_closure_preserving, "sigma-closure-preserving"},
};

constexpr std::pair<RefinementConstraint, std::string_view> kConstraintTags[] = {
    {RefinementConstraint::closed_sigma_discrete, "closed+sigma-discrete"},
    {RefinementConstraint::open_locally_finite, "open+locally-finite"},
    {RefinementConstraint::closed_sigma_closure_preserving, "closed+sigma-closure-preserving"},
    {RefinementConstraint::semi_open_locally_finite_dense_union, "semi-open+locally-finite+dense-union"},
    {RefinementConstraint::regular_closed_locally_finite, "regular-closed+locally-finite"},
    {RefinementConstraint::regular_closed_locally_countable, "regular-closed+locally-countable"},
};

constexpr std::pair<PropertyId, std::string_view> kPropertyTags[] = {
    {PropertyId::compact, "compact"},
    {PropertyId::semi_compact, "semi-compact"},
    {PropertyId::s_closed_lower, "s-closed-lower"},
    {PropertyId::s_closed_upper, "s-closed-upper"},
    {PropertyId::sg_compact, "sg-compact"},
    {PropertyId::rc_lindelof, "rc-lindelof"},
    {PropertyId::para_rc_lindelof, "para-rc-lindelof"},
    {PropertyId::para_s_closed, "para-s-closed"},
    {PropertyId::locally_s_closed_upper, "locally-s-closed-upper"},
    {PropertyId::locally_s_closed_lower, "locally-s-closed-lower"},
    {PropertyId::subparacompact, "subparacompact"},
    {PropertyId::alpha_subparacompact, "alpha-subparacompact"},
    {PropertyId::alpha_paracompact, "alpha-paracompact"},
    {PropertyId::extremally_disconnected, "extremally-disconnected"},
    {PropertyId::hausdorff, "hausdorff"},
    {PropertyId::normal, "normal"},
    {PropertyId::nodec, "nodec"},
    {PropertyId::alpha_compact, "alpha-compact"},
};

constexpr RefinementPairing kPairings[] = {
    {ClassKind::open, RefinementConstraint::closed_sigma_discrete, "subparacompact"},
    {ClassKind::alpha_open, RefinementConstraint::closed_sigma_discrete, "alpha-subparacompact"},
    {ClassKind::alpha_open, RefinementConstraint::open_locally_finite, "alpha-paracompact"},
    {ClassKind::alpha_open, RefinementConstraint::closed_sigma_closure_preserving, "sigma-closure-preserving form"},
    {ClassKind::semi_open, RefinementConstraint::semi_open_locally_finite_dense_union, "para-s-closed"},
    {ClassKind::regular_closed, RefinementConstraint::regular_closed_locally_finite, "regular-closed form"},
    {ClassKind::regular_closed, RefinementConstraint::regular_closed_locally_countable, "para-rc-lindelof"},
};

template <typename Enum, std::size_t N>
std::string_view lookup(const std::pair<Enum, std::string_view> (&table)[N], Enum value) {
  for (const auto& [k, tag] : table)
    if (k == value) return tag;
  return "?";
}

template <typename Enum, std::size_t N>
std::optional<Enum> reverse_lookup(const std::pair<Enum, std::string_view> (&table)[N], std::string_view tag) {
  for (const auto& [k, t] : table)
    if (t == tag) return k;
  return std::nullopt;
}

void check_same_size(const Topology& t, const SetFamily& f) {
  if (f.n != t.size()) throw InputError("family and space have different point counts");
}

// Number of members meeting the minimal neighbourhood of each point.
int max_local_count(const Topology& t, const SetFamily& f) {
  int worst = 0;
  for (int x = 0; x < t.size(); ++x) {
    const Subset nb = t.min_nbhd(x);
    int c = 0;
    for (Subset m : f.members) c += nb.meets(m) ? 1 : 0;
    worst = std::max(worst, c);
  }
  return worst;
}

bool closure_preserving(const Topology& t, const SetFamily& f) {
  const std::size_t k = f.members.size();
  if (k <= kClosurePreservingExact) {
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      Subset u = t.none();
      Subset cls = t.none();
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) {
          u |= f.members[i];
          cls |= t.closure(f.members[i]);
        }
      if (t.closure(u) != cls) return false;
    }
    return true;
  }
  // Beyond the exact limit: pairwise additivity extends to all finite subfamilies by induction.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (t.closure(f.members[i] | f.members[j]) != (t.closure(f.members[i]) | t.closure(f.members[j]))) return false;
  return true;
}

bool base_predicate(const Topology& t, const SetFamily& f, FamilyPredicate pred) {
  switch (pred) {
    case FamilyPredicate::discrete: return max_local_count(t, f) <= 1;
    // A finite family meets every neighbourhood in finitely many members.
    case FamilyPredicate::locally_finite:
    case FamilyPredicate::locally_countable: return max_local_count(t, f) <= static_cast<int>(f.members.size());
    case FamilyPredicate::closure_preserving: return closure_preserving(t, f);
    default: break;
  }
  throw std::logic_error("not a base family predicate");
}

FamilyPredicate base_of(FamilyPredicate sigma) {
  return sigma == FamilyPredicate::sigma_discrete ? FamilyPredicate::discrete : FamilyPredicate::closure_preserving;
}

struct ConstraintShape {
  ClassKind member_kind;
  FamilyPredicate predicate;
  bool dense_union;
};

ConstraintShape shape_of(RefinementConstraint c) {
  switch (c) {
    case RefinementConstraint::closed_sigma_discrete: return {ClassKind::closed, FamilyPredicate::sigma_discrete, false};
    case RefinementConstraint::open_locally_finite: return {ClassKind::open, FamilyPredicate::locally_finite, false};
    case RefinementConstraint::closed_sigma_closure_preserving:
      return {ClassKind::closed, FamilyPredicate::sigma_closure_preserving, false};
    case RefinementConstraint::semi_open_locally_finite_dense_union:
      return {ClassKind::semi_open, FamilyPredicate::locally_finite, true};
    case RefinementConstraint::regular_closed_locally_finite:
      return {ClassKind::regular_closed, FamilyPredicate::locally_finite, false};
    case RefinementConstraint::regular_closed_locally_countable:
      return {ClassKind::regular_closed, FamilyPredicate::locally_countable, false};
  }
  throw std::logic_error("unknown refinement constraint");
}

bool in_member_class(const Topology& t, Subset a, ClassKind kind) {
  switch (kind) {
    case ClassKind::open: return t.is_open(a);
    case ClassKind::closed: return t.is_closed(a);
    case ClassKind::semi_open: return is_semi_open(t, a);
    case ClassKind::regular_closed: return is_regular_closed(t, a);
    default: break;
  }
  throw std::logic_error("unsupported refinement member class");
}

std::vector<Subset> member_class(const Topology& t, ClassKind kind) {
  std::vector<Subset> out;
  const std::size_t count = std::size_t{1} << t.size();
  for (std::size_t i = 0; i < count; ++i) {
    const Subset a = Subset::raw(t.size(), static_cast<Mask>(i));
    if (in_member_class(t, a, kind)) out.push_back(a);
  }
  return out;
}

bool inside_some(Subset a, const SetFamily& cover) {
  return std::any_of(cover.members.begin(), cover.members.end(), [a](Subset u) { return a.subset_of(u); });
}

bool union_ok(const Topology& t, Subset u, bool dense) { return dense ? t.closure(u).is_full() : u.is_full(); }

SetFamily sorted_family(int n, std::vector<Subset> members, std::string label) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return SetFamily::make(n, std::move(members), std::move(label));
}

RefinementResult simplified_refinement(const Topology& t, const SetFamily& cover, RefinementConstraint c) {
  const int n = t.size();
  const ConstraintShape shape = shape_of(c);
  std::vector<Subset> chosen;

  if (shape.dense_union) {
    // Every semi-open set inside U lies inside its semi-interior, so these
    // semi-interiors have the largest union any refinement can reach.
    Subset u = t.none();
    for (Subset m : cover.members) {
      const Subset s = semi_interior(t, m);
      if (!s.empty()) chosen.push_back(s);
      u |= s;
    }
    if (!t.closure(u).is_full()) return {};
    return {true, sorted_family(n, std::move(chosen), std::string(to_string(c)))};
  }

  std::vector<Subset> rc;
  if (shape.member_kind == ClassKind::regular_closed) rc = member_class(t, ClassKind::regular_closed);

  for (int x = 0; x < n; ++x) {
    const Subset point = Subset::singleton(n, x);
    std::optional<Subset> pick;
    switch (shape.member_kind) {
      case ClassKind::closed:
        // Cl{x} is the smallest closed set containing x.
        if (inside_some(t.closure(point), cover)) pick = t.closure(point);
        break;
      case ClassKind::open:
        if (inside_some(t.min_nbhd(x), cover)) pick = t.min_nbhd(x);
        break;
      default:
        for (Subset r : rc)
          if (r.contains(x) && inside_some(r, cover)) {
            pick = r;
            break;
          }
    }
    if (!pick) return {};
    chosen.push_back(*pick);
  }
  return {true, sorted_family(n, std::move(chosen), std::string(to_string(c)))};
}

RefinementResult exhaustive_refinement(const Topology& t, const SetFamily& cover, RefinementConstraint c) {
  const int n = t.size();
  const ConstraintShape shape = shape_of(c);
  std::vector<Subset> candidates;
  for (Subset a : member_class(t, shape.member_kind))
    if (!a.empty() && inside_some(a, cover)) candidates.push_back(a);
  const std::size_t k = candidates.size();
  if (k > kMaxCandidates)
    throw BudgetError("exhaustive refinement search over " + std::to_string(k) + " candidate sets");

  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<Subset> members;
    Subset u = t.none();
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        members.push_back(candidates[i]);
        u |= candidates[i];
      }
    if (!union_ok(t, u, shape.dense_union)) continue;
    SetFamily fam = SetFamily::make(n, std::move(members), std::string(to_string(c)));
    if (family_predicate(t, fam, shape.predicate, SearchMode::exhaustive)) return {true, std::move(fam)};
  }
  return {};
}

bool irredundant(std::span<const Subset> chosen, Subset target) {
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    Mask others = 0;
    for (std::size_t j = 0; j < chosen.size(); ++j)
      if (j != i) others |= chosen[j].bits();
    if ((chosen[i].bits() & target.bits() & ~others) == 0) return false;
  }
  return true;
}

// Definitional check on a bounded sample of covers: every irredundant cover
// of `target` by `members` has a finite subfamily whose images under
// `transform` cover `target`. The subfamily tried is the cover itself.
template <typename Transform>
bool bounded_finite_subcover(std::span<const Subset> members, Subset target, Transform transform) {
  bool ok = true;
  for_each_irredundant_cover(members, target, kBoundedBudget, [&](const SetFamily& cover) {
    Subset u = Subset::empty(target.universe());
    for (Subset m : cover.members) u |= transform(m);
    ok = target.subset_of(u);
    return ok;
  });
  return ok;
}

bool extremally_disconnected(const Topology& t) {
  return std::all_of(t.opens().begin(), t.opens().end(), [&](Subset u) { return t.is_open(t.closure(u)); });
}

bool hausdorff(const Topology& t) {
  for (int x = 0; x < t.size(); ++x)
    for (int y = x + 1; y < t.size(); ++y)
      if (t.min_nbhd(x).meets(t.min_nbhd(y))) return false;
  return true;
}

// Disjoint closed A, B are separated iff their smallest open supersets are
// disjoint. It suffices to test A = Cl{a}, B = Cl{b}: any failing pair of
// closed sets contains such a failing pair of point closures.
bool normal(const Topology& t) {
  const int n = t.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Subset ca = t.closure(Subset::singleton(n, a));
      const Subset cb = t.closure(Subset::singleton(n, b));
      if (!ca.meets(cb) && t.open_hull(ca).meets(t.open_hull(cb))) return false;
    }
  return true;
}

}  // namespace

std::string_view to_string(FamilyPredicate p) { return lookup(kFamilyTags, p); }
std::string_view to_string(RefinementConstraint c) { return lookup(kConstraintTags, c); }
std::string_view to_string(PropertyId p) { return lookup(kPropertyTags, p); }
std::optional<PropertyId> parse_property(std::string_view tag) { return reverse_lookup(kPropertyTags, tag); }
std::optional<RefinementConstraint> parse_constraint(std::string_view tag) {
  return reverse_lookup(kConstraintTags, tag);
}

std::string_view to_string(Reason r) {
  return r == Reason::computed ? "computed" : "finite-space theorem";
}

SetFamily SetFamily::make(int n, std::vector<Subset> members, std::string label, bool allow_duplicates) {
  for (Subset m : members)
    if (m.universe() != n) throw InputError("family member does not fit the point count");
  if (!allow_duplicates) {
    auto sorted = members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("family has a repeated member");
  }
  return SetFamily{n, std::move(members), std::move(label), allow_duplicates};
}

Subset SetFamily::union_all() const {
  Subset u = Subset::empty(n);
  for (Subset m : members) u |= m;
  return u;
}

bool refines(const SetFamily& f, const SetFamily& g) {
  if (f.n != g.n) throw InputError("families have different point counts");
  return std::all_of(f.members.begin(), f.members.end(), [&](Subset a) { return inside_some(a, g); });
}

std::optional<std::vector<std::vector<int>>> find_partition(const Topology& t, const SetFamily& f,
                                                            FamilyPredicate base) {
  check_same_size(t, f);
  const int k = static_cast<int>(f.members.size());
  std::vector<std::vector<int>> groups;

  auto group_ok = [&](const std::vector<int>& g) {
    std::vector<Subset> ms;
    for (int i : g) ms.push_back(f.members[i]);
    return base_predicate(t, SetFamily{f.n, std::move(ms), {}, true}, base);
  };

  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == k) return true;
    for (auto& g : groups) {
      g.push_back(i);
      if (group_ok(g) && place(i + 1)) return true;
      g.pop_back();
    }
    groups.push_back({i});
    if (group_ok(groups.back()) && place(i + 1)) return true;
    groups.pop_back();
    return false;
  };
  if (!place(0)) return std::nullopt;
  return groups;
}

bool family_predicate(const Topology& t, const SetFamily& f, FamilyPredicate pred, SearchMode mode) {
  check_same_size(t, f);
  switch (pred) {
    case FamilyPredicate::sigma_discrete:
    case FamilyPredicate::sigma_closure_preserving: {
      const FamilyPredicate base = base_of(pred);
      if (mode == SearchMode::exhaustive) return find_partition(t, f, base).has_value();
      // Singleton partition: a one-member family is discrete and closure-preserving.
      return std::all_of(f.members.begin(), f.members.end(), [&](Subset m) {
        return base_predicate(t, SetFamily{f.n, {m}, {}, true}, base);
      });
    }
    default: return base_predicate(t, f, pred);
  }
}

SetFamily canonical_alpha_cover(const Topology& t) {
  const Topology alpha = alpha_topology(t);
  std::vector<Subset> members;
  for (int x = 0; x < t.size(); ++x) members.push_back(alpha.min_nbhd(x));
  return sorted_family(t.size(), std::move(members), "canonical alpha-open cover");
}

SetFamily canonical_open_cover(const Topology& t) {
  std::vector<Subset> members;
  for (int x = 0; x < t.size(); ++x) members.push_back(t.min_nbhd(x));
  return sorted_family(t.size(), std::move(members), "canonical open cover");
}

RefinementResult has_refinement(const Topology& t, const SetFamily& cover, RefinementConstraint constraint,
                                SearchMode mode) {
  check_same_size(t, cover);
  if (!cover.covers()) throw InputError("refinement requested for a family that does not cover X");
  return mode == SearchMode::simplified ? simplified_refinement(t, cover, constraint)
                                        : exhaustive_refinement(t, cover, constraint);
}

bool for_each_irredundant_cover(std::span<const Subset> members, Subset target, std::size_t budget,
                                const std::function<bool(const SetFamily&)>& visit) {
  const int n = target.universe();
  std::vector<Subset> useful;
  for (Subset m : members)
    if (m.meets(target)) useful.push_back(m);

  std::vector<Subset> chosen;
  std::size_t visited = 0;
  bool stopped = false;
  bool within_budget = true;

  std::function<void(std::size_t, Mask)> extend = [&](std::size_t start, Mask covered) {
    for (std::size_t i = start; i < useful.size() && !stopped; ++i) {
      if ((useful[i].bits() & target.bits() & ~covered) == 0) continue;
      chosen.push_back(useful[i]);
      if (irredundant(chosen, target)) {
        const Mask now = static_cast<Mask>(covered | useful[i].bits());
        if (target.subset_of(Subset::raw(n, now))) {
          if (++visited > budget) {
            within_budget = false;
            stopped = true;
          } else if (!visit(SetFamily{n, chosen, "irredundant cover", false})) {
            stopped = true;
          }
        } else {
          extend(i + 1, now);
        }
      }
      chosen.pop_back();
    }
  };
  if (target.empty()) {
    visit(SetFamily{n, {}, "irredundant cover", false});
    return true;
  }
  extend(0, 0);
  return within_budget;
}

bool every_cover_has_refinement(const SpaceAnalysis& space, ClassKind cover_kind, RefinementConstraint constraint,
                                SearchMode mode) {
  const Topology& t = space.space();
  if (mode == SearchMode::simplified) {
    // The canonical cover refines every cover of its kind, and refinement composes.
    if (cover_kind == ClassKind::open) return has_refinement(t, canonical_open_cover(t), constraint).found;
    if (cover_kind == ClassKind::alpha_open) return has_refinement(t, canonical_alpha_cover(t), constraint).found;
    // Otherwise every cover is its own refinement when its members already
    // belong to the constrained class: finite families are locally finite.
    const ConstraintShape shape = shape_of(constraint);
    const SetClass covers = space.set_class(cover_kind);
    for (Subset m : covers.members)
      if (!in_member_class(t, m, shape.member_kind))
        throw std::logic_error("no finite-space reduction for this cover kind and constraint");
    return true;
  }

  const SetClass cls = space.set_class(cover_kind);
  bool all = true;
  const bool complete = for_each_irredundant_cover(cls.members, t.full(), kCoverBudget, [&](const SetFamily& cover) {
    all = has_refinement(t, cover, constraint, SearchMode::exhaustive).found;
    return all;
  });
  if (!complete) throw BudgetError("too many irredundant covers for exhaustive mode");
  return all;
}

std::span<const RefinementPairing> refinement_pairings() { return kPairings; }

bool is_paracompact(const SpaceAnalysis& space, SearchMode mode) {
  return every_cover_has_refinement(space, ClassKind::open, RefinementConstraint::open_locally_finite, mode);
}

PropertyResult evaluate_property(const SpaceAnalysis& space, PropertyId prop, SearchMode mode) {
  const Topology& t = space.space();
  const Subset x = t.full();
  auto identity = [](Subset m) { return m; };
  auto finite = [](bool holds) { return PropertyResult{holds, Reason::finite_space_theorem}; };
  auto computed = [](bool holds) { return PropertyResult{holds, Reason::computed}; };

  switch (prop) {
    case PropertyId::compact: return finite(bounded_finite_subcover(t.opens(), x, identity));
    case PropertyId::semi_compact: return finite(bounded_finite_subcover(space.semi_open_sets(), x, identity));
    case PropertyId::s_closed_upper:
      return finite(bounded_finite_subcover(space.semi_open_sets(), x, [&](Subset m) { return t.closure(m); }));
    case PropertyId::s_closed_lower:
      return finite(bounded_finite_subcover(space.semi_open_sets(), x, [&](Subset m) { return semi_closure(t, m); }));
    case PropertyId::sg_compact:
      return finite(bounded_finite_subcover(space.set_class(ClassKind::sg_open).members, x, identity));
    case PropertyId::rc_lindelof:
      return finite(bounded_finite_subcover(space.set_class(ClassKind::regular_closed).members, x, identity));
    case PropertyId::para_rc_lindelof:
      return finite(every_cover_has_refinement(space, ClassKind::regular_closed,
                                               RefinementConstraint::regular_closed_locally_countable, mode));
    case PropertyId::para_s_closed:
      return finite(every_cover_has_refinement(space, ClassKind::semi_open,
                                               RefinementConstraint::semi_open_locally_finite_dense_union, mode));
    case PropertyId::locally_s_closed_upper:
    case PropertyId::locally_s_closed_lower: {
      const bool upper = prop == PropertyId::locally_s_closed_upper;
      bool all = true;
      // The minimal open neighbourhood of each point is tested for relative S-/s-closedness.
      for (int p = 0; p < t.size() && all; ++p)
        all = bounded_finite_subcover(space.semi_open_sets(), t.min_nbhd(p),
                                      [&](Subset m) { return upper ? t.closure(m) : semi_closure(t, m); });
      return finite(all);
    }
    case PropertyId::subparacompact:
      return computed(
          every_cover_has_refinement(space, ClassKind::open, RefinementConstraint::closed_sigma_discrete, mode));
    case PropertyId::alpha_subparacompact:
      return computed(
          every_cover_has_refinement(space, ClassKind::alpha_open, RefinementConstraint::closed_sigma_discrete, mode));
    case PropertyId::alpha_paracompact:
      return computed(
          every_cover_has_refinement(space, ClassKind::alpha_open, RefinementConstraint::open_locally_finite, mode));
    case PropertyId::extremally_disconnected: return computed(extremally_disconnected(t));
    case PropertyId::hausdorff: return computed(hausdorff(t));
    case PropertyId::normal: return computed(normal(t));
    case PropertyId::nodec: return computed(space.alpha() == t);
    case PropertyId::alpha_compact:
      return finite(bounded_finite_subcover(space.alpha().opens(), x, identity));
  }
  return {};
}

bool check_property(const Topology& t, PropertyId prop) { return evaluate_property(SpaceAnalysis(t), prop).holds; }

}  // namespace fintop
