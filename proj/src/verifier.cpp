#include "fintop/verifier.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "fintop/census.hpp"
#include "fintop/covers.hpp"
#include "fintop/operators.hpp"
#include "fintop/parallel.hpp"

namespace fintop {

namespace {

struct SuiteInfo {
  SuiteId id;
  std::string_view tag;
  std::string_view claim;
};

constexpr SuiteInfo kSuites[] = {
    {SuiteId::lemma_2_1, "lemma-2.1", "SO(T) = SO(T^α)"},
    {SuiteId::prop_p1, "prop-p1", "sCl_α A = sCl A for all A, and SGC(T) = SGC(T^α)"},
    {SuiteId::lemma_2_2, "lemma-2.2", "Cl_α A = Cl A for every semi-open A"},
    {SuiteId::prop_2_1, "prop-2.1", "RC(T) = RC(T^α)"},
    {SuiteId::thm_2_1, "thm-2.1",
     "semi-compact, S-closed, s-closed, rc-Lindelof and sg-compact agree on T and T^α"},
    {SuiteId::cor_locally, "cor-locally", "locally S-closed and locally s-closed agree on T and T^α"},
    {SuiteId::thm_2_2, "thm-2.2",
     "para-S-closed(T), RC-cover refinement in T, RC-cover refinement in T^α, para-S-closed(T^α) agree"},
    {SuiteId::thm_2_3, "thm-2.3", "para-rc-Lindelof agrees on T and T^α"},
    {SuiteId::thm_t29, "thm-t29", "extremally disconnected and rc-Lindelof imply para-S-closed"},
    {SuiteId::subpara_implication, "subpara-implication", "alpha-subparacompact implies subparacompact"},
    {SuiteId::thm_t32, "thm-t32", "F_sigma-g-alpha-closed subspaces of alpha-subparacompact spaces are alpha-subparacompact"},
    {SuiteId::cor_closed_hereditary, "cor-closed-hereditary",
     "closed subspaces of alpha-subparacompact spaces are alpha-subparacompact"},
    {SuiteId::lemma_lfm1, "lemma-lfm1",
     "alpha-subparacompact iff every alpha-open cover has a sigma-closure-preserving closed refinement"},
    {SuiteId::thm_fm1, "thm-fm1", "closed alpha-irresolute images of alpha-subparacompact spaces are alpha-subparacompact"},
    {SuiteId::prop_hausdorff_alpha_para, "prop-hausdorff-alpha-para",
     "Hausdorff and alpha-paracompact imply T^α normal and T nodec"},
    {SuiteId::thm_final, "thm-final", "Hausdorff and alpha-paracompact imply T^α Hausdorff and paracompact"},
    {SuiteId::shared_classes, "shared-classes",
     "preopen, beta-open, nowhere dense, dense, codense, clopen and alpha-open sets agree on T and T^α"},
};

constexpr std::pair<SearchPredicate, std::string_view> kPredicateTags[] = {
    {SearchPredicate::gc_mismatch, "gc-mismatch"},
    {SearchPredicate::compact_not_alpha_subparacompact, "compact-not-alpha-subparacompact"},
    {SearchPredicate::non_nodec, "non-nodec"},
    {SearchPredicate::question1_witness, "question1-witness"},
    {SearchPredicate::question2_witness, "question2-witness"},
};

// Largest space on which lemma-lfm1 quantifies over every irredundant cover.
constexpr int kLfm1AllCoversLimit = 3;

struct Outcome {
  bool vacuous = false;
  std::vector<std::string> problems;
};

std::string family(const std::vector<Subset>& members) { return letters_family(members); }

bool holds(const SpaceAnalysis& s, PropertyId p) { return evaluate_property(s, p).holds; }

void compare_classes(const SpaceAnalysis& t, const SpaceAnalysis& a, ClassKind kind, Outcome& out) {
  const SetClass lhs = t.set_class(kind);
  const SetClass rhs = a.set_class(kind);
  if (!lhs.same_members(rhs))
    out.problems.push_back(std::string(to_string(kind)) + ": T gives " + family(lhs.members) + ", T^α gives " +
                           family(rhs.members));
}

void compare_property(const SpaceAnalysis& t, const SpaceAnalysis& a, PropertyId p, Outcome& out) {
  const bool lhs = holds(t, p);
  const bool rhs = holds(a, p);
  if (lhs != rhs)
    out.problems.push_back(std::string(to_string(p)) + ": T " + (lhs ? "true" : "false") + ", T^α " +
                           (rhs ? "true" : "false"));
}

std::vector<Subset> all_subsets(int n) {
  std::vector<Subset> out;
  for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) out.push_back(Subset::raw(n, static_cast<Mask>(i)));
  return out;
}

// Subspaces on each qualifying nonempty subset of an alpha-subparacompact space.
Outcome hereditary(const SpaceAnalysis& s, ClassKind subset_kind) {
  Outcome out;
  if (!holds(s, PropertyId::alpha_subparacompact)) {
    out.vacuous = true;
    return out;
  }
  for (Subset a : s.set_class(subset_kind).members) {
    if (a.empty()) continue;
    const Subspace sub = subspace(s.space(), a);
    if (!check_property(sub.space, PropertyId::alpha_subparacompact))
      out.problems.push_back("subspace on " + to_letters(a) + " is not alpha-subparacompact");
  }
  return out;
}

Outcome check_space(SuiteId suite, const Topology& t) {
  const SpaceAnalysis s(t);
  const SpaceAnalysis a(s.alpha());
  Outcome out;
  switch (suite) {
    case SuiteId::lemma_2_1: compare_classes(s, a, ClassKind::semi_open, out); break;
    case SuiteId::prop_p1:
      for (Subset x : all_subsets(t.size())) {
        const Subset lhs = s.hull(x, ClosureKind::alpha_semi_closure);
        const Subset rhs = s.hull(x, ClosureKind::semi_closure);
        if (lhs != rhs)
          out.problems.push_back("sCl_α " + to_letters(x) + " = " + to_letters(lhs) + " but sCl = " +
                                 to_letters(rhs));
      }
      compare_classes(s, a, ClassKind::sg_closed, out);
      break;
    case SuiteId::lemma_2_2:
      for (Subset x : s.semi_open_sets()) {
        const Subset lhs = s.hull(x, ClosureKind::alpha_closure);
        const Subset rhs = s.hull(x, ClosureKind::closure);
        if (lhs != rhs)
          out.problems.push_back("Cl_α " + to_letters(x) + " = " + to_letters(lhs) + " but Cl = " + to_letters(rhs));
      }
      break;
    case SuiteId::prop_2_1: compare_classes(s, a, ClassKind::regular_closed, out); break;
    case SuiteId::shared_classes:
      for (ClassKind k : {ClassKind::preopen, ClassKind::beta_open, ClassKind::nowhere_dense, ClassKind::dense,
                          ClassKind::codense, ClassKind::clopen, ClassKind::alpha_open})
        compare_classes(s, a, k, out);
      break;
    case SuiteId::thm_2_1:
      for (PropertyId p : {PropertyId::semi_compact, PropertyId::s_closed_upper, PropertyId::s_closed_lower,
                           PropertyId::rc_lindelof, PropertyId::sg_compact})
        compare_property(s, a, p, out);
      break;
    case SuiteId::cor_locally:
      compare_property(s, a, PropertyId::locally_s_closed_upper, out);
      compare_property(s, a, PropertyId::locally_s_closed_lower, out);
      break;
    case SuiteId::thm_2_2: {
      const bool ca = holds(s, PropertyId::para_s_closed);
      const bool cb =
          every_cover_has_refinement(s, ClassKind::regular_closed, RefinementConstraint::regular_closed_locally_finite);
      const bool cc =
          every_cover_has_refinement(a, ClassKind::regular_closed, RefinementConstraint::regular_closed_locally_finite);
      const bool cd = holds(a, PropertyId::para_s_closed);
      if (!(ca == cb && cb == cc && cc == cd))
        out.problems.push_back(std::string("conditions (a)-(d) = ") + (ca ? "T" : "F") + (cb ? "T" : "F") +
                               (cc ? "T" : "F") + (cd ? "T" : "F"));
      break;
    }
    case SuiteId::thm_2_3: compare_property(s, a, PropertyId::para_rc_lindelof, out); break;
    case SuiteId::thm_t29:
      if (!(holds(s, PropertyId::extremally_disconnected) && holds(s, PropertyId::rc_lindelof)))
        out.vacuous = true;
      else if (!holds(s, PropertyId::para_s_closed))
        out.problems.push_back("extremally disconnected rc-Lindelof space is not para-S-closed");
      break;
    case SuiteId::subpara_implication:
      if (!holds(s, PropertyId::alpha_subparacompact))
        out.vacuous = true;
      else if (!holds(s, PropertyId::subparacompact))
        out.problems.push_back("alpha-subparacompact but not subparacompact");
      break;
    case SuiteId::thm_t32: return hereditary(s, ClassKind::f_sigma_g_alpha_closed);
    case SuiteId::cor_closed_hereditary: return hereditary(s, ClassKind::closed);
    case SuiteId::lemma_lfm1: {
      const bool lhs = holds(s, PropertyId::alpha_subparacompact);
      const auto cp = RefinementConstraint::closed_sigma_closure_preserving;
      const bool rhs = t.size() <= kLfm1AllCoversLimit
                           ? every_cover_has_refinement(s, ClassKind::alpha_open, cp, SearchMode::exhaustive)
                           : has_refinement(t, canonical_alpha_cover(t), cp, SearchMode::exhaustive).found;
      if (lhs != rhs)
        out.problems.push_back(std::string("alpha-subparacompact ") + (lhs ? "true" : "false") +
                               " but sigma-closure-preserving refinement form " + (rhs ? "true" : "false"));
      break;
    }
    case SuiteId::prop_hausdorff_alpha_para:
      if (!(holds(s, PropertyId::hausdorff) && holds(s, PropertyId::alpha_paracompact))) {
        out.vacuous = true;
      } else {
        if (!holds(a, PropertyId::normal)) out.problems.push_back("T^α is not normal");
        if (!holds(s, PropertyId::nodec)) out.problems.push_back("T is not nodec");
      }
      break;
    case SuiteId::thm_final:
      if (!(holds(s, PropertyId::hausdorff) && holds(s, PropertyId::alpha_paracompact))) {
        out.vacuous = true;
      } else {
        if (!holds(a, PropertyId::hausdorff)) out.problems.push_back("T^α is not Hausdorff");
        if (!is_paracompact(a)) out.problems.push_back("T^α is not paracompact");
      }
      break;
    case SuiteId::thm_fm1: break;
  }
  return out;
}

struct Fm1Space {
  Topology space;
  Topology alpha;
  bool alpha_subparacompact = false;
  std::string id;
};

Report run_fm1(std::span<const Topology> spaces) {
  std::vector<Fm1Space> info(spaces.size());
  parallel_for(spaces.size(), [&](std::size_t i) {
    const SpaceAnalysis s(spaces[i]);
    info[i] = {spaces[i], s.alpha(), holds(s, PropertyId::alpha_subparacompact), census_id(spaces[i])};
  });

  struct Tally {
    std::size_t maps = 0;
    std::size_t vacuous = 0;
    std::vector<Violation> violations;
  };
  // One slot per domain space.
  std::vector<Tally> tallies(spaces.size());
  parallel_for(spaces.size(), [&](std::size_t di) {
    const Fm1Space& x = info[di];
    Tally& tally = tallies[di];
    for (const Fm1Space& y : info) {
      if (y.space.size() > x.space.size()) continue;
      const int m = y.space.size();
      std::vector<Subset> closed_x;
      for (Subset u : x.space.opens()) closed_x.push_back(u.complement());
      for_each_map(x.space, y.space, /*surjective_only=*/true, [&](const std::vector<int>& fn) {
        ++tally.maps;
        auto image = [&](Subset s) {
          Mask out = 0;
          for (int p : s.points()) out |= static_cast<Mask>(1u << fn[p]);
          return Subset::raw(m, out);
        };
        auto preimage = [&](Subset s) {
          Mask out = 0;
          for (std::size_t p = 0; p < fn.size(); ++p)
            if (s.contains(fn[p])) out |= static_cast<Mask>(1u << p);
          return Subset::raw(x.space.size(), out);
        };
        const bool closed =
            std::all_of(closed_x.begin(), closed_x.end(), [&](Subset c) { return y.space.is_closed(image(c)); });
        const bool irresolute = closed && std::all_of(y.alpha.opens().begin(), y.alpha.opens().end(),
                                                      [&](Subset v) { return x.alpha.is_open(preimage(v)); });
        if (!closed || !irresolute || !x.alpha_subparacompact) {
          ++tally.vacuous;
          return;
        }
        if (!y.alpha_subparacompact) {
          std::string table;
          for (int v : fn) table += point_letter(v);
          tally.violations.push_back({x.id, "map onto " + y.id + " with values " + table + " has a non-alpha-subparacompact image"});
        }
      });
    }
  });

  Report r;
  r.suite = SuiteId::thm_fm1;
  for (auto& t : tallies) {
    r.spaces_checked += t.maps;
    r.vacuous_count += t.vacuous;
    r.violations.insert(r.violations.end(), t.violations.begin(), t.violations.end());
  }
  return r;
}

}  // namespace

std::string_view to_string(SuiteId s) {
  for (const auto& info : kSuites)
    if (info.id == s) return info.tag;
  return "?";
}

std::optional<SuiteId> parse_suite(std::string_view tag) {
  for (const auto& info : kSuites)
    if (info.tag == tag) return info.id;
  return std::nullopt;
}

std::string_view describe(SuiteId s) {
  for (const auto& info : kSuites)
    if (info.id == s) return info.claim;
  return "";
}

Report run_suite(SuiteId suite, std::span<const Topology> spaces) {
  if (suite == SuiteId::thm_fm1) return run_fm1(spaces);
  std::vector<Outcome> outcomes(spaces.size());
  parallel_for(spaces.size(), [&](std::size_t i) { outcomes[i] = check_space(suite, spaces[i]); });
  Report r;
  r.suite = suite;
  r.spaces_checked = spaces.size();
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    if (outcomes[i].vacuous) ++r.vacuous_count;
    for (auto& p : outcomes[i].problems) r.violations.push_back({census_id(spaces[i]), std::move(p)});
  }
  return r;
}

std::string format_report(const Report& r) {
  std::ostringstream out;
  out << to_string(r.suite) << ": " << r.spaces_checked << " checked, " << r.violations.size() << " violations, "
      << r.vacuous_count << " vacuous\n";
  for (const auto& v : r.violations) out << "  VIOLATION " << v.space_id << ": " << v.details << '\n';
  return out.str();
}

ojson report_to_json(const Report& r) {
  ojson j;
  j["suite"] = std::string(to_string(r.suite));
  j["checked"] = r.spaces_checked;
  j["vacuous"] = r.vacuous_count;
  ojson vs = ojson::array();
  for (const auto& v : r.violations) {
    ojson e;
    e["space"] = v.space_id;
    e["details"] = v.details;
    vs.push_back(std::move(e));
  }
  j["violations"] = std::move(vs);
  return j;
}

std::string_view to_string(SearchPredicate p) {
  for (const auto& [k, tag] : kPredicateTags)
    if (k == p) return tag;
  return "?";
}

std::optional<SearchPredicate> parse_search_predicate(std::string_view tag) {
  for (const auto& [k, t] : kPredicateTags)
    if (t == tag) return k;
  return std::nullopt;
}

namespace {

bool g_closed_in(const Topology& t, Subset a) {
  const Subset cl = t.closure(a);
  return std::all_of(t.opens().begin(), t.opens().end(), [&](Subset u) { return !a.subset_of(u) || cl.subset_of(u); });
}

std::vector<Witness> witnesses_in(SearchPredicate p, const Topology& t) {
  std::vector<Witness> out;
  const SpaceAnalysis s(t);
  const Topology& alpha = s.alpha();
  switch (p) {
    case SearchPredicate::gc_mismatch:
      for (Subset a : all_subsets(t.size())) {
        const bool in_t = g_closed_in(t, a);
        const bool in_alpha = g_closed_in(alpha, a);
        if (in_t == in_alpha) continue;
        out.push_back({p, {t, alpha}, {a},
                       "A = " + to_letters(a) + " is " + (in_t ? "" : "not ") + "g-closed in T = " +
                           letters_family(t.opens()) + " but " + (in_alpha ? "" : "not ") +
                           "g-closed in T^α = " + letters_family(alpha.opens())});
      }
      break;
    case SearchPredicate::compact_not_alpha_subparacompact:
      if (holds(s, PropertyId::compact) && !holds(s, PropertyId::alpha_subparacompact))
        out.push_back({p, {t}, {},
                       "T = " + letters_family(t.opens()) + " is compact; its canonical alpha-open cover " +
                           letters_family(canonical_alpha_cover(t).members) + " has no closed refinement covering X"});
      break;
    case SearchPredicate::non_nodec:
      if (!(alpha == t))
        out.push_back({p, {t, alpha}, {},
                       "T = " + letters_family(t.opens()) + " has T^α = " + letters_family(alpha.opens())});
      break;
    case SearchPredicate::question2_witness: {
      const SpaceAnalysis a(alpha);
      if (holds(a, PropertyId::subparacompact) && !holds(s, PropertyId::alpha_subparacompact))
        out.push_back({p, {t}, {},
                       "T^α = " + letters_family(alpha.opens()) + " is subparacompact but T = " +
                           letters_family(t.opens()) + " is not alpha-subparacompact"});
      break;
    }
    case SearchPredicate::question1_witness: break;
  }
  return out;
}

std::vector<Witness> product_witnesses(const std::vector<Topology>& lhs, const std::vector<Topology>& rhs) {
  std::vector<Witness> out;
  for (const Topology& a : lhs)
    for (const Topology& b : rhs) {
      if (a.size() * b.size() > kMaxPoints) continue;
      if (!check_property(a, PropertyId::alpha_subparacompact) || !check_property(b, PropertyId::alpha_subparacompact))
        continue;
      const Topology ab = product(a, b);
      if (!check_property(ab, PropertyId::alpha_subparacompact))
        out.push_back({SearchPredicate::question1_witness, {a, b, ab}, {},
                       "A = " + letters_family(a.opens()) + " and B = " + letters_family(b.opens()) +
                           " are alpha-subparacompact but A x B is not"});
    }
  return out;
}

}  // namespace

bool recheck(const Witness& w) {
  switch (w.predicate) {
    case SearchPredicate::gc_mismatch:
      return w.spaces.size() == 2 && w.subsets.size() == 1 && w.spaces[1] == alpha_topology(w.spaces[0]) &&
             g_closed_in(w.spaces[0], w.subsets[0]) != g_closed_in(w.spaces[1], w.subsets[0]);
    case SearchPredicate::compact_not_alpha_subparacompact:
      return w.spaces.size() == 1 && check_property(w.spaces[0], PropertyId::compact) &&
             !check_property(w.spaces[0], PropertyId::alpha_subparacompact);
    case SearchPredicate::non_nodec:
      return w.spaces.size() == 2 && !(alpha_topology(w.spaces[0]) == w.spaces[0]);
    case SearchPredicate::question1_witness:
      return w.spaces.size() == 3 && product(w.spaces[0], w.spaces[1]) == w.spaces[2] &&
             check_property(w.spaces[0], PropertyId::alpha_subparacompact) &&
             check_property(w.spaces[1], PropertyId::alpha_subparacompact) &&
             !check_property(w.spaces[2], PropertyId::alpha_subparacompact);
    case SearchPredicate::question2_witness:
      return w.spaces.size() == 1 && check_property(alpha_topology(w.spaces[0]), PropertyId::subparacompact) &&
             !check_property(w.spaces[0], PropertyId::alpha_subparacompact);
  }
  return false;
}

SearchResult search(SearchPredicate predicate, int max_n) {
  if (max_n < 1) throw InputError("max-n must be positive");
  const bool products = predicate == SearchPredicate::question1_witness;
  const int limit = products ? kMaxHomeoCensus : kMaxLabeledCensus;
  if (max_n > limit)
    throw BudgetError("search limited to max-n " + std::to_string(limit) + " for " + std::string(to_string(predicate)));

  SearchResult result;
  result.predicate = predicate;
  result.max_n = max_n;
  std::vector<std::vector<Topology>> reps(1);  // reps[k]: homeomorphism representatives on k points

  for (int n = 1; n <= max_n; ++n) {
    SearchLevel level{n, 0, 0};
    std::vector<Witness> found;
    if (products) {
      reps.push_back(enumerate_topologies(n, /*up_to_homeo=*/true));
      // Pairs whose larger factor has exactly n points: (n, k) for k <= n, and (k, n) for k < n.
      for (int k = 1; k <= n; ++k) {
        if (n * k > kMaxPoints) continue;
        auto add = [&](const std::vector<Topology>& a, const std::vector<Topology>& b) {
          level.scanned += a.size() * b.size();
          auto w = product_witnesses(a, b);
          found.insert(found.end(), w.begin(), w.end());
        };
        add(reps[n], reps[k]);
        if (k < n) add(reps[k], reps[n]);
      }
    } else {
      const std::vector<Topology> spaces = enumerate_topologies(n, /*up_to_homeo=*/false);
      level.scanned = spaces.size();
      std::vector<std::vector<Witness>> per(spaces.size());
      parallel_for(spaces.size(), [&](std::size_t i) { per[i] = witnesses_in(predicate, spaces[i]); });
      for (auto& w : per) found.insert(found.end(), w.begin(), w.end());
    }
    level.witnesses = found.size();
    result.levels.push_back(level);
    if (!found.empty()) {
      result.first_n = n;
      result.witnesses = std::move(found);
      break;
    }
  }
  return result;
}

std::string format_search(const SearchResult& r) {
  std::ostringstream out;
  out << "search " << to_string(r.predicate) << " (max-n " << r.max_n << ")\n";
  for (const auto& l : r.levels)
    out << "  n=" << l.n << ": " << l.scanned << " scanned, " << l.witnesses << " witnesses\n";
  if (!r.first_n) {
    out << "no witness for n <= " << r.max_n << '\n';
    return out.str();
  }
  out << "first witnesses at n=" << *r.first_n << "; none for n <= " << *r.first_n - 1 << '\n';
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) out << "  [" << i + 1 << "] " << r.witnesses[i].explanation << '\n';
  return out.str();
}

ojson search_to_json(const SearchResult& r) {
  ojson j;
  j["predicate"] = std::string(to_string(r.predicate));
  j["max_n"] = r.max_n;
  ojson levels = ojson::array();
  for (const auto& l : r.levels) levels.push_back(ojson{{"n", l.n}, {"scanned", l.scanned}, {"witnesses", l.witnesses}});
  j["levels"] = std::move(levels);
  j["first_n"] = r.first_n ? ojson(*r.first_n) : ojson(nullptr);
  ojson ws = ojson::array();
  for (const auto& w : r.witnesses) {
    ojson e;
    ojson spaces = ojson::array();
    for (const auto& t : w.spaces) spaces.push_back(space_to_json(t));
    e["spaces"] = std::move(spaces);
    ojson subsets = ojson::array();
    for (Subset s : w.subsets) subsets.push_back(subset_to_json(s));
    e["subsets"] = std::move(subsets);
    e["explanation"] = w.explanation;
    ws.push_back(std::move(e));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

}  // namespace fintop
