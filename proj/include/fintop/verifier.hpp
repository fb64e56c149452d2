#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/io.hpp"
#include "fintop/maps.hpp"
#include "fintop/topology.hpp"

namespace fintop {

enum class SuiteId {
  lemma_2_1,
  prop_p1,
  lemma_2_2,
  prop_2_1,
  thm_2_1,
  cor_locally,
  thm_2_2,
  thm_2_3,
  thm_t29,
  subpara_implication,
  thm_t32,
  cor_closed_hereditary,
  lemma_lfm1,
  thm_fm1,
  prop_hausdorff_alpha_para,
  thm_final,
  shared_classes,
};

inline constexpr SuiteId kAllSuites[] = {
    SuiteId::lemma_2_1,      SuiteId::prop_p1,
    SuiteId::lemma_2_2,      SuiteId::prop_2_1,
    SuiteId::thm_2_1,        SuiteId::cor_locally,
    SuiteId::thm_2_2,        SuiteId::thm_2_3,
    SuiteId::thm_t29,        SuiteId::subpara_implication,
    SuiteId::thm_t32,        SuiteId::cor_closed_hereditary,
    SuiteId::lemma_lfm1,     SuiteId::thm_fm1,
    SuiteId::prop_hausdorff_alpha_para, SuiteId::thm_final,
    SuiteId::shared_classes,
};

std::string_view to_string(SuiteId s);
std::optional<SuiteId> parse_suite(std::string_view tag);
/// One-line statement of the claim a suite checks.
std::string_view describe(SuiteId s);

struct Violation {
  std::string space_id;
  std::string details;
};

struct Report {
  SuiteId suite = SuiteId::lemma_2_1;
  /// Spaces examined; for thm-fm1, surjective maps examined.
  std::size_t spaces_checked = 0;
  /// Items whose hypotheses never held (always 0 for identity suites).
  std::size_t vacuous_count = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

/// Runs one suite over the given spaces. thm-fm1 sweeps surjections between
/// every ordered pair (X, Y) of the given spaces with |Y| <= |X|.
Report run_suite(SuiteId suite, std::span<const Topology> spaces);

std::string format_report(const Report& r);
ojson report_to_json(const Report& r);

enum class SearchPredicate {
  gc_mismatch,
  compact_not_alpha_subparacompact,
  non_nodec,
  question1_witness,
  question2_witness,
};

inline constexpr SearchPredicate kAllSearchPredicates[] = {
    SearchPredicate::gc_mismatch, SearchPredicate::compact_not_alpha_subparacompact, SearchPredicate::non_nodec,
    SearchPredicate::question1_witness, SearchPredicate::question2_witness,
};

std::string_view to_string(SearchPredicate p);
std::optional<SearchPredicate> parse_search_predicate(std::string_view tag);

struct Witness {
  SearchPredicate predicate = SearchPredicate::gc_mismatch;
  /// gc-mismatch and non-nodec: {T, T^alpha}. question1: {A, B, A x B}. Otherwise {T}.
  std::vector<Topology> spaces;
  std::vector<Subset> subsets;
  std::string explanation;
};

/// Re-evaluates the witness predicate from scratch.
bool recheck(const Witness& w);

struct SearchLevel {
  int n = 0;
  std::size_t scanned = 0;
  std::size_t witnesses = 0;
};

struct SearchResult {
  SearchPredicate predicate = SearchPredicate::gc_mismatch;
  int max_n = 0;
  /// Levels scanned in increasing n, stopping at the first with witnesses.
  std::vector<SearchLevel> levels;
  std::optional<int> first_n;
  std::vector<Witness> witnesses;
};

/// Scans n = 1, 2, ... up to `max_n` and reports every witness at the first
/// level that has any. Labeled census spaces are scanned, except for
/// question1-witness, where n is the larger factor size and factors are the
/// homeomorphism-class representatives with a product of at most 16 points.
/// Throws BudgetError past the census limits.
SearchResult search(SearchPredicate predicate, int max_n);

std::string format_search(const SearchResult& r);
ojson search_to_json(const SearchResult& r);

}  // namespace fintop
