#include <atomic>
#include <cstdlib>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fintop/census.hpp"
#include "fintop/parallel.hpp"
#include "fintop/verifier.hpp"
#include "helpers.hpp"

using namespace fintop;

TEST_CASE("parallel_for fills every slot with several workers") {
  std::vector<int> out(1000, -1);
  parallel_for(out.size(), [&](std::size_t i) { out[i] = static_cast<int>(i * i % 97); }, 4);
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i % 97));
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) { if (i == 7) throw InputError("boom"); }, 3), InputError);
}

TEST_CASE("suite examples") {
  const auto three = enumerate_topologies(3, false);
  const Report r = run_suite(SuiteId::lemma_2_1, three);
  CHECK(r.spaces_checked == 29);
  CHECK(r.passed());
  CHECK(format_report(r) == "lemma-2.1: 29 checked, 0 violations, 0 vacuous\n");

  const std::vector<Topology> d2{Topology::discrete(2)};
  const Report t32 = run_suite(SuiteId::thm_t32, d2);
  CHECK(t32.passed());
  CHECK(t32.vacuous_count == 0);

  const Report fm1 = run_suite(SuiteId::thm_fm1, enumerate_topologies(2, false));
  CHECK(fm1.passed());
  CHECK(fm1.spaces_checked > 0);
}

TEST_CASE("suite tags round trip and describe their claims") {
  std::set<std::string_view> tags;
  for (SuiteId s : kAllSuites) {
    CHECK(parse_suite(to_string(s)) == s);
    CHECK(!describe(s).empty());
    tags.insert(to_string(s));
  }
  CHECK(tags.size() == 17);
  CHECK_FALSE(parse_suite("thm-9.9"));
}

TEST_CASE("every suite passes on the labeled census up to four points") {
  for (int n = 1; n <= 4; ++n) {
    const auto spaces = enumerate_topologies(n, false);
    for (SuiteId s : kAllSuites) {
      const Report r = run_suite(s, spaces);
      CHECK_MESSAGE(r.passed(), format_report(r));
      CHECK(r.vacuous_count <= r.spaces_checked);
    }
  }
}

TEST_CASE("every suite passes on five points up to homeomorphism") {
  const auto spaces = enumerate_topologies(5, true);
  for (SuiteId s : kAllSuites) {
    const Report r = run_suite(s, spaces);
    CHECK_MESSAGE(r.passed(), format_report(r));
  }
}

TEST_CASE("reports and searches are deterministic") {
  const auto spaces = enumerate_topologies(3, false);
  for (SuiteId s : kAllSuites)
    CHECK(report_to_json(run_suite(s, spaces)).dump() == report_to_json(run_suite(s, spaces)).dump());
  for (SearchPredicate p : kAllSearchPredicates)
    CHECK(search_to_json(search(p, 3)).dump() == search_to_json(search(p, 3)).dump());
}

TEST_CASE("reports do not depend on the worker count") {
  const auto spaces = enumerate_topologies(4, false);
  std::vector<std::string> serial;
  ::setenv("FINTOP_THREADS", "1", 1);
  for (SuiteId s : kAllSuites) serial.push_back(report_to_json(run_suite(s, spaces)).dump());
  std::ostringstream c1;
  write_census(build_census(4, false), c1);
  ::setenv("FINTOP_THREADS", "5", 1);
  std::size_t i = 0;
  for (SuiteId s : kAllSuites) CHECK(report_to_json(run_suite(s, spaces)).dump() == serial[i++]);
  std::ostringstream c5;
  write_census(build_census(4, false), c5);
  CHECK(c1.str() == c5.str());
  CHECK(enumerate_topologies(4, false).size() == 355);
  ::unsetenv("FINTOP_THREADS");
}

TEST_CASE("gc-mismatch search reproduces the three-point example") {
  const SearchResult r = search(SearchPredicate::gc_mismatch, 3);
  REQUIRE(r.first_n);
  CHECK(*r.first_n == 3);
  REQUIRE(r.levels.size() == 3);
  CHECK(r.levels[0].witnesses == 0);
  CHECK(r.levels[1].witnesses == 0);
  bool found = false;
  for (const Witness& w : r.witnesses) {
    CHECK(recheck(w));
    if (w.spaces.front() == testing::particular_point() && w.subsets.front() == Subset::of(3, {0, 1})) {
      found = true;
      CHECK(testing::masks(w.spaces.at(1).opens()) == std::vector<Mask>{0b000, 0b001, 0b011, 0b101, 0b111});
    }
  }
  CHECK(found);
  const std::string text = format_search(r);
  CHECK(text.find("T^α = {∅,{a},{a,b},{a,c},X}") != std::string::npos);
  CHECK(text.find("none for n <= 2") != std::string::npos);

  const SearchResult small = search(SearchPredicate::gc_mismatch, 2);
  CHECK(small.witnesses.empty());
  CHECK_FALSE(small.first_n);
}

TEST_CASE("compact but not alpha-subparacompact at three points") {
  const SearchResult r = search(SearchPredicate::compact_not_alpha_subparacompact, 3);
  bool found = false;
  for (const Witness& w : r.witnesses) {
    CHECK(recheck(w));
    found = found || w.spaces.front() == testing::particular_point();
  }
  CHECK(found);
}

TEST_CASE("witness sets are closed under relabeling at three points") {
  for (SearchPredicate p : {SearchPredicate::gc_mismatch, SearchPredicate::compact_not_alpha_subparacompact,
                            SearchPredicate::non_nodec, SearchPredicate::question2_witness}) {
    const SearchResult r = search(p, 3);
    std::set<std::string> spaces;
    for (const Witness& w : r.witnesses)
      if (w.spaces.front().size() == 3) spaces.insert(census_id(w.spaces.front()));
    std::vector<int> perm{0, 1, 2};
    for (const Witness& w : r.witnesses) {
      if (w.spaces.front().size() != 3) continue;
      std::sort(perm.begin(), perm.end());
      do {
        CHECK(spaces.count(census_id(relabel(w.spaces.front(), perm))));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("question searches are reproducible and recheck") {
  for (SearchPredicate p : {SearchPredicate::question1_witness, SearchPredicate::question2_witness}) {
    const SearchResult r = search(p, 3);
    for (const Witness& w : r.witnesses) CHECK(recheck(w));
  }
  CHECK_THROWS_AS(search(SearchPredicate::gc_mismatch, 9), BudgetError);
  for (SearchPredicate p : kAllSearchPredicates) CHECK(parse_search_predicate(to_string(p)) == p);
}
