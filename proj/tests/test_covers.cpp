#include "doctest.h"
#include "fintop/census.hpp"
#include "fintop/covers.hpp"
#include "fintop/io.hpp"
#include "helpers.hpp"

using namespace fintop;
using testing::particular_point;

namespace {

Subset S(std::initializer_list<int> pts) { return Subset::of(3, pts); }
SetFamily F(std::vector<Subset> m) { return SetFamily::make(3, std::move(m)); }

}  // namespace

TEST_CASE("refines") {
  const SetFamily g = F({S({0}), S({1, 2})});
  CHECK(refines(g, g));
  CHECK(refines(F({S({})}), g));
  CHECK_FALSE(refines(F({S({0, 1})}), F({S({0}), S({1})})));
  CHECK_THROWS_AS(refines(g, SetFamily::make(2, {Subset::of(2, {0})})), InputError);
}

TEST_CASE("set family duplicates") {
  CHECK_THROWS_AS(F({S({0}), S({0})}), InputError);
  CHECK(SetFamily::make(3, {S({0}), S({0})}, "dup", true).members.size() == 2);
}

TEST_CASE("family predicate examples") {
  const Topology t = particular_point();
  const SetFamily f = F({S({0}), S({1}), S({1, 2}), S({0, 2})});
  CHECK(family_predicate(t, f, FamilyPredicate::sigma_discrete));
  CHECK(family_predicate(t, f, FamilyPredicate::locally_finite));
  CHECK(family_predicate(t, f, FamilyPredicate::locally_countable));
  CHECK(family_predicate(t, F({S({0})}), FamilyPredicate::discrete));
  CHECK_FALSE(family_predicate(t, F({S({1}), S({2})}), FamilyPredicate::discrete));
}

TEST_CASE("sigma predicates: partition search agrees with the singleton shortcut") {
  for (const Topology& t : enumerate_topologies(3, false)) {
    const auto subsets = [&] {
      std::vector<Subset> v;
      for (unsigned a = 1; a < 8; ++a) v.emplace_back(3, a);
      return v;
    }();
    for (unsigned pick = 1; pick < 128; pick += 3) {
      std::vector<Subset> m;
      for (int i = 0; i < 7; ++i)
        if ((pick >> i) & 1u) m.push_back(subsets[i]);
      const SetFamily f = SetFamily::make(3, m);
      for (auto p : {FamilyPredicate::sigma_discrete, FamilyPredicate::sigma_closure_preserving}) {
        CHECK(family_predicate(t, f, p, SearchMode::simplified));
        CHECK(family_predicate(t, f, p, SearchMode::exhaustive));
      }
    }
  }
}

TEST_CASE("closure preserving matches the literal subfamily definition") {
  for (const Topology& t : enumerate_topologies(3, false)) {
    for (unsigned pick = 1; pick < 256; pick += 5) {
      std::vector<Subset> m;
      for (unsigned a = 0; a < 8; ++a)
        if ((pick >> a) & 1u) m.emplace_back(3, a);
      const SetFamily f = SetFamily::make(3, m);
      bool literal = true;
      for (unsigned sub = 0; sub < (1u << m.size()); ++sub) {
        Subset u = Subset::empty(3), cl = Subset::empty(3);
        for (std::size_t i = 0; i < m.size(); ++i)
          if ((sub >> i) & 1u) {
            u |= m[i];
            cl |= t.closure(m[i]);
          }
        literal = literal && t.closure(u) == cl;
      }
      CHECK(family_predicate(t, f, FamilyPredicate::closure_preserving) == literal);
    }
  }
}

TEST_CASE("canonical covers") {
  CHECK(testing::masks(canonical_alpha_cover(particular_point()).members) == std::vector<Mask>{0b001, 0b011, 0b101});
  CHECK(canonical_alpha_cover(Topology::discrete(3)).members.size() == 3);
  CHECK(testing::masks(canonical_alpha_cover(Topology::indiscrete(2)).members) == std::vector<Mask>{0b11});
  CHECK(testing::masks(canonical_open_cover(particular_point()).members) == std::vector<Mask>{0b001, 0b111});
}

TEST_CASE("has_refinement examples") {
  const Topology t = particular_point();
  const SetFamily cover = F({S({0}), S({0, 1}), S({0, 2})});
  for (auto mode : {SearchMode::simplified, SearchMode::exhaustive}) {
    CHECK_FALSE(has_refinement(t, cover, RefinementConstraint::closed_sigma_discrete, mode).found);
    CHECK_FALSE(has_refinement(t, cover, RefinementConstraint::open_locally_finite, mode).found);
  }
  CHECK_THROWS_AS(has_refinement(t, F({S({0})}), RefinementConstraint::closed_sigma_discrete), InputError);

  const Topology d = Topology::discrete(3);
  for (RefinementConstraint c : kAllConstraints) {
    const auto r = has_refinement(d, F({S({0, 1}), S({2})}), c);
    CHECK(r.found);
    REQUIRE(r.witness);
    CHECK(refines(*r.witness, F({S({0, 1}), S({2})})));
  }
}

TEST_CASE("refinement witnesses satisfy their constraint") {
  for (const Topology& t : enumerate_topologies(3, false)) {
    const SpaceAnalysis s(t);
    const SetFamily cover = canonical_alpha_cover(t);
    for (RefinementConstraint c : kAllConstraints) {
      const auto r = has_refinement(t, cover, c);
      if (!r.found) continue;
      REQUIRE(r.witness);
      const SetFamily& w = *r.witness;
      CHECK(refines(w, cover));
      if (c == RefinementConstraint::semi_open_locally_finite_dense_union)
        CHECK(t.closure(w.union_all()).is_full());
      else
        CHECK(w.covers());
      for (Subset m : w.members) {
        switch (c) {
          case RefinementConstraint::closed_sigma_discrete:
          case RefinementConstraint::closed_sigma_closure_preserving: CHECK(t.is_closed(m)); break;
          case RefinementConstraint::open_locally_finite: CHECK(t.is_open(m)); break;
          case RefinementConstraint::semi_open_locally_finite_dense_union:
            CHECK(s.is_in_class(m, ClassKind::semi_open));
            break;
          default: CHECK(s.is_in_class(m, ClassKind::regular_closed));
        }
      }
    }
  }
}

TEST_CASE("simplified and exhaustive refinement agree on every cover at three points") {
  for (const Topology& t : enumerate_topologies(3, false)) {
    const SpaceAnalysis s(t);
    std::vector<Subset> pool;
    for (unsigned a = 1; a < 8; ++a) pool.emplace_back(3, a);
    for_each_irredundant_cover(pool, Subset::full(3), 1u << 16, [&](const SetFamily& cover) {
      for (RefinementConstraint c : kAllConstraints)
        CHECK(has_refinement(t, cover, c, SearchMode::simplified).found ==
              has_refinement(t, cover, c, SearchMode::exhaustive).found);
      return true;
    });
  }
}

TEST_CASE("irredundant cover enumeration") {
  std::vector<Subset> pool{S({0}), S({1}), S({0, 1}), S({2}), S({1, 2})};
  int count = 0;
  CHECK(for_each_irredundant_cover(pool, Subset::full(3), 100, [&](const SetFamily& f) {
    ++count;
    CHECK(f.covers());
    for (std::size_t i = 0; i < f.members.size(); ++i) {
      Subset rest = Subset::empty(3);
      for (std::size_t j = 0; j < f.members.size(); ++j)
        if (j != i) rest |= f.members[j];
      CHECK_FALSE(f.members[i].subset_of(rest));
    }
    return true;
  }));
  // {a},{b},{c} / {a},{b,c} / {a,b},{c} / {a,b},{b,c}
  CHECK(count == 4);
  CHECK_FALSE(for_each_irredundant_cover(pool, Subset::full(3), 2, [](const SetFamily&) { return true; }));
}

TEST_CASE("property examples") {
  const Topology t = particular_point();
  const SpaceAnalysis s(t);
  CHECK_FALSE(check_property(t, PropertyId::alpha_subparacompact));
  CHECK(check_property(t, PropertyId::compact));
  CHECK(evaluate_property(s, PropertyId::compact).reason == Reason::finite_space_theorem);
  CHECK(evaluate_property(s, PropertyId::alpha_subparacompact).reason == Reason::computed);
  CHECK(check_property(t, PropertyId::extremally_disconnected));
  CHECK_FALSE(check_property(t, PropertyId::nodec));
  CHECK_FALSE(check_property(t, PropertyId::alpha_paracompact));
  for (PropertyId p : kAllProperties) CHECK(check_property(Topology::discrete(3), p));
  for (PropertyId p : kAllProperties) {
    CHECK(parse_property(to_string(p)) == p);
  }
  for (RefinementConstraint c : kAllConstraints) CHECK(parse_constraint(to_string(c)) == c);
}

TEST_CASE("nontrivial properties match definitional oracles") {
  for (int n = 1; n <= 3; ++n)
    for (const Topology& t : enumerate_topologies(n, false)) {
      const SpaceAnalysis s(t);
      const auto o = testing::to_oracle(t);
      const std::string id = format_space(t);
      CAPTURE(id);
      CHECK(evaluate_property(s, PropertyId::alpha_subparacompact).holds == o.alpha_subparacompact());
      CHECK(evaluate_property(s, PropertyId::subparacompact).holds == o.subparacompact());
      CHECK(evaluate_property(s, PropertyId::alpha_paracompact).holds == o.alpha_paracompact());
      CHECK(evaluate_property(s, PropertyId::extremally_disconnected).holds == o.extremally_disconnected());
      CHECK(evaluate_property(s, PropertyId::normal).holds == o.normal());
      CHECK(evaluate_property(s, PropertyId::nodec).holds == o.nodec());
      CHECK(evaluate_property(s, PropertyId::nodec).holds == (s.alpha() == t));
      CHECK(evaluate_property(s, PropertyId::hausdorff).holds == (t == Topology::discrete(n)));
      for (PropertyId p : kAllProperties) {
        const auto exhaustive = evaluate_property(s, p, SearchMode::exhaustive);
        CHECK(exhaustive.holds == evaluate_property(s, p).holds);
      }
    }
  // The cheaper oracles also run at four points.
  for (const Topology& t : enumerate_topologies(4, false)) {
    const SpaceAnalysis s(t);
    const auto o = testing::to_oracle(t);
    CHECK(evaluate_property(s, PropertyId::normal).holds == o.normal());
    CHECK(evaluate_property(s, PropertyId::nodec).holds == o.nodec());
    CHECK(evaluate_property(s, PropertyId::extremally_disconnected).holds == o.extremally_disconnected());
  }
}

TEST_CASE("finite-space theorem properties hold everywhere") {
  const PropertyId trivial[] = {PropertyId::compact,       PropertyId::semi_compact,
                                PropertyId::s_closed_lower, PropertyId::s_closed_upper,
                                PropertyId::sg_compact,     PropertyId::rc_lindelof,
                                PropertyId::para_rc_lindelof, PropertyId::para_s_closed,
                                PropertyId::locally_s_closed_upper, PropertyId::locally_s_closed_lower,
                                PropertyId::alpha_compact};
  for (int n = 1; n <= 4; ++n)
    for (const Topology& t : enumerate_topologies(n, false)) {
      const SpaceAnalysis s(t);
      for (PropertyId p : trivial) {
        const auto r = evaluate_property(s, p);
        CHECK(r.holds);
        CHECK(r.reason == Reason::finite_space_theorem);
      }
    }
}
