#include "doctest.h"
#include "fintop/census.hpp"
#include "fintop/io.hpp"
#include "fintop/maps.hpp"
#include "fintop/operators.hpp"
#include "helpers.hpp"

using namespace fintop;
using testing::particular_point;

TEST_CASE("map predicate examples") {
  for (const Topology& t : enumerate_topologies(3, false)) {
    const SpaceMap id(t, t, {0, 1, 2});
    for (MapKind k : {MapKind::continuous, MapKind::open, MapKind::closed, MapKind::alpha_irresolute,
                      MapKind::surjective, MapKind::injective})
      CHECK(map_predicate(id, k));
  }
  const SpaceMap constant(particular_point(), particular_point(), {0, 0, 0});
  CHECK_FALSE(map_predicate(constant, MapKind::closed));
  CHECK(map_predicate(constant, MapKind::continuous));

  for (const Topology& y : enumerate_topologies(3, false))
    for (const SpaceMap& f : enumerate_maps(Topology::discrete(2), y, false)) {
      CHECK(map_predicate(f, MapKind::continuous));
      CHECK(map_predicate(f, MapKind::alpha_irresolute));
    }
  CHECK_THROWS_AS(SpaceMap(particular_point(), particular_point(), {0, 1}), InputError);
  CHECK_THROWS_AS(SpaceMap(particular_point(), particular_point(), {0, 1, 3}), InputError);
}

TEST_CASE("map predicates match their definitions") {
  const auto spaces = enumerate_topologies(2, false);
  const auto threes = enumerate_topologies(3, false);
  for (const Topology& x : threes)
    for (const Topology& y : spaces)
      for (const SpaceMap& f : enumerate_maps(x, y, false)) {
        bool cont = true, open = true, closed = true;
        for (auto v : y.opens()) cont = cont && x.is_open(f.preimage(v));
        for (auto u : x.opens()) open = open && y.is_open(f.image(u));
        for (auto u : x.opens()) closed = closed && y.is_closed(f.image(u.complement()));
        CHECK(map_predicate(f, MapKind::continuous) == cont);
        CHECK(map_predicate(f, MapKind::open) == open);
        CHECK(map_predicate(f, MapKind::closed) == closed);
      }
}

TEST_CASE("alpha-irresolute: membership route equals continuity between alpha topologies") {
  const auto threes = enumerate_topologies(3, false);
  for (const Topology& x : threes) {
    const Topology xa = alpha_topology(x);
    for (const Topology& y : threes) {
      const Topology ya = alpha_topology(y);
      for (const SpaceMap& f : enumerate_maps(x, y, false)) {
        const SpaceMap induced(xa, ya, f.table());
        CHECK(alpha_irresolute(f) == map_predicate(induced, MapKind::continuous));
        CHECK(map_predicate(f, MapKind::alpha_irresolute) == alpha_irresolute(f));
      }
    }
  }
}

TEST_CASE("map enumeration") {
  CHECK(enumerate_maps(Topology(), Topology::discrete(2), false).size() == 2);
  CHECK(enumerate_maps(Topology::discrete(2), Topology::discrete(2), true).size() == 2);
  CHECK(enumerate_maps(Topology::discrete(3), Topology::discrete(2), true).size() == 6);
  CHECK(enumerate_maps(Topology::discrete(3), Topology::discrete(3), false).size() == 27);
  const auto maps = enumerate_maps(Topology::discrete(2), Topology::discrete(2), false);
  REQUIRE(maps.size() == 4);
  CHECK(maps[0].table() == std::vector<int>{0, 0});
  CHECK(maps[1].table() == std::vector<int>{0, 1});
  CHECK(maps[3].table() == std::vector<int>{1, 1});
  CHECK(enumerate_maps(Topology::discrete(2), Topology::discrete(3), true).empty());
  CHECK_THROWS_AS(enumerate_maps(Topology::discrete(8), Topology::discrete(8), false, 1000), BudgetError);
}

TEST_CASE("fm1 verdicts") {
  const Topology d = Topology::discrete(3);
  CHECK(verify_fm1(SpaceMap(d, d, {0, 1, 2})) == Fm1Verdict::holds);
  CHECK(verify_fm1(SpaceMap(d, d, {0, 0, 1})) == Fm1Verdict::not_applicable);
  CHECK(to_string(Fm1Verdict::violation) == "VIOLATION");
  for (const Topology& x : enumerate_topologies(2, false))
    for (const Topology& y : enumerate_topologies(2, false))
      for (const SpaceMap& f : enumerate_maps(x, y, true)) CHECK(verify_fm1(f) != Fm1Verdict::violation);
}

TEST_CASE("map json round trip") {
  const SpaceMap f(particular_point(), testing::sierpinski(), {0, 1, 1});
  const std::string text = map_to_json(f).dump();
  CHECK(text == R"({"fn":[0,1,1],"domain":{"n":3,"opens":[[],[0],[0,1,2]]},"codomain":{"n":2,"opens":[[],[0],[0,1]]}})");
  const SpaceMap g = parse_map(text);
  CHECK(g.table() == f.table());
  CHECK(g.domain() == f.domain());
  CHECK(g.codomain() == f.codomain());
  CHECK_THROWS_AS(parse_map(R"({"fn":[0,5],"domain":{"n":2,"opens":[[],[0,1]]},"codomain":{"n":2,"opens":[[],[0,1]]}})"),
                  InputError);
}
