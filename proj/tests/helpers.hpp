#pragma once

#include <random>
#include <vector>

#include "fintop/topology.hpp"
#include "oracles.hpp"

namespace testing {

inline fintop::Topology make(int n, std::initializer_list<std::initializer_list<int>> opens) {
  std::vector<fintop::Subset> v;
  for (auto o : opens) v.push_back(fintop::Subset::of(n, o));
  return fintop::Topology::from_opens(n, v);
}

/// {∅,{a},X} on three points.
inline fintop::Topology particular_point() { return make(3, {{}, {0}, {0, 1, 2}}); }
/// {∅,{0},X} on two points.
inline fintop::Topology sierpinski() { return make(2, {{}, {0}, {0, 1}}); }

inline oracle::Space to_oracle(const fintop::Topology& t) {
  oracle::Space s{t.size(), {}};
  for (auto u : t.opens()) s.opens.push_back(u.bits());
  return s;
}

inline fintop::Topology from_family(int n, const oracle::Family& f) {
  std::vector<fintop::Subset> v;
  for (auto m : f) v.emplace_back(n, m);
  return fintop::Topology::from_opens(n, v);
}

inline std::vector<oracle::Mask> masks(const std::vector<fintop::Subset>& v) {
  std::vector<oracle::Mask> out;
  for (auto s : v) out.push_back(s.bits());
  return out;
}

/// Random topology from a few random generators.
inline fintop::Topology random_topology(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<unsigned> bits(0, (1u << n) - 1u);
  std::vector<fintop::Subset> gens;
  for (int i = count(rng); i > 0; --i) gens.emplace_back(n, bits(rng));
  return fintop::build_topology(n, gens);
}

}  // namespace testing
