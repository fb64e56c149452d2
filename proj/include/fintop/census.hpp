#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fintop/covers.hpp"
#include "fintop/topology.hpp"

namespace fintop {

inline constexpr int kMaxLabeledCensus = 5;
inline constexpr int kMaxHomeoCensus = 6;

/// Every topology on n points exactly once, in canonical order. With
/// `up_to_homeo`, only the canonically first member of each homeomorphism
/// class is kept. Enumerates reflexive-transitive relations and maps them
/// through from_preorder. Throws BudgetError past n = 5 labeled, 6 up to
/// homeomorphism.
std::vector<Topology> enumerate_topologies(int n, bool up_to_homeo);

/// All reflexive-transitive relations on n points, in search order.
std::vector<Preorder> enumerate_preorders(int n);

struct ClassSizes {
  std::size_t semi_open = 0;
  std::size_t regular_closed = 0;
  std::size_t g_closed = 0;
  std::size_t sg_closed = 0;
  std::size_t alpha_open = 0;
  friend bool operator==(const ClassSizes&, const ClassSizes&) = default;
};

struct PropertyProfile {
  std::array<bool, std::size(kAllProperties)> properties{};
  ClassSizes sizes;
  /// GC(T) differs from GC(T^alpha).
  bool gc_mismatch = false;
  /// SO(T) equals T^alpha as families.
  bool so_eq_alpha = false;

  bool get(PropertyId p) const { return properties[static_cast<std::size_t>(p)]; }
  bool& at(PropertyId p) { return properties[static_cast<std::size_t>(p)]; }
  friend bool operator==(const PropertyProfile&, const PropertyProfile&) = default;
};

PropertyProfile profile(const Topology& t);
PropertyProfile profile(const SpaceAnalysis& space);

/// "n<points>-<16 hex digits>": FNV-1a over the canonical open-set list.
std::string census_id(const Topology& t);

struct CensusRecord {
  std::string id;
  Topology space;
  PropertyProfile profile;
};

struct CensusHeader {
  int n = 0;
  bool up_to_homeo = false;
};

struct Census {
  CensusHeader header;
  std::vector<CensusRecord> records;
};

/// Profiles every topology (in parallel) and orders the records by id.
Census build_census(int n, bool up_to_homeo);
std::vector<CensusRecord> profile_all(const std::vector<Topology>& spaces);

/// One header line, then one record per line. An empty census is an empty stream.
void write_census(const Census& census, std::ostream& out);
/// Throws InputError naming the offending line on malformed records, ids that
/// do not match their opens, non-topologies, or profiles that break the
/// profile invariants.
Census read_census(std::istream& in);

}  // namespace fintop
