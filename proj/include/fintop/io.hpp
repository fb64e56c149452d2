#pragma once

#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "fintop/maps.hpp"
#include "fintop/set_class.hpp"
#include "fintop/topology.hpp"

namespace fintop {

using ojson = nlohmann::ordered_json;

/// [0,2] for the subset {a,c}.
ojson subset_to_json(Subset s);
Subset subset_from_json(const nlohmann::json& j, int n);

/// {"n": 3, "opens": [[],[0],[0,1,2]]}, opens in canonical order.
ojson space_to_json(const Topology& t);
/// Rejects families that are not topologies unless `complete` asks for the
/// generated topology instead. All failures surface as InputError.
Topology space_from_json(const nlohmann::json& j, bool complete = false);
Topology parse_space(std::string_view text, bool complete = false);
std::string format_space(const Topology& t);

/// {"n": 3, "kind": "semi-open", "members": [[],[0],...]}
ojson set_class_to_json(const SetClass& c);

/// {"fn": [0,0,1], "domain": <space>, "codomain": <space>}
ojson map_to_json(const SpaceMap& f);
SpaceMap map_from_json(const nlohmann::json& j);
SpaceMap parse_map(std::string_view text);

/// "{∅,{a},{a,b},X}" rendering of a family of subsets.
std::string letters_family(std::span<const Subset> members);

}  // namespace fintop
