#include "fintop/io.hpp"

namespace fintop {

ojson subset_to_json(Subset s) {
  ojson arr = ojson::array();
  for (int x : s.points()) arr.push_back(x);
  return arr;
}

Subset subset_from_json(const nlohmann::json& j, int n) {
  if (!j.is_array()) throw InputError("subset must be a list of point indices");
  std::uint32_t bits = 0;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError("point index must be an integer");
    const auto x = v.get<long long>();
    if (x < 0 || x >= n) throw InputError("point index out of range: " + std::to_string(x));
    bits |= 1u << x;
  }
  return Subset(n, bits);
}

ojson space_to_json(const Topology& t) {
  ojson j;
  j["n"] = t.size();
  ojson opens = ojson::array();
  for (Subset u : t.opens()) opens.push_back(subset_to_json(u));
  j["opens"] = std::move(opens);
  return j;
}

Topology space_from_json(const nlohmann::json& j, bool complete) {
  if (!j.is_object() || !j.contains("n") || !j.contains("opens"))
    throw InputError("space must be an object with \"n\" and \"opens\"");
  if (!j["n"].is_number_integer()) throw InputError("\"n\" must be an integer");
  const auto n = j["n"].get<long long>();
  if (n < 1 || n > kMaxPoints) throw InputError("point count out of range: " + std::to_string(n));
  if (!j["opens"].is_array()) throw InputError("\"opens\" must be a list");
  std::vector<Subset> opens;
  for (const auto& u : j["opens"]) opens.push_back(subset_from_json(u, static_cast<int>(n)));
  return Topology::from_opens(static_cast<int>(n), opens, complete);
}

Topology parse_space(std::string_view text, bool complete) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed space: ") + e.what());
  }
  return space_from_json(j, complete);
}

std::string format_space(const Topology& t) { return space_to_json(t).dump(); }

ojson set_class_to_json(const SetClass& c) {
  ojson j;
  j["n"] = c.n;
  j["kind"] = std::string(to_string(c.kind));
  ojson members = ojson::array();
  for (Subset s : c.members) members.push_back(subset_to_json(s));
  j["members"] = std::move(members);
  return j;
}

ojson map_to_json(const SpaceMap& f) {
  ojson j;
  j["fn"] = f.table();
  j["domain"] = space_to_json(f.domain());
  j["codomain"] = space_to_json(f.codomain());
  return j;
}

SpaceMap map_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("fn") || !j.contains("domain") || !j.contains("codomain"))
    throw InputError("map must be an object with \"fn\", \"domain\" and \"codomain\"");
  std::vector<int> fn;
  for (const auto& v : j["fn"]) {
    if (!v.is_number_integer()) throw InputError("map values must be integers");
    fn.push_back(v.get<int>());
  }
  return SpaceMap(space_from_json(j["domain"]), space_from_json(j["codomain"]), std::move(fn));
}

SpaceMap parse_map(std::string_view text) {
  try {
    return map_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed map: ") + e.what());
  }
}

std::string letters_family(std::span<const Subset> members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += to_letters(members[i], /*name_full=*/true);
  }
  return out + "}";
}

}  // namespace fintop
