#include "fintop/census.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "fintop/io.hpp"
#include "fintop/parallel.hpp"

namespace fintop {

namespace {

constexpr std::string_view kFormatName = "fintop-census";
constexpr int kFormatVersion = 1;

// Entry-by-entry search over the off-diagonal relation matrix. An entry is
// rejected as soon as it completes a triangle a <= b <= c with a !<= c.
class PreorderSearch {
 public:
  explicit PreorderSearch(int n) : n_(n) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) cells_.emplace_back(i, j);
  }

  // All preorders whose row 0 equals `first_row` (which must contain point 0).
  void run_with_first_row(Mask first_row, std::vector<Preorder>& out) {
    reset();
    out_ = &out;
    for (std::size_t c = 0; c < static_cast<std::size_t>(n_ - 1); ++c) {
      const auto [i, j] = cells_[c];
      const bool v = ((first_row >> j) & 1u) != 0;
      if (!allowed(i, j, v)) return;
      assign(i, j, v);
    }
    descend(static_cast<std::size_t>(n_ - 1));
  }

 private:
  void reset() {
    for (int i = 0; i < n_; ++i) {
      set_[i] = static_cast<Mask>(1u << i);
      decided_[i] = static_cast<Mask>(1u << i);
    }
  }

  bool is_set(int i, int j) const { return ((set_[i] >> j) & 1u) != 0; }
  bool is_unset(int i, int j) const { return ((decided_[i] >> j) & 1u) != 0 && !is_set(i, j); }

  bool allowed(int i, int j, bool v) const {
    for (int k = 0; k < n_; ++k) {
      if (v) {
        if (is_set(j, k) && is_unset(i, k)) return false;
        if (is_set(k, i) && is_unset(k, j)) return false;
      } else if (is_set(i, k) && is_set(k, j)) {
        return false;
      }
    }
    return true;
  }

  void assign(int i, int j, bool v) {
    decided_[i] |= static_cast<Mask>(1u << j);
    if (v) set_[i] |= static_cast<Mask>(1u << j);
  }

  void unassign(int i, int j) {
    decided_[i] &= static_cast<Mask>(~(1u << j));
    set_[i] &= static_cast<Mask>(~(1u << j));
  }

  void descend(std::size_t c) {
    if (c == cells_.size()) {
      Preorder r;
      r.n = n_;
      for (int i = 0; i < n_; ++i) r.rows[i] = set_[i];
      out_->push_back(r);
      return;
    }
    const auto [i, j] = cells_[c];
    for (bool v : {false, true}) {
      if (!allowed(i, j, v)) continue;
      assign(i, j, v);
      descend(c + 1);
      unassign(i, j);
    }
  }

  int n_;
  std::vector<std::pair<int, int>> cells_;
  std::array<Mask, kMaxPoints> set_{};
  std::array<Mask, kMaxPoints> decided_{};
  std::vector<Preorder>* out_ = nullptr;
};

// Open sets of the topology of a preorder: the up-closed sets.
std::vector<Mask> up_sets(const Preorder& r) {
  std::vector<Mask> out;
  const std::size_t count = std::size_t{1} << r.n;
  for (std::size_t s = 0; s < count; ++s) {
    bool closed = true;
    for (int x = 0; x < r.n && closed; ++x)
      if (((s >> x) & 1u) && (r.rows[x] & ~s) != 0) closed = false;
    if (closed) out.push_back(static_cast<Mask>(s));
  }
  return out;
}

// Homeomorphism-invariant bucket key: open-set count and the sorted
// (neighbourhood size, closure size) signature of each point.
std::vector<int> homeo_key(const Preorder& r, std::size_t open_count) {
  std::vector<int> sig;
  for (int x = 0; x < r.n; ++x) {
    int down = 0;
    for (int y = 0; y < r.n; ++y) down += r.leq(y, x) ? 1 : 0;
    sig.push_back(std::popcount(r.rows[x]) * 32 + down);
  }
  std::sort(sig.begin(), sig.end());
  sig.insert(sig.begin(), static_cast<int>(open_count));
  return sig;
}

ojson profile_to_json(const PropertyProfile& p) {
  ojson j;
  for (PropertyId id : kAllProperties) j[std::string(to_string(id))] = p.get(id);
  ojson sizes;
  sizes["so"] = p.sizes.semi_open;
  sizes["rc"] = p.sizes.regular_closed;
  sizes["gc"] = p.sizes.g_closed;
  sizes["sgc"] = p.sizes.sg_closed;
  sizes["alpha"] = p.sizes.alpha_open;
  j["sizes"] = std::move(sizes);
  j["gc_mismatch"] = p.gc_mismatch;
  j["so_eq_alpha"] = p.so_eq_alpha;
  return j;
}

PropertyProfile profile_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("profile must be an object");
  PropertyProfile p;
  for (PropertyId id : kAllProperties) {
    const std::string key(to_string(id));
    if (!j.contains(key) || !j[key].is_boolean()) throw InputError("profile field missing or not boolean: " + key);
    p.at(id) = j[key].get<bool>();
  }
  const auto& s = j.at("sizes");
  p.sizes.semi_open = s.at("so").get<std::size_t>();
  p.sizes.regular_closed = s.at("rc").get<std::size_t>();
  p.sizes.g_closed = s.at("gc").get<std::size_t>();
  p.sizes.sg_closed = s.at("sgc").get<std::size_t>();
  p.sizes.alpha_open = s.at("alpha").get<std::size_t>();
  p.gc_mismatch = j.at("gc_mismatch").get<bool>();
  p.so_eq_alpha = j.at("so_eq_alpha").get<bool>();
  return p;
}

void check_profile_invariants(const PropertyProfile& p) {
  if (p.get(PropertyId::nodec) && p.gc_mismatch) throw InputError("profile has nodec and gc_mismatch both set");
  if (p.get(PropertyId::hausdorff))
    for (PropertyId id : kAllProperties)
      if (!p.get(id)) throw InputError("hausdorff profile with " + std::string(to_string(id)) + " false");
}

}  // namespace

std::vector<Preorder> enumerate_preorders(int n) {
  if (n < 1 || n > kMaxHomeoCensus) throw BudgetError("preorder enumeration limited to 1..6 points");
  if (n == 1) {
    Preorder r;
    r.n = 1;
    r.rows[0] = 1;
    return {r};
  }
  // Row 0 always contains point 0; each choice of the rest is an independent slice.
  const std::size_t slices = std::size_t{1} << (n - 1);
  std::vector<std::vector<Preorder>> parts(slices);
  parallel_for(slices, [&](std::size_t s) {
    PreorderSearch search(n);
    search.run_with_first_row(static_cast<Mask>((s << 1) | 1u), parts[s]);
  });
  std::vector<Preorder> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<Topology> enumerate_topologies(int n, bool up_to_homeo) {
  const int limit = up_to_homeo ? kMaxHomeoCensus : kMaxLabeledCensus;
  if (n < 1) throw InputError("point count must be positive");
  if (n > limit)
    throw BudgetError("census of " + std::to_string(n) + " points exceeds the limit of " + std::to_string(limit));

  struct Entry {
    std::vector<Mask> opens;
    Preorder order;
  };
  std::vector<Entry> entries;
  for (const Preorder& r : enumerate_preorders(n)) entries.push_back({up_sets(r), r});
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.opens < b.opens; });

  std::vector<Topology> out;
  if (!up_to_homeo) {
    out.reserve(entries.size());
    for (const Entry& e : entries) out.push_back(from_preorder(e.order));
    return out;
  }
  std::map<std::vector<int>, std::vector<std::size_t>> buckets;
  for (const Entry& e : entries) {
    auto& bucket = buckets[homeo_key(e.order, e.opens.size())];
    const Topology t = from_preorder(e.order);
    const bool seen =
        std::any_of(bucket.begin(), bucket.end(), [&](std::size_t rep) { return is_homeomorphic(out[rep], t); });
    if (!seen) {
      bucket.push_back(out.size());
      out.push_back(t);
    }
  }
  return out;
}

PropertyProfile profile(const SpaceAnalysis& space) {
  PropertyProfile p;
  for (PropertyId id : kAllProperties) p.at(id) = evaluate_property(space, id).holds;
  const SetClass gc = space.set_class(ClassKind::g_closed);
  const SetClass so = space.set_class(ClassKind::semi_open);
  p.sizes.semi_open = so.size();
  p.sizes.regular_closed = space.set_class(ClassKind::regular_closed).size();
  p.sizes.g_closed = gc.size();
  p.sizes.sg_closed = space.set_class(ClassKind::sg_closed).size();
  p.sizes.alpha_open = space.alpha().opens().size();
  p.gc_mismatch = !gc.same_members(SpaceAnalysis(space.alpha()).set_class(ClassKind::g_closed));
  p.so_eq_alpha = so.members == space.alpha().opens();
  return p;
}

PropertyProfile profile(const Topology& t) { return profile(SpaceAnalysis(t)); }

std::string census_id(const Topology& t) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint8_t>(t.size()));
  for (Subset u : t.opens()) {
    mix(static_cast<std::uint8_t>(u.bits() & 0xFF));
    mix(static_cast<std::uint8_t>(u.bits() >> 8));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "n%d-%016llx", t.size(), static_cast<unsigned long long>(h));
  return buf;
}

std::vector<CensusRecord> profile_all(const std::vector<Topology>& spaces) {
  std::vector<CensusRecord> records(spaces.size());
  parallel_for(spaces.size(), [&](std::size_t i) {
    records[i] = CensusRecord{census_id(spaces[i]), spaces[i], profile(spaces[i])};
  });
  std::sort(records.begin(), records.end(), [](const CensusRecord& a, const CensusRecord& b) { return a.id < b.id; });
  return records;
}

Census build_census(int n, bool up_to_homeo) {
  return Census{CensusHeader{n, up_to_homeo}, profile_all(enumerate_topologies(n, up_to_homeo))};
}

void write_census(const Census& census, std::ostream& out) {
  if (census.records.empty()) return;
  ojson header;
  header["format"] = kFormatName;
  header["version"] = kFormatVersion;
  header["n"] = census.header.n;
  header["up_to_homeo"] = census.header.up_to_homeo;
  header["count"] = census.records.size();
  out << header.dump() << '\n';
  for (const CensusRecord& r : census.records) {
    ojson j;
    j["id"] = r.id;
    j["n"] = r.space.size();
    j["opens"] = space_to_json(r.space)["opens"];
    j["profile"] = profile_to_json(r.profile);
    out << j.dump() << '\n';
  }
}

Census read_census(std::istream& in) {
  Census census;
  std::string line;
  std::size_t line_no = 0;
  std::size_t expected = 0;
  auto fail = [&line_no](const std::string& why) -> InputError {
    return InputError("census line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw fail(std::string("malformed record: ") + e.what());
    }
    try {
      if (line_no == 1) {
        if (j.value("format", "") != kFormatName || j.value("version", 0) != kFormatVersion)
          throw InputError("unsupported census format header");
        census.header.n = j.at("n").get<int>();
        census.header.up_to_homeo = j.at("up_to_homeo").get<bool>();
        expected = j.at("count").get<std::size_t>();
        continue;
      }
      if (!j.is_object()) throw InputError("record must be an object");
      nlohmann::json space_json = {{"n", j.at("n")}, {"opens", j.at("opens")}};
      CensusRecord r{j.at("id").get<std::string>(), space_from_json(space_json), profile_from_json(j.at("profile"))};
      if (r.space.size() != census.header.n) throw InputError("record point count differs from the header");
      if (r.id != census_id(r.space)) throw InputError("id does not match the open-set list");
      check_profile_invariants(r.profile);
      census.records.push_back(std::move(r));
    } catch (const InputError& e) {
      throw fail(e.what());
    } catch (const nlohmann::json::exception& e) {
      throw fail(std::string("malformed record: ") + e.what());
    }
  }
  if (line_no > 0 && census.records.size() != expected)
    throw InputError("census header announces " + std::to_string(expected) + " records, found " +
                     std::to_string(census.records.size()));
  return census;
}

}  // namespace fintop
