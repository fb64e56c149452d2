#include "fintop/topology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "fintop/kernels.hpp"

namespace fintop {

namespace {

void check_point_count(int n) {
  if (n < 1 || n > kMaxPoints) throw InputError("point count out of range: " + std::to_string(n));
}

// Compresses the bits of `s` selected by `keep` into the low bits.
Mask compress(Mask s, Mask keep) {
  Mask out = 0;
  int j = 0;
  for (Mask k = keep; k != 0; k &= static_cast<Mask>(k - 1), ++j)
    if (s & (k & -k)) out |= static_cast<Mask>(1u << j);
  return out;
}

}  // namespace

Topology::Topology() : Topology(indiscrete(1)) {}

Topology Topology::build(int n, const std::array<Mask, kMaxPoints>& nbhd) {
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->nbhd = nbhd;

  const std::size_t count = std::size_t{1} << n;
  std::vector<Mask> all(count);
  std::iota(all.begin(), all.end(), Mask{0});
  impl->interior.resize(count);
  impl->closure.resize(count);

  const auto& k = kernels::active_kernels();
  const std::span<const Mask> table(impl->nbhd.data(), static_cast<std::size_t>(n));
  k.interior(table, all, impl->interior);
  k.closure(table, all, impl->closure);

  std::vector<std::uint8_t> open_flag(count);
  k.contained(all, impl->interior, open_flag);
  for (std::size_t i = 0; i < count; ++i)
    if (open_flag[i]) impl->opens.push_back(Subset::raw(n, static_cast<Mask>(i)));
  return Topology(std::move(impl));
}

Topology Topology::from_min_nbhds(int n, std::span<const Mask> nbhd) {
  check_point_count(n);
  if (nbhd.size() != static_cast<std::size_t>(n)) throw InputError("neighbourhood table size mismatch");
  std::array<Mask, kMaxPoints> table{};
  for (int x = 0; x < n; ++x) {
    if ((nbhd[x] & ~full_mask(n)) != 0) throw InputError("neighbourhood has stray bits");
    if (((nbhd[x] >> x) & 1u) == 0) throw InputError("point missing from its own neighbourhood");
    table[x] = nbhd[x];
  }
  for (int x = 0; x < n; ++x)
    for (Mask b = table[x]; b != 0; b &= static_cast<Mask>(b - 1))
      if ((table[std::countr_zero(b)] & ~table[x]) != 0) throw InputError("neighbourhood table is not transitive");
  return build(n, table);
}

Topology Topology::from_opens(int n, std::span<const Subset> opens, bool complete) {
  check_point_count(n);
  std::array<Mask, kMaxPoints> table{};
  for (int x = 0; x < n; ++x) table[x] = full_mask(n);
  for (Subset u : opens) {
    if (u.universe() != n) throw InputError("open set does not fit the point count");
    for (Mask b = u.bits(); b != 0; b &= static_cast<Mask>(b - 1)) table[std::countr_zero(b)] &= u.bits();
  }
  Topology t = build(n, table);
  if (complete) return t;

  std::vector<Subset> given(opens.begin(), opens.end());
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  if (given != t.opens()) {
    // The generated topology is the smallest one containing `given`, so some member is missing.
    auto it = std::mismatch(given.begin(), given.end(), t.opens().begin(), t.opens().end()).second;
    std::string missing = it == t.opens().end() ? std::string("?") : to_letters(*it);
    throw InputError("open-set family is not closed under union and intersection (missing " + missing + ")");
  }
  return t;
}

Topology Topology::discrete(int n) {
  check_point_count(n);
  std::array<Mask, kMaxPoints> table{};
  for (int x = 0; x < n; ++x) table[x] = static_cast<Mask>(1u << x);
  return build(n, table);
}

Topology Topology::indiscrete(int n) {
  check_point_count(n);
  std::array<Mask, kMaxPoints> table{};
  for (int x = 0; x < n; ++x) table[x] = full_mask(n);
  return build(n, table);
}

Subset Topology::min_nbhd(int x) const {
  if (x < 0 || x >= size()) throw InputError("point out of range: " + std::to_string(x));
  return Subset::raw(size(), impl_->nbhd[x]);
}

Subset Topology::open_hull(Subset a) const {
  Mask acc = 0;
  for (Mask b = a.bits(); b != 0; b &= static_cast<Mask>(b - 1)) acc |= impl_->nbhd[std::countr_zero(b)];
  return Subset::raw(size(), acc);
}

bool canonical_less(const Topology& a, const Topology& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.opens().begin(), a.opens().end(), b.opens().begin(), b.opens().end());
}

Topology build_topology(int n, std::span<const Subset> generators) {
  return Topology::from_opens(n, generators, /*complete=*/true);
}

SetClass closed_sets(const Topology& t) {
  std::vector<Subset> members;
  members.reserve(t.opens().size());
  for (Subset u : t.opens()) members.push_back(u.complement());
  return SetClass::make(ClassKind::closed, t.size(), std::move(members));
}

Subset minimal_nbhd(const Topology& t, int x) { return t.min_nbhd(x); }

Subset Subspace::to_ambient_set(Subset local, int ambient_n) const {
  Mask out = 0;
  for (int i : local.points()) out |= static_cast<Mask>(1u << to_ambient[i]);
  return Subset(ambient_n, out);
}

Subset Subspace::from_ambient_set(Subset ambient) const {
  Mask keep = 0;
  for (int x : to_ambient) keep |= static_cast<Mask>(1u << x);
  return Subset::raw(space.size(), compress(ambient.bits() & keep, keep));
}

Subspace subspace(const Topology& t, Subset a) {
  if (a.empty()) throw InputError("subspace of the empty set");
  if (a.universe() != t.size()) throw InputError("subset does not fit the space");
  const int m = a.count();
  std::vector<int> to_ambient = a.points();
  std::vector<Mask> nbhd(m);
  for (int i = 0; i < m; ++i) nbhd[i] = compress(t.min_nbhd(to_ambient[i]).bits() & a.bits(), a.bits());
  return Subspace{Topology::from_min_nbhds(m, nbhd), std::move(to_ambient)};
}

Topology product(const Topology& t1, const Topology& t2) {
  const int n1 = t1.size();
  const int n2 = t2.size();
  if (n1 * n2 > kMaxPoints)
    throw BudgetError("product has " + std::to_string(n1 * n2) + " points; the limit is " + std::to_string(kMaxPoints));
  const int n = n1 * n2;
  std::vector<Mask> nbhd(n);
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n2; ++y) {
      Mask box = 0;
      for (int u : t1.min_nbhd(x).points())
        for (int v : t2.min_nbhd(y).points()) box |= static_cast<Mask>(1u << (u * n2 + v));
      nbhd[x * n2 + y] = box;
    }
  return Topology::from_min_nbhds(n, nbhd);
}

bool Preorder::reflexive() const {
  for (int x = 0; x < n; ++x)
    if (!leq(x, x)) return false;
  return true;
}

bool Preorder::transitive() const {
  for (int x = 0; x < n; ++x)
    for (Mask b = rows[x]; b != 0; b &= static_cast<Mask>(b - 1))
      if ((rows[std::countr_zero(b)] & ~rows[x]) != 0) return false;
  return true;
}

Preorder to_preorder(const Topology& t) {
  Preorder r;
  r.n = t.size();
  for (int x = 0; x < t.size(); ++x) r.rows[x] = t.min_nbhd(x).bits();
  return r;
}

Topology from_preorder(const Preorder& r) {
  check_point_count(r.n);
  if (!r.reflexive()) throw InputError("relation is not reflexive");
  if (!r.transitive()) throw InputError("relation is not transitive");
  return Topology::from_min_nbhds(r.n, std::span<const Mask>(r.rows.data(), static_cast<std::size_t>(r.n)));
}

namespace {

struct PointSignature {
  int up;    // |nbhd[x]|
  int down;  // |closure{x}|
  auto operator<=>(const PointSignature&) const = default;
};

class HomeoSearch {
 public:
  HomeoSearch(const Topology& a, const Topology& b) : a_(a), b_(b), n_(a.size()), image_(n_, -1), used_(n_, false) {
    for (int x = 0; x < n_; ++x) {
      sig_a_.push_back({a.min_nbhd(x).count(), a.closure(Subset::singleton(n_, x)).count()});
      sig_b_.push_back({b.min_nbhd(x).count(), b.closure(Subset::singleton(n_, x)).count()});
    }
  }

  bool invariants_match() const {
    if (a_.opens().size() != b_.opens().size()) return false;
    auto sa = sig_a_;
    auto sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  }

  bool run(int x) {
    if (x == n_) return true;
    for (int y = 0; y < n_; ++y) {
      if (used_[y] || sig_a_[x] != sig_b_[y] || !consistent(x, y)) continue;
      image_[x] = y;
      used_[y] = true;
      if (run(x + 1)) return true;
      used_[y] = false;
      image_[x] = -1;
    }
    return false;
  }

  std::vector<int> image() const { return image_; }

 private:
  bool consistent(int x, int y) const {
    for (int p = 0; p < x; ++p) {
      const int q = image_[p];
      if (a_.min_nbhd(x).contains(p) != b_.min_nbhd(y).contains(q)) return false;
      if (a_.min_nbhd(p).contains(x) != b_.min_nbhd(q).contains(y)) return false;
    }
    return true;
  }

  const Topology& a_;
  const Topology& b_;
  int n_;
  std::vector<PointSignature> sig_a_;
  std::vector<PointSignature> sig_b_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<int>> find_homeomorphism(const Topology& t1, const Topology& t2) {
  if (t1.size() != t2.size()) throw InputError("homeomorphism test between spaces of different size");
  HomeoSearch search(t1, t2);
  if (!search.invariants_match() || !search.run(0)) return std::nullopt;
  return search.image();
}

bool is_homeomorphic(const Topology& t1, const Topology& t2) { return find_homeomorphism(t1, t2).has_value(); }

Subset relabel(Subset s, std::span<const int> perm, int target_n) {
  Mask out = 0;
  for (int x : s.points()) out |= static_cast<Mask>(1u << perm[x]);
  return Subset(target_n, out);
}

Topology relabel(const Topology& t, std::span<const int> perm) {
  const int n = t.size();
  std::vector<Mask> nbhd(n);
  for (int x = 0; x < n; ++x) nbhd[perm[x]] = relabel(t.min_nbhd(x), perm, n).bits();
  return Topology::from_min_nbhds(n, nbhd);
}

}  // namespace fintop
