#pragma once

// Independent reference implementations used only by tests. Everything here
// works on plain open-set lists and definitions, never on the library's
// neighbourhood tables or kernels.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint16_t;
using Family = std::vector<Mask>;

inline Mask full(int n) { return static_cast<Mask>((1u << n) - 1u); }
inline bool sub(Mask a, Mask b) { return (a & ~b) == 0; }

/// Smallest family containing the generators, empty and full set, closed
/// under pairwise union and intersection (fixpoint iteration).
inline Family close_family(int n, const Family& gens) {
  std::set<Mask> s(gens.begin(), gens.end());
  s.insert(0);
  s.insert(full(n));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> v(s.begin(), s.end());
    for (Mask a : v)
      for (Mask b : v) {
        grew |= s.insert(static_cast<Mask>(a | b)).second;
        grew |= s.insert(static_cast<Mask>(a & b)).second;
      }
  }
  return {s.begin(), s.end()};
}

inline bool is_topology(int n, const Family& f) {
  std::set<Mask> s(f.begin(), f.end());
  if (!s.count(0) || !s.count(full(n))) return false;
  for (Mask a : f)
    for (Mask b : f)
      if (!s.count(static_cast<Mask>(a | b)) || !s.count(static_cast<Mask>(a & b))) return false;
  return true;
}

/// Every topology on n points by brute force over all families of subsets
/// containing the empty and full set. Sorted open lists, sorted overall.
inline std::vector<Family> all_topologies(int n) {
  const int subsets = 1 << n;
  std::vector<Mask> middle;
  for (int m = 1; m < subsets - 1; ++m) middle.push_back(static_cast<Mask>(m));
  std::vector<Family> out;
  const std::uint64_t choices = std::uint64_t{1} << middle.size();
  for (std::uint64_t pick = 0; pick < choices; ++pick) {
    Family f{0};
    for (std::size_t i = 0; i < middle.size(); ++i)
      if ((pick >> i) & 1u) f.push_back(middle[i]);
    if (n > 0) f.push_back(full(n));
    if (n == 0) f = {0};
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (is_topology(n, f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Space {
  int n;
  Family opens;

  Mask X() const { return full(n); }
  Mask comp(Mask a) const { return static_cast<Mask>(~a & X()); }
  bool open(Mask a) const { return std::find(opens.begin(), opens.end(), a) != opens.end(); }
  bool closed(Mask a) const { return open(comp(a)); }
  Mask interior(Mask a) const {
    Mask r = 0;
    for (Mask u : opens)
      if (sub(u, a)) r |= u;
    return r;
  }
  Mask closure(Mask a) const {
    Mask r = X();
    for (Mask u : opens)
      if (sub(a, comp(u))) r &= comp(u);
    return r;
  }
  Family closeds() const {
    Family c;
    for (Mask u : opens) c.push_back(comp(u));
    std::sort(c.begin(), c.end());
    return c;
  }
  bool semi_open(Mask a) const { return sub(a, closure(interior(a))); }
  bool semi_closed(Mask a) const { return semi_open(comp(a)); }
  bool alpha_open(Mask a) const { return sub(a, interior(closure(interior(a)))); }

  Family filter(auto pred) const {
    Family f;
    for (int a = 0; a <= X(); ++a)
      if (pred(static_cast<Mask>(a))) f.push_back(static_cast<Mask>(a));
    return f;
  }
  Family semi_opens() const { return filter([&](Mask a) { return semi_open(a); }); }
  Family alpha_opens() const { return filter([&](Mask a) { return alpha_open(a); }); }
  Space alpha() const { return {n, alpha_opens()}; }

  /// Intersection of all semi-closed supersets.
  Mask semi_closure(Mask a) const {
    Mask r = X();
    for (int c = 0; c <= X(); ++c)
      if (sub(a, static_cast<Mask>(c)) && semi_closed(static_cast<Mask>(c))) r &= static_cast<Mask>(c);
    return r;
  }
  /// Union of all semi-open subsets.
  Mask semi_interior(Mask a) const {
    Mask r = 0;
    for (int u = 0; u <= X(); ++u)
      if (sub(static_cast<Mask>(u), a) && semi_open(static_cast<Mask>(u))) r |= static_cast<Mask>(u);
    return r;
  }

  /// g-open: every closed F inside A lies in Int A; g-closed is the complement notion.
  bool g_open(Mask a) const {
    for (Mask f : closeds())
      if (sub(f, a) && !sub(f, interior(a))) return false;
    return true;
  }
  bool g_closed(Mask a) const { return g_open(comp(a)); }
  /// sg-open: every semi-closed F inside A lies in the semi-interior of A.
  bool sg_open(Mask a) const {
    const Mask si = semi_interior(a);
    for (int f = 0; f <= X(); ++f)
      if (semi_closed(static_cast<Mask>(f)) && sub(static_cast<Mask>(f), a) && !sub(static_cast<Mask>(f), si))
        return false;
    return true;
  }
  bool sg_closed(Mask a) const { return sg_open(comp(a)); }

  bool extremally_disconnected() const {
    for (Mask u : opens)
      if (!open(closure(u))) return false;
    return true;
  }
  /// Disjoint closed sets have disjoint open neighbourhoods.
  bool normal() const {
    const Family c = closeds();
    for (Mask a : c)
      for (Mask b : c) {
        if (a & b) continue;
        bool separated = false;
        for (Mask u : opens)
          for (Mask v : opens)
            if (!(u & v) && sub(a, u) && sub(b, v)) separated = true;
        if (!separated) return false;
      }
    return true;
  }
  /// Every nowhere dense set is closed.
  bool nodec() const {
    for (int a = 0; a <= X(); ++a)
      if (interior(closure(static_cast<Mask>(a))) == 0 && !closed(static_cast<Mask>(a))) return false;
    return true;
  }

  /// Subfamilies of `pool` whose union is X.
  std::vector<Family> covers_from(const Family& pool) const {
    std::vector<Family> out;
    const std::uint64_t k = std::uint64_t{1} << pool.size();
    for (std::uint64_t pick = 1; pick < k; ++pick) {
      Family f;
      Mask u = 0;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if ((pick >> i) & 1u) {
          f.push_back(pool[i]);
          u |= pool[i];
        }
      if (u == X()) out.push_back(f);
    }
    return out;
  }

  /// Some family from `pool` refines `cover` and covers X. Any finite family
  /// is sigma-discrete and locally finite, so only membership matters.
  bool refinable(const Family& cover, const Family& pool) const {
    for (int x = 0; x < n; ++x) {
      bool ok = false;
      for (Mask p : pool)
        if ((p >> x) & 1u)
          for (Mask c : cover)
            if (sub(p, c)) ok = true;
      if (!ok) return false;
    }
    return true;
  }

  /// Every alpha-open cover has a closed refinement covering X.
  bool alpha_subparacompact() const {
    for (const Family& cover : covers_from(alpha_opens()))
      if (!refinable(cover, closeds())) return false;
    return true;
  }
  bool subparacompact() const {
    for (const Family& cover : covers_from(opens))
      if (!refinable(cover, closeds())) return false;
    return true;
  }
  /// Every alpha-open cover has an open refinement covering X.
  bool alpha_paracompact() const {
    for (const Family& cover : covers_from(alpha_opens()))
      if (!refinable(cover, opens)) return false;
    return true;
  }
};

}  // namespace oracle
