#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "fintop/set_class.hpp"
#include "fintop/subset.hpp"

namespace fintop {

/// A topology on the finite point set {0, ..., n-1}, 1 <= n <= 16.
///
/// Internally a finite topology is its minimal-neighbourhood table: nbhd[x]
/// is the intersection of all open sets containing x, and a set is open iff
/// it contains nbhd[x] for each of its points. The open-set list and the
/// interior/closure lookup tables over all 2^n subsets are materialized at
/// construction; afterwards the object is immutable and cheap to copy.
class Topology {
 public:
  /// The one-point space.
  Topology();

  /// Builds from a minimal-neighbourhood table. Throws InputError unless
  /// x is in nbhd[x] and y in nbhd[x] implies nbhd[y] is inside nbhd[x].
  static Topology from_min_nbhds(int n, std::span<const Mask> nbhd);

  /// Builds from an explicit open-set family. Without `complete`, the family
  /// must already contain the empty and full sets and be closed under
  /// pairwise union and intersection; with it, the generated topology is used.
  static Topology from_opens(int n, std::span<const Subset> opens, bool complete = false);

  static Topology discrete(int n);
  static Topology indiscrete(int n);

  int size() const { return impl_->n; }
  Subset full() const { return Subset::full(size()); }
  Subset none() const { return Subset::empty(size()); }

  /// Open sets in canonical (ascending bit value) order.
  const std::vector<Subset>& opens() const { return impl_->opens; }
  std::span<const Mask> min_nbhd_table() const { return {impl_->nbhd.data(), static_cast<std::size_t>(size())}; }
  Subset min_nbhd(int x) const;

  bool is_open(Subset a) const { return interior(a) == a; }
  bool is_closed(Subset a) const { return closure(a) == a; }
  Subset interior(Subset a) const { return Subset::raw(size(), impl_->interior[a.bits()]); }
  Subset closure(Subset a) const { return Subset::raw(size(), impl_->closure[a.bits()]); }
  /// Smallest open set containing `a`.
  Subset open_hull(Subset a) const;

  /// Lookup tables indexed by subset bits, 2^n entries each.
  std::span<const Mask> interior_table() const { return impl_->interior; }
  std::span<const Mask> closure_table() const { return impl_->closure; }

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.impl_ == b.impl_ || (a.size() == b.size() && a.impl_->nbhd == b.impl_->nbhd);
  }

  /// Canonical order: point count, then lexicographic on the open-set list.
  friend bool canonical_less(const Topology& a, const Topology& b);

 private:
  struct Impl {
    int n = 1;
    std::array<Mask, kMaxPoints> nbhd{};
    std::vector<Subset> opens;
    std::vector<Mask> interior;
    std::vector<Mask> closure;
  };
  explicit Topology(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static Topology build(int n, const std::array<Mask, kMaxPoints>& nbhd);

  std::shared_ptr<const Impl> impl_;
};

/// Smallest topology on n points containing every generator.
Topology build_topology(int n, std::span<const Subset> generators);

/// Complements of the open sets.
SetClass closed_sets(const Topology& t);

Subset minimal_nbhd(const Topology& t, int x);

struct Subspace {
  Topology space;
  /// to_ambient[i] is the original index of relabeled point i (increasing).
  std::vector<int> to_ambient;

  /// Pushes a subset of the subspace back into the ambient point set.
  Subset to_ambient_set(Subset local, int ambient_n) const;
  /// Restricts an ambient subset to the subspace and relabels it.
  Subset from_ambient_set(Subset ambient) const;
};

/// Relative topology on a nonempty subset, points relabeled in increasing order.
Subspace subspace(const Topology& t, Subset a);

/// Product topology; the pair (x, y) becomes point x * n2 + y.
Topology product(const Topology& t1, const Topology& t2);

/// Reflexive, transitive relation on n points. rows[x] = { y : x <= y }.
struct Preorder {
  int n = 1;
  std::array<Mask, kMaxPoints> rows{};

  bool leq(int x, int y) const { return ((rows[x] >> y) & 1u) != 0; }
  bool reflexive() const;
  bool transitive() const;
  friend bool operator==(const Preorder&, const Preorder&) = default;
};

/// Specialization preorder: x <= y iff y lies in the minimal neighbourhood of x.
Preorder to_preorder(const Topology& t);
/// Topology whose open sets are the up-closed sets of `r`.
Topology from_preorder(const Preorder& r);

/// A point bijection p with p(U) open in t2 iff U open in t1, or nullopt.
/// Throws InputError when the point counts differ.
std::optional<std::vector<int>> find_homeomorphism(const Topology& t1, const Topology& t2);
bool is_homeomorphic(const Topology& t1, const Topology& t2);

/// Image of a subset under a point relabeling.
Subset relabel(Subset s, std::span<const int> perm, int target_n);
/// The topology obtained by renaming point x to perm[x].
Topology relabel(const Topology& t, std::span<const int> perm);

}  // namespace fintop
