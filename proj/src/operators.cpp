#include "fintop/operators.hpp"

#include <numeric>
#include <stdexcept>

#include "fintop/kernels.hpp"

namespace fintop {

namespace {

constexpr std::pair<ClosureKind, std::string_view> kClosureTags[] = {
    {ClosureKind::closure, "closure"},
    {ClosureKind::interior, "interior"},
    {ClosureKind::semi_closure, "semi-closure"},
    {ClosureKind::alpha_closure, "alpha-closure"},
    {ClosureKind::alpha_semi_closure, "alpha-semi-closure"},
    {ClosureKind::semi_interior, "semi-interior"},
};

std::vector<Mask> all_masks(int n) {
  std::vector<Mask> all(std::size_t{1} << n);
  std::iota(all.begin(), all.end(), Mask{0});
  return all;
}

// out[A] = outer(inner(A)) via table lookups.
std::vector<Mask> compose(std::span<const Mask> outer, std::span<const Mask> inner) {
  std::vector<Mask> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

// Members A with A inside rhs[A] (or lhs[A] inside A when `reverse`).
std::vector<Subset> filter_contained(int n, std::span<const Mask> all, std::span<const Mask> other, bool reverse) {
  std::vector<std::uint8_t> flag(all.size());
  const auto& k = kernels::active_kernels();
  if (reverse)
    k.contained(other, all, flag);
  else
    k.contained(all, other, flag);
  std::vector<Subset> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (flag[i]) out.push_back(Subset::raw(n, static_cast<Mask>(i)));
  return out;
}

}  // namespace

std::string_view to_string(ClosureKind kind) {
  for (const auto& [k, tag] : kClosureTags)
    if (k == kind) return tag;
  return "?";
}

std::optional<ClosureKind> parse_closure_kind(std::string_view tag) {
  for (const auto& [k, t] : kClosureTags)
    if (t == tag) return k;
  return std::nullopt;
}

Topology alpha_topology(const Topology& t) {
  const int n = t.size();
  const auto all = all_masks(n);
  const auto int_cl_int = compose(t.interior_table(), compose(t.closure_table(), t.interior_table()));
  const auto members = filter_contained(n, all, int_cl_int, /*reverse=*/false);
  try {
    return Topology::from_opens(n, members);
  } catch (const InputError& e) {
    throw std::logic_error(std::string("alpha-sets failed to form a topology: ") + e.what());
  }
}

Subset semi_closure(const Topology& t, Subset a) { return a | t.interior(t.closure(a)); }
Subset semi_interior(const Topology& t, Subset a) { return a & t.closure(t.interior(a)); }
bool is_semi_open(const Topology& t, Subset a) { return a.subset_of(t.closure(t.interior(a))); }
bool is_alpha_open(const Topology& t, Subset a) { return a.subset_of(t.interior(t.closure(t.interior(a)))); }
bool is_regular_closed(const Topology& t, Subset a) { return a == t.closure(t.interior(a)); }

SpaceAnalysis::SpaceAnalysis(Topology t) : base_(std::move(t)), alpha_(alpha_topology(base_)) {
  const auto all = all_masks(base_.size());
  const auto cl_int = compose(base_.closure_table(), base_.interior_table());
  semi_open_ = filter_contained(base_.size(), all, cl_int, /*reverse=*/false);
}

Subset SpaceAnalysis::hull(Subset a, ClosureKind kind) const {
  if (a.universe() != size()) throw InputError("subset does not fit the space");
  switch (kind) {
    case ClosureKind::closure: return base_.closure(a);
    case ClosureKind::interior: return base_.interior(a);
    case ClosureKind::semi_closure: return semi_closure(base_, a);
    case ClosureKind::alpha_closure: return alpha_.closure(a);
    case ClosureKind::alpha_semi_closure: return semi_closure(alpha_, a);
    case ClosureKind::semi_interior: return semi_interior(base_, a);
  }
  return a;
}

bool SpaceAnalysis::g_closed(Subset a) const {
  const Subset cl = base_.closure(a);
  for (Subset u : base_.opens())
    if (a.subset_of(u) && !cl.subset_of(u)) return false;
  return true;
}

bool SpaceAnalysis::sg_closed(Subset a) const {
  const Subset scl = semi_closure(base_, a);
  for (Subset u : semi_open_)
    if (a.subset_of(u) && !scl.subset_of(u)) return false;
  return true;
}

bool SpaceAnalysis::g_alpha_closed(Subset a) const {
  const Subset cl = alpha_.closure(a);
  for (Subset u : alpha_.opens())
    if (a.subset_of(u) && !cl.subset_of(u)) return false;
  return true;
}

// On a finite space countable unions are finite unions, so A is a countable
// union of g-alpha-closed sets iff each point of A has such a set inside A.
bool SpaceAnalysis::f_sigma_g_alpha_closed(Subset a) const {
  Mask covered = 0;
  const Mask bits = a.bits();
  for (Mask c = bits;; c = static_cast<Mask>((c - 1) & bits)) {
    if ((c & ~covered) != 0 && g_alpha_closed(Subset::raw(size(), c))) covered |= c;
    if (covered == bits || c == 0) break;
  }
  return covered == bits;
}

bool SpaceAnalysis::is_in_class(Subset a, ClassKind kind) const {
  if (a.universe() != size()) throw InputError("subset does not fit the space");
  const Topology& t = base_;
  const Subset none = t.none();
  switch (kind) {
    case ClassKind::open: return t.is_open(a);
    case ClassKind::closed: return t.is_closed(a);
    case ClassKind::semi_open: return is_semi_open(t, a);
    case ClassKind::semi_closed: return t.interior(t.closure(a)).subset_of(a);
    case ClassKind::regular_open: return a == t.interior(t.closure(a));
    case ClassKind::regular_closed: return is_regular_closed(t, a);
    case ClassKind::alpha_open: return alpha_.is_open(a);
    case ClassKind::alpha_closed: return alpha_.is_closed(a);
    case ClassKind::preopen: return a.subset_of(t.interior(t.closure(a)));
    case ClassKind::beta_open: return a.subset_of(t.closure(t.interior(t.closure(a))));
    case ClassKind::nowhere_dense: return t.interior(t.closure(a)) == none;
    case ClassKind::dense: return t.closure(a).is_full();
    case ClassKind::codense: return t.interior(a) == none;
    case ClassKind::clopen: return t.is_open(a) && t.is_closed(a);
    case ClassKind::g_closed: return g_closed(a);
    case ClassKind::g_open: return g_closed(a.complement());
    case ClassKind::sg_closed: return sg_closed(a);
    case ClassKind::sg_open: return sg_closed(a.complement());
    case ClassKind::g_alpha_closed: return g_alpha_closed(a);
    case ClassKind::f_sigma_g_alpha_closed: return f_sigma_g_alpha_closed(a);
  }
  return false;
}

SetClass SpaceAnalysis::set_class(ClassKind kind) const {
  const int n = size();
  const Topology& t = base_;
  const auto all = all_masks(n);
  const auto cl = t.closure_table();
  const auto in = t.interior_table();

  std::vector<Subset> members;
  switch (kind) {
    case ClassKind::open: members = t.opens(); break;
    case ClassKind::alpha_open: members = alpha_.opens(); break;
    case ClassKind::semi_open: members = semi_open_; break;
    case ClassKind::preopen: members = filter_contained(n, all, compose(in, cl), false); break;
    case ClassKind::beta_open: members = filter_contained(n, all, compose(cl, compose(in, cl)), false); break;
    case ClassKind::semi_closed: members = filter_contained(n, all, compose(in, cl), true); break;
    case ClassKind::alpha_closed: members = filter_contained(n, all, compose(cl, compose(in, cl)), true); break;
    default:
      for (Mask m : all) {
        const Subset a = Subset::raw(n, m);
        if (is_in_class(a, kind)) members.push_back(a);
      }
  }
  return SetClass::make(kind, n, std::move(members));
}

Subset hull(const Topology& t, Subset a, ClosureKind kind) {
  if (a.universe() != t.size()) throw InputError("subset does not fit the space");
  switch (kind) {
    case ClosureKind::closure: return t.closure(a);
    case ClosureKind::interior: return t.interior(a);
    case ClosureKind::semi_closure: return semi_closure(t, a);
    case ClosureKind::semi_interior: return semi_interior(t, a);
    case ClosureKind::alpha_closure: return alpha_topology(t).closure(a);
    case ClosureKind::alpha_semi_closure: return semi_closure(alpha_topology(t), a);
  }
  return a;
}
bool is_in_class(const Topology& t, Subset a, ClassKind kind) { return SpaceAnalysis(t).is_in_class(a, kind); }
SetClass set_class(const Topology& t, ClassKind kind) { return SpaceAnalysis(t).set_class(kind); }

}  // namespace fintop
