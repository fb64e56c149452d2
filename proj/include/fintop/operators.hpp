#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fintop/set_class.hpp"
#include "fintop/topology.hpp"

namespace fintop {

enum class ClosureKind { closure, interior, semi_closure, alpha_closure, alpha_semi_closure, semi_interior };

std::string_view to_string(ClosureKind kind);
std::optional<ClosureKind> parse_closure_kind(std::string_view tag);

/// The alpha-topology: all A with A inside Int(Cl(Int A)).
Topology alpha_topology(const Topology& t);

/// A space together with its materialized alpha-topology and the semi-open
/// family, so that repeated class and hull queries share the work.
///
/// Every alpha-prefixed operator is evaluated in the materialized alpha
/// topology; nothing is rewritten in terms of the base topology.
class SpaceAnalysis {
 public:
  explicit SpaceAnalysis(Topology t);

  const Topology& space() const { return base_; }
  const Topology& alpha() const { return alpha_; }
  int size() const { return base_.size(); }

  Subset hull(Subset a, ClosureKind kind) const;
  bool is_in_class(Subset a, ClassKind kind) const;
  SetClass set_class(ClassKind kind) const;

  const std::vector<Subset>& semi_open_sets() const { return semi_open_; }

 private:
  bool g_closed(Subset a) const;
  bool sg_closed(Subset a) const;
  bool g_alpha_closed(Subset a) const;
  bool f_sigma_g_alpha_closed(Subset a) const;

  Topology base_;
  Topology alpha_;
  std::vector<Subset> semi_open_;
};

Subset hull(const Topology& t, Subset a, ClosureKind kind);
bool is_in_class(const Topology& t, Subset a, ClassKind kind);
SetClass set_class(const Topology& t, ClassKind kind);

/// sCl A = A | Int(Cl A), the smallest semi-closed superset.
Subset semi_closure(const Topology& t, Subset a);
/// Largest semi-open subset, A & Cl(Int A).
Subset semi_interior(const Topology& t, Subset a);
bool is_semi_open(const Topology& t, Subset a);
bool is_alpha_open(const Topology& t, Subset a);
bool is_regular_closed(const Topology& t, Subset a);

}  // namespace fintop
