#ifndef RGDUAL_GENUS_TOOLS_HPP
#define RGDUAL_GENUS_TOOLS_HPP

#include <vector>

#include "rgdual/flag_map.hpp"
#include "rgdual/partial_dual.hpp"

namespace rgdual {

/// The ribbon subgraph on a set of edges and the vertices they touch.
struct InducedSubgraph {
  EdgeSet edges;
  /// parent_flags[i] is the parent flag that became flag i + 1 of `submap`.
  std::vector<int> parent_flags;
  FlagMap submap;
};

/// G[A]. tau0 and tau2 are restricted to A's flags; tau1 is spliced past the
/// removed edges: tau1'(x) = tau1 (tau2 tau1)^k (x) for the least k >= 0 that
/// lands on a kept flag. Flags are renumbered 1..4|A| in ascending order and
/// edge labels are kept.
InducedSubgraph induced_subgraph(const FlagMap& m, const EdgeSet& edges);

/// G*[A]: the subgraph of total_dual(m) induced by the same edges.
InducedSubgraph dual_induced(const FlagMap& m, const EdgeSet& edges);

struct GenusChangeTerms {
  int v_induced = 0;
  int v_dual_induced = 0;
  int f_induced = 0;
  int f_dual_induced = 0;

  int value() const noexcept { return v_induced + v_dual_induced - f_induced - f_dual_induced; }
};

/// The vertex and face counts of G[A] and G*[A], computed without building
/// either submap.
GenusChangeTerms genus_change_terms(const FlagMap& m, const EdgeSet& edges);

/// Euler genus of m^A minus Euler genus of m, from the induced subgraphs.
inline int genus_change(const FlagMap& m, const EdgeSet& edges) {
  return genus_change_terms(m, edges).value();
}

}  // namespace rgdual

#endif  // RGDUAL_GENUS_TOOLS_HPP
