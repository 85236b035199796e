#ifndef RGDUAL_FLAG_MAP_HPP
#define RGDUAL_FLAG_MAP_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rgdual/permutation.hpp"

namespace rgdual {

/// An edge label attached to the edge whose four flags contain `flag`.
struct EdgeLabel {
  std::string label;
  int flag = 0;
};

/// A ribbon graph as a bi-rotation system: three fixed-point-free
/// involutions on the flags 1..n. Vertices, edges and faces are the orbits
/// of {tau1, tau2}, {tau0, tau2} and {tau0, tau1}.
///
/// Edges are indexed 0..e-1 in order of their minimal flag. Every operation
/// in this library keeps the {tau0, tau2}-orbits setwise, so an edge keeps
/// both its index and its label across duals.
class FlagMap {
 public:
  /// The empty map (no flags).
  FlagMap() = default;

  std::size_t flag_count() const noexcept { return tau_[0].degree(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Permutation& tau0() const noexcept { return tau_[0]; }
  const Permutation& tau1() const noexcept { return tau_[1]; }
  const Permutation& tau2() const noexcept { return tau_[2]; }
  const Permutation& tau(int i) const { return tau_.at(static_cast<std::size_t>(i)); }

  /// The four flags of an edge, ascending.
  const std::array<int, 4>& edge_flags(std::size_t edge) const { return edges_.at(edge); }
  const std::string& edge_label(std::size_t edge) const { return labels_.at(edge); }
  const std::vector<std::string>& edge_labels() const noexcept { return labels_; }
  std::size_t edge_of_flag(int flag) const { return edge_of_flag_.at(static_cast<std::size_t>(flag - 1)); }

  std::optional<std::size_t> find_edge(std::string_view label) const;

  /// Labels in the (label, minimal flag) form accepted by validate_map.
  std::vector<EdgeLabel> edge_label_list() const;

  friend bool operator==(const FlagMap&, const FlagMap&) = default;

 private:
  friend FlagMap validate_map(std::size_t, Permutation, Permutation, Permutation,
                              std::optional<std::vector<EdgeLabel>>);

  std::array<Permutation, 3> tau_;
  std::vector<std::array<int, 4>> edges_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> edge_of_flag_;
};

/// Checks the raw involutions and builds a FlagMap. When `labels` is absent
/// the edges are named e1, e2, ... in order of their minimal flag.
///
/// Throws Error with NotInvolution / HasFixedPoint (naming tau<i>),
/// HypermapDetected (a {tau0,tau2}-orbit whose size is not 4, listed in the
/// message), BadEdgeLabels or DomainMismatch.
FlagMap validate_map(std::size_t n, Permutation tau0, Permutation tau1, Permutation tau2,
                     std::optional<std::vector<EdgeLabel>> labels = std::nullopt);

/// Orientability and Euler genus of one closed connected surface.
struct SurfaceSignature {
  bool orientable = true;
  int euler_genus = 0;

  friend auto operator<=>(const SurfaceSignature&, const SurfaceSignature&) = default;
};

struct MapMetrics {
  int v = 0;
  int e = 0;
  int f = 0;
  int c = 0;
  int euler_genus = 0;
  bool orientable = true;
  /// One entry per connected component, sorted.
  std::vector<SurfaceSignature> components;

  /// Orientable genus; only meaningful when `orientable`.
  int genus() const noexcept { return euler_genus / 2; }

  friend bool operator==(const MapMetrics&, const MapMetrics&) = default;
};

MapMetrics metrics(const FlagMap& m);

/// Gem bipartiteness: every tau-pair joins flags of opposite colour.
bool is_orientable(const FlagMap& m);

/// Flag sets of the connected components (orbits of all three involutions).
Partition components(const FlagMap& m);

/// Euler-Poincare dual: exchanges tau0 and tau2.
FlagMap total_dual(const FlagMap& m);

struct TuttePermutations {
  Permutation theta;
  Permutation phi;
  Permutation P;
};

TuttePermutations tutte_permutations(const FlagMap& m);

/// The map whose flag phi(x) plays the role of flag x in m, i.e.
/// tau_i' = phi * tau_i * phi^-1. Labels travel with their edges.
FlagMap relabel(const FlagMap& m, const Permutation& phi);

/// A flag bijection phi with phi * tau_i(m1) = tau_i(m2) * phi for i = 0,1,2,
/// or nothing when the maps are not isomorphic. Edge labels are ignored.
std::optional<Permutation> find_isomorphism(const FlagMap& m1, const FlagMap& m2);

inline bool is_isomorphic(const FlagMap& m1, const FlagMap& m2) {
  return find_isomorphism(m1, m2).has_value();
}

/// The gem as an undirected Graphviz graph: a node per flag and an edge per
/// tau-pair, coloured by involution index.
std::string gem_dot(const FlagMap& m);

}  // namespace rgdual

#endif  // RGDUAL_FLAG_MAP_HPP
