#ifndef RGDUAL_PARTIAL_DUAL_HPP
#define RGDUAL_PARTIAL_DUAL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rgdual/flag_map.hpp"

namespace rgdual {

/// A subset of a map's edges, held as sorted edge indices. Since duals keep
/// edge indices, a set resolved against m is also valid for every partial
/// dual of m and for total_dual(m).
class EdgeSet {
 public:
  EdgeSet() = default;

  /// Throws UnknownEdge for a label m does not have, InvalidArgument for a
  /// label listed twice.
  static EdgeSet resolve(const FlagMap& m, std::span<const std::string> labels);
  static EdgeSet all(const FlagMap& m);
  /// Bit i of `mask` selects edge i. Requires edge_count <= 64.
  static EdgeSet from_mask(std::uint64_t mask, std::size_t edge_count);
  static EdgeSet from_indices(std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(std::size_t edge) const;

  std::vector<std::string> labels(const FlagMap& m) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);
/// E(m) minus a.
EdgeSet complement(const FlagMap& m, const EdgeSet& a);

/// The parts of tau0 and tau2 acting on one edge's four flags, extended by
/// the identity elsewhere.
std::pair<Permutation, Permutation> edge_involutions(const FlagMap& m, std::size_t edge);
std::pair<Permutation, Permutation> edge_involutions(const FlagMap& m, std::string_view label);

/// Single-edge partial dual by the product formula
///   tau0' = tau0 tau0^e tau2^e,  tau1' = tau1,  tau2' = tau2 tau0^e tau2^e.
FlagMap partial_dual_edge(const FlagMap& m, std::size_t edge);
FlagMap partial_dual_edge(const FlagMap& m, std::string_view label);

/// Fold of partial_dual_edge over `edges`.
FlagMap partial_dual(const FlagMap& m, const EdgeSet& edges);

using DualFunction = std::function<FlagMap(const FlagMap&, const EdgeSet&)>;

/// How many edge subsets check_duality_properties looks at. All subsets are
/// used when there are at most `max_subsets`, otherwise a seeded sample
/// (which always includes the empty set and E).
struct SubsetBudget {
  std::size_t max_subsets = 64;
  std::uint64_t seed = 1;

  static SubsetBudget exhaustive() { return {SIZE_MAX, 1}; }
};

struct PropertyTally {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

struct DualityReport {
  PropertyTally fold{"(a) fold consistency", 0, {}};
  PropertyTally involution{"(b) double dual", 0, {}};
  PropertyTally symmetric_difference{"(c) symmetric difference", 0, {}};
  PropertyTally orientability{"(d) orientability", 0, {}};
  PropertyTally closed_surface{"(e) capped surface", 0, {}};
  PropertyTally components{"(f) components", 0, {}};

  std::vector<const PropertyTally*> tallies() const {
    return {&fold, &involution, &symmetric_difference, &orientability, &closed_surface,
            &components};
  }
  std::vector<PropertyTally*> tallies() {
    return {&fold, &involution, &symmetric_difference, &orientability, &closed_surface,
            &components};
  }
  bool passed() const;
  std::size_t failure_count() const;
  void merge(const DualityReport& other);
};

/// Checks the partial-duality identities on subsets of m's edges:
///  (a) (m^A)^{e} == m^{A+e} for e not in A,
///  (b) (m^A)^A == m,
///  (c) (m^A)^B == m^{A sym-diff B},
///  (d) orientability and (f) component count are unchanged,
///  (e) m^A and m^{E-A} have the same per-component (orientability, Euler
///      genus) signature, i.e. the same capped closed surfaces.
/// `dual` is the operation under test; it defaults to partial_dual.
DualityReport check_duality_properties(const FlagMap& m, SubsetBudget budget = {},
                                       const DualFunction& dual = partial_dual);

}  // namespace rgdual

#endif  // RGDUAL_PARTIAL_DUAL_HPP
