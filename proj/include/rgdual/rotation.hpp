#ifndef RGDUAL_ROTATION_HPP
#define RGDUAL_ROTATION_HPP

#include <cstddef>

#include "rgdual/flag_map.hpp"
#include "rgdual/permutation.hpp"

namespace rgdual {

/// An orientable map on half-edges 1..h: sigma_v gives the cyclic order of
/// half-edges around each vertex, sigma_e pairs half-edges into edges.
class RotationSystem {
 public:
  RotationSystem() = default;

  /// Throws DomainMismatch, NotInvolution or HasFixedPoint when sigma_e is
  /// not a fixed-point-free involution of the same degree as sigma_v.
  RotationSystem(Permutation sigma_v, Permutation sigma_e);

  std::size_t halfedge_count() const noexcept { return sigma_v_.degree(); }
  std::size_t edge_count() const noexcept { return sigma_v_.degree() / 2; }
  const Permutation& sigma_v() const noexcept { return sigma_v_; }
  const Permutation& sigma_e() const noexcept { return sigma_e_; }

  /// Face permutation: sigma_v first, then sigma_e.
  Permutation faces() const { return compose(sigma_e_, sigma_v_); }

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;

 private:
  Permutation sigma_v_;
  Permutation sigma_e_;
};

MapMetrics rs_metrics(const RotationSystem& rs);

/// Partial dual at the edge (a b): sigma_v becomes (a b) * sigma_v.
/// Throws UnknownEdge when (a b) is not a transposition of sigma_e.
RotationSystem partial_dual_rotation(const RotationSystem& rs, int a, int b);

/// Half-edge h becomes flags 2h-1 (its "+" side) and 2h ("-" side).
FlagMap to_flag_map(const RotationSystem& rs);

/// Inverse of to_flag_map up to half-edge relabelling. Per component the
/// colour class holding the minimal flag becomes the half-edges, numbered by
/// ascending flag. Throws NonOrientable.
RotationSystem from_flag_map(const FlagMap& m);

}  // namespace rgdual

#endif  // RGDUAL_ROTATION_HPP
