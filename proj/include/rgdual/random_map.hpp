#ifndef RGDUAL_RANDOM_MAP_HPP
#define RGDUAL_RANDOM_MAP_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "rgdual/flag_map.hpp"
#include "rgdual/rotation.hpp"

namespace rgdual {

/// Uniform sigma_v and uniform perfect matching sigma_e on 2 * edges
/// half-edges.
RotationSystem random_rotation_system(std::size_t edges, std::mt19937_64& rng);

/// Gives one edge a half-twist: with tau0 = (p q)(r s) and
/// tau2 = (p r)(q s) on its flags, tau0 becomes (p s)(q r).
FlagMap twist_edge(const FlagMap& m, std::size_t edge);

/// A random rotation system converted to a flag map, then `twists` distinct
/// edges chosen uniformly get a half-twist. Same arguments, same map.
/// Throws InvalidArgument unless edges >= 1 and twists <= edges.
FlagMap random_map(std::size_t edges, std::size_t twists, std::uint64_t seed);

}  // namespace rgdual

#endif  // RGDUAL_RANDOM_MAP_HPP
