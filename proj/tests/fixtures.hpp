#ifndef RGDUAL_TESTS_FIXTURES_HPP
#define RGDUAL_TESTS_FIXTURES_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rgdual/flag_map.hpp"
#include "rgdual/rotation.hpp"

namespace fixtures {

// The triangle with its flags numbered 1..12 (hex a, b, c = 10, 11, 12).
// Flag 1 is paired with flag 4 under tau2.
inline constexpr const char* triangle_tau0 = "(1 2)(3 4)(5 8)(6 7)(9 12)(10 11)";
inline constexpr const char* triangle_tau1 = "(1 11)(4 12)(2 6)(3 5)(7 10)(8 9)";
inline constexpr const char* triangle_tau2 = "(1 4)(2 3)(5 6)(7 8)(9 10)(11 12)";

rgdual::FlagMap triangle();
rgdual::RotationSystem triangle_rotation();

// One edge, one vertex, one face, with a half-twist: the projective plane.
rgdual::FlagMap twisted_loop();
// The smallest orientable map: one untwisted loop at one vertex.
rgdual::FlagMap plane_loop();

rgdual::FlagMap read_map(const std::string& name);
std::string read_text(const std::string& name);

// Independent reference computations: no library code beyond the accessors.
namespace oracle {

using Involutions = std::array<std::vector<int>, 3>;  // 0-based images

Involutions raw(const rgdual::FlagMap& m);

// Partial dual by exchanging tau0 and tau2 on every flag of the chosen edges;
// edges found by walking tau0/tau2 from each flag.
Involutions dual_by_swap(const rgdual::FlagMap& m, const std::vector<std::size_t>& edges);

// 2c - (v - e + f) with orbits found by union-find.
int euler_genus(const Involutions& t);
bool bipartite(const Involutions& t);

}  // namespace oracle

}  // namespace fixtures

#endif
