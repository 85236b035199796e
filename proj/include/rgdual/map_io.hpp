#ifndef RGDUAL_MAP_IO_HPP
#define RGDUAL_MAP_IO_HPP

#include <string>
#include <string_view>
#include <variant>

#include "rgdual/flag_map.hpp"
#include "rgdual/rotation.hpp"

namespace rgdual {

// Line-oriented text formats. Keys appear in a fixed order, one per line;
// `#` starts a comment and blank lines are ignored.
//
//   format flagmap 1          format rotation 1
//   flags 12                  halfedges 6
//   tau0 <cycles>             sigma_v <cycles>
//   tau1 <cycles>             sigma_e <cycles>
//   tau2 <cycles>
//   edge <label> <flag>       (optional, zero or one per edge)

FlagMap parse_flagmap(std::string_view text);
std::string write_flagmap(const FlagMap& m);

RotationSystem parse_rotation(std::string_view text);
std::string write_rotation(const RotationSystem& rs);

using MapFile = std::variant<FlagMap, RotationSystem>;

/// Dispatches on the `format` line.
MapFile parse_map_file(std::string_view text);

/// The flag map of either kind of file.
FlagMap as_flag_map(const MapFile& file);

}  // namespace rgdual

#endif  // RGDUAL_MAP_IO_HPP
