#include <sstream>

#include "rgdual/flag_map.hpp"

namespace rgdual {

std::string gem_dot(const FlagMap& m) {
  static constexpr const char* colours[] = {"red", "blue", "forestgreen"};
  std::ostringstream out;
  out << "graph gem {\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (int x = 1; static_cast<std::size_t>(x) <= m.flag_count(); ++x) out << "  " << x << ";\n";
  for (int i = 0; i < 3; ++i) {
    for (int x = 1; static_cast<std::size_t>(x) <= m.flag_count(); ++x) {
      int y = m.tau(i)(x);
      if (x < y)
        out << "  " << x << " -- " << y << " [color=" << colours[i] << ", label=\"" << i
            << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace rgdual
