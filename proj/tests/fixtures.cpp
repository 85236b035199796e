#include "fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rgdual/map_io.hpp"

namespace fixtures {

using namespace rgdual;

FlagMap triangle() {
  return validate_map(12, parse_cycles(triangle_tau0, 12), parse_cycles(triangle_tau1, 12),
                      parse_cycles(triangle_tau2, 12));
}

RotationSystem triangle_rotation() {
  return {parse_cycles("(1 6)(2 3)(4 5)", 6), parse_cycles("(1 2)(3 4)(5 6)", 6)};
}

FlagMap twisted_loop() {
  return validate_map(4, parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4),
                      parse_cycles("(1 4)(2 3)", 4));
}

FlagMap plane_loop() {
  // to_flag_map of the single edge sigma_v = (1 2), sigma_e = (1 2).
  return to_flag_map({parse_cycles("(1 2)", 2), parse_cycles("(1 2)", 2)});
}

std::string read_text(const std::string& name) {
  std::ifstream in(std::string(RGDUAL_TEST_DATA) + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FlagMap read_map(const std::string& name) { return as_flag_map(parse_map_file(read_text(name))); }

namespace oracle {

Involutions raw(const FlagMap& m) {
  Involutions t;
  for (int i = 0; i < 3; ++i)
    for (int x : m.tau(i).images()) t[static_cast<std::size_t>(i)].push_back(x - 1);
  return t;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  int classes() {
    int k = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++k;
    return k;
  }
};

int count_orbits(const Involutions& t, std::initializer_list<int> gens) {
  UnionFind uf(t[0].size());
  for (int g : gens)
    for (std::size_t x = 0; x < t[0].size(); ++x)
      uf.unite(static_cast<int>(x), t[static_cast<std::size_t>(g)][x]);
  return uf.classes();
}

}  // namespace

Involutions dual_by_swap(const FlagMap& m, const std::vector<std::size_t>& edges) {
  auto t = raw(m);
  auto out = t;
  for (auto e : edges) {
    // Collect the edge orbit by walking from its minimal flag.
    std::vector<int> orbit{m.edge_flags(e)[0] - 1};
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (int g : {0, 2}) {
        int y = t[static_cast<std::size_t>(g)][static_cast<std::size_t>(orbit[k])];
        if (std::find(orbit.begin(), orbit.end(), y) == orbit.end()) orbit.push_back(y);
      }
    for (int x : orbit) std::swap(out[0][static_cast<std::size_t>(x)], out[2][static_cast<std::size_t>(x)]);
  }
  return out;
}

int euler_genus(const Involutions& t) {
  const int v = count_orbits(t, {1, 2});
  const int e = count_orbits(t, {0, 2});
  const int f = count_orbits(t, {0, 1});
  const int c = count_orbits(t, {0, 1, 2});
  return 2 * c - (v - e + f);
}

bool bipartite(const Involutions& t) {
  const auto n = t[0].size();
  std::vector<int> colour(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& g : t) {
        auto y = static_cast<std::size_t>(g[queue[k]]);
        if (colour[y] < 0) {
          colour[y] = 1 - colour[queue[k]];
          queue.push_back(y);
        } else if (colour[y] == colour[queue[k]]) {
          return false;
        }
      }
  }
  return true;
}

}  // namespace oracle

}  // namespace fixtures
