#include <algorithm>
#include <tuple>

#include "rgdual/flag_map.hpp"

namespace rgdual {

namespace {

struct Component {
  std::vector<int> flags;
  // (size, vertices, faces) is a cheap filter before the exact search.
  std::tuple<std::size_t, std::size_t, std::size_t> key;
};

std::vector<Component> split(const FlagMap& m) {
  const auto n = m.flag_count();
  auto vertex = orbit_index(std::array<PermutationRef, 2>{m.tau1(), m.tau2()}, n);
  auto face = orbit_index(std::array<PermutationRef, 2>{m.tau0(), m.tau1()}, n);
  std::vector<Component> out;
  for (auto& flags : components(m)) {
    std::vector<std::size_t> vs, fs;
    for (int x : flags) {
      vs.push_back(vertex[static_cast<std::size_t>(x - 1)]);
      fs.push_back(face[static_cast<std::size_t>(x - 1)]);
    }
    std::sort(vs.begin(), vs.end());
    std::sort(fs.begin(), fs.end());
    auto distinct = [](std::vector<std::size_t>& v) {
      return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
    };
    auto key = std::make_tuple(flags.size(), distinct(vs), distinct(fs));
    out.push_back({std::move(flags), key});
  }
  return out;
}

// Tries to extend x -> y to an isomorphism between the components holding
// x and y. On failure `image` is restored to its previous state.
bool extend(const FlagMap& m1, const FlagMap& m2, int x, int y, std::vector<int>& image) {
  std::vector<int> assigned{x};
  image[static_cast<std::size_t>(x - 1)] = y;
  for (std::size_t k = 0; k < assigned.size(); ++k) {
    int a = assigned[k];
    int b = image[static_cast<std::size_t>(a - 1)];
    for (int i = 0; i < 3; ++i) {
      int a2 = m1.tau(i)(a);
      int b2 = m2.tau(i)(b);
      int& slot = image[static_cast<std::size_t>(a2 - 1)];
      if (slot == 0) {
        slot = b2;
        assigned.push_back(a2);
      } else if (slot != b2) {
        for (int z : assigned) image[static_cast<std::size_t>(z - 1)] = 0;
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<Permutation> find_isomorphism(const FlagMap& m1, const FlagMap& m2) {
  if (m1.flag_count() != m2.flag_count()) return std::nullopt;
  auto comps1 = split(m1);
  auto comps2 = split(m2);
  if (comps1.size() != comps2.size()) return std::nullopt;

  // Isomorphism of components is an equivalence relation, so matching each
  // component of m1 to the first unused isomorphic component of m2 never
  // blocks a valid assignment.
  std::vector<int> image(m1.flag_count(), 0);
  std::vector<bool> used(comps2.size(), false);
  for (const auto& c1 : comps1) {
    bool matched = false;
    for (std::size_t j = 0; j < comps2.size() && !matched; ++j) {
      if (used[j] || comps2[j].key != c1.key) continue;
      for (int y : comps2[j].flags) {
        if (extend(m1, m2, c1.flags.front(), y, image)) {
          used[j] = true;
          matched = true;
          break;
        }
      }
    }
    if (!matched) return std::nullopt;
  }
  return Permutation::from_images(std::move(image));
}

}  // namespace rgdual
