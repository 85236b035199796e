#include "rgdual/random_map.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "rgdual/errors.hpp"

namespace rgdual {

RotationSystem random_rotation_system(std::size_t edges, std::mt19937_64& rng) {
  const auto h = 2 * edges;
  std::vector<int> sv(h);
  std::iota(sv.begin(), sv.end(), 1);
  std::shuffle(sv.begin(), sv.end(), rng);

  std::vector<int> order(h);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> se(h);
  for (std::size_t i = 0; i < h; i += 2) {
    se[static_cast<std::size_t>(order[i] - 1)] = order[i + 1];
    se[static_cast<std::size_t>(order[i + 1] - 1)] = order[i];
  }
  return {Permutation::from_images(std::move(sv)), Permutation::from_images(std::move(se))};
}

FlagMap twist_edge(const FlagMap& m, std::size_t edge) {
  if (edge >= m.edge_count())
    throw Error(ErrorCode::UnknownEdge, "edge index " + std::to_string(edge) + " out of range");
  const int p = m.edge_flags(edge)[0];
  const int q = m.tau0()(p);
  const int r = m.tau2()(p);
  const int s = m.tau0()(r);
  auto t0 = m.tau0().images();
  auto set = [&](int x, int y) {
    t0[static_cast<std::size_t>(x - 1)] = y;
    t0[static_cast<std::size_t>(y - 1)] = x;
  };
  set(p, s);
  set(q, r);
  return validate_map(m.flag_count(), Permutation::from_images(std::move(t0)), m.tau1(), m.tau2(),
                      m.edge_label_list());
}

FlagMap random_map(std::size_t edges, std::size_t twists, std::uint64_t seed) {
  if (edges < 1) throw Error(ErrorCode::InvalidArgument, "need at least one edge");
  if (twists > edges) throw Error(ErrorCode::InvalidArgument, "more twists than edges");
  std::mt19937_64 rng(seed);
  auto m = to_flag_map(random_rotation_system(edges, rng));
  std::vector<std::size_t> order(edges);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < twists; ++i) m = twist_edge(m, order[i]);
  return m;
}

}  // namespace rgdual
