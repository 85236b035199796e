#include "rgdual/rotation.hpp"

#include <algorithm>

#include "rgdual/errors.hpp"

namespace rgdual {

RotationSystem::RotationSystem(Permutation sigma_v, Permutation sigma_e)
    : sigma_v_(std::move(sigma_v)), sigma_e_(std::move(sigma_e)) {
  if (sigma_v_.degree() != sigma_e_.degree())
    throw Error(ErrorCode::DomainMismatch, "sigma_v and sigma_e have different degrees");
  if (!is_involution(sigma_e_))
    throw Error(ErrorCode::NotInvolution, "sigma_e is not an involution");
  for (int x = 1; static_cast<std::size_t>(x) <= sigma_e_.degree(); ++x)
    if (sigma_e_(x) == x)
      throw Error(ErrorCode::HasFixedPoint, "sigma_e fixes half-edge " + std::to_string(x));
}

MapMetrics rs_metrics(const RotationSystem& rs) {
  const auto h = rs.halfedge_count();
  const auto face_perm = rs.faces();
  auto vertex = orbit_index(std::array<PermutationRef, 1>{rs.sigma_v()}, h);
  auto face = orbit_index(std::array<PermutationRef, 1>{face_perm}, h);
  auto comps = orbits({rs.sigma_v(), rs.sigma_e()}, h);

  MapMetrics out;
  out.e = static_cast<int>(rs.edge_count());
  out.c = static_cast<int>(comps.size());
  std::vector<bool> vertex_seen(h, false), face_seen(h, false);
  for (const auto& comp : comps) {
    int v = 0, f = 0;
    for (int x : comp) {
      auto i = static_cast<std::size_t>(x - 1);
      if (!vertex_seen[vertex[i]]) vertex_seen[vertex[i]] = true, ++v;
      if (!face_seen[face[i]]) face_seen[face[i]] = true, ++f;
    }
    const int e = static_cast<int>(comp.size() / 2);
    out.v += v;
    out.f += f;
    out.components.push_back({true, 2 - (v - e + f)});
  }
  std::sort(out.components.begin(), out.components.end());
  out.euler_genus = 2 * out.c - (out.v - out.e + out.f);
  return out;
}

RotationSystem partial_dual_rotation(const RotationSystem& rs, int a, int b) {
  const auto h = rs.halfedge_count();
  if (a < 1 || b < 1 || static_cast<std::size_t>(a) > h || static_cast<std::size_t>(b) > h ||
      a == b || rs.sigma_e()(a) != b)
    throw Error(ErrorCode::UnknownEdge, "(" + std::to_string(a) + " " + std::to_string(b) +
                                            ") is not an edge of sigma_e");
  return {compose(Permutation::transposition(h, a, b), rs.sigma_v()), rs.sigma_e()};
}

FlagMap to_flag_map(const RotationSystem& rs) {
  const auto h = rs.halfedge_count();
  auto plus = [](int x) { return 2 * x - 1; };
  auto minus = [](int x) { return 2 * x; };
  const auto v_inv = rs.sigma_v().inverse();
  std::vector<int> t0(2 * h), t1(2 * h), t2(2 * h);
  auto set = [](std::vector<int>& t, int x, int y) { t[static_cast<std::size_t>(x - 1)] = y; };
  for (int x = 1; static_cast<std::size_t>(x) <= h; ++x) {
    set(t2, plus(x), minus(x));
    set(t2, minus(x), plus(x));
    set(t1, minus(x), plus(rs.sigma_v()(x)));
    set(t1, plus(x), minus(v_inv(x)));
    set(t0, minus(x), plus(rs.sigma_e()(x)));
    set(t0, plus(x), minus(rs.sigma_e()(x)));
  }
  return validate_map(2 * h, Permutation::from_images(std::move(t0)),
                      Permutation::from_images(std::move(t1)),
                      Permutation::from_images(std::move(t2)));
}

RotationSystem from_flag_map(const FlagMap& m) {
  const auto n = m.flag_count();
  // Colour each component from its minimal flag; colour 0 is the chosen side.
  std::vector<int> colour(n, -1);
  for (const auto& comp : components(m)) {
    colour[static_cast<std::size_t>(comp.front() - 1)] = 0;
    std::vector<int> stack{comp.front()};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      int cx = colour[static_cast<std::size_t>(x - 1)];
      for (int i = 0; i < 3; ++i) {
        auto y = static_cast<std::size_t>(m.tau(i)(x) - 1);
        if (colour[y] < 0) {
          colour[y] = 1 - cx;
          stack.push_back(static_cast<int>(y + 1));
        } else if (colour[y] == cx) {
          throw Error(ErrorCode::NonOrientable,
                      "map is non-orientable; it has no rotation system");
        }
      }
    }
  }

  std::vector<int> halfedge_of_flag(n, 0);
  std::vector<int> flags;
  for (int x = 1; static_cast<std::size_t>(x) <= n; ++x)
    if (colour[static_cast<std::size_t>(x - 1)] == 0) {
      flags.push_back(x);
      halfedge_of_flag[static_cast<std::size_t>(x - 1)] = static_cast<int>(flags.size());
    }

  const auto vertex_step = compose(m.tau1(), m.tau2());
  const auto edge_step = compose(m.tau0(), m.tau2());
  std::vector<int> sv(flags.size()), se(flags.size());
  for (std::size_t i = 0; i < flags.size(); ++i) {
    sv[i] = halfedge_of_flag[static_cast<std::size_t>(vertex_step(flags[i]) - 1)];
    se[i] = halfedge_of_flag[static_cast<std::size_t>(edge_step(flags[i]) - 1)];
  }
  return {Permutation::from_images(std::move(sv)), Permutation::from_images(std::move(se))};
}

}  // namespace rgdual
