#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "rgdual/errors.hpp"
#include "rgdual/partial_dual.hpp"
#include "rgdual/random_map.hpp"
#include "rgdual/rotation.hpp"

using namespace rgdual;

TEST_CASE("rotation system construction") {
  CHECK_THROWS_AS(RotationSystem(Permutation(4), parse_cycles("(1 2)", 4)), Error);
  CHECK_THROWS_AS(RotationSystem(Permutation(4), parse_cycles("(1 2 3 4)", 4)), Error);
  CHECK_THROWS_AS(RotationSystem(Permutation(4), parse_cycles("(1 2)", 2)), Error);
}

TEST_CASE("rs_metrics") {
  auto tri = rs_metrics(fixtures::triangle_rotation());
  CHECK(tri.v == 3);
  CHECK(tri.e == 3);
  CHECK(tri.f == 2);
  CHECK(tri.c == 1);
  CHECK(tri.euler_genus == 0);
  CHECK(tri.orientable);

  RotationSystem torus(parse_cycles("(1 6)(2 4 5 3)", 6), parse_cycles("(1 2)(3 4)(5 6)", 6));
  auto t = rs_metrics(torus);
  CHECK(t.v == 2);
  CHECK(t.f == 1);
  CHECK(t.euler_genus == 2);
  CHECK(t.genus() == 1);

  RotationSystem edge(Permutation(2), parse_cycles("(1 2)", 2));
  auto em = rs_metrics(edge);
  CHECK(em.v == 2);
  CHECK(em.e == 1);
  CHECK(em.f == 1);
  CHECK(em.euler_genus == 0);
}

TEST_CASE("partial_dual_rotation") {
  auto rs = fixtures::triangle_rotation();
  auto d = partial_dual_rotation(rs, 3, 4);
  CHECK(format_cycles(d.sigma_v()) == "(1 6)(2 4 5 3)");
  CHECK(d.sigma_e() == rs.sigma_e());
  CHECK(partial_dual_rotation(d, 4, 3) == rs);

  for (auto [a, b] : {std::pair{2, 3}, std::pair{1, 1}, std::pair{0, 1}, std::pair{6, 7}}) {
    try {
      partial_dual_rotation(rs, a, b);
      FAIL("expected UnknownEdge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownEdge);
    }
  }
}

TEST_CASE("partial_dual_rotation on random systems") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto rs = random_rotation_system(static_cast<std::size_t>(1 + trial % 7), rng);
    auto base = rs_metrics(rs);
    CHECK(base.euler_genus % 2 == 0);
    CHECK(base.euler_genus >= 0);
    for (int a = 1; static_cast<std::size_t>(a) <= rs.halfedge_count(); ++a) {
      int b = rs.sigma_e()(a);
      if (a > b) continue;
      auto d = partial_dual_rotation(rs, a, b);
      auto dm = rs_metrics(d);
      CHECK(dm.e == base.e);
      CHECK(dm.c == base.c);
      CHECK(partial_dual_rotation(d, a, b) == rs);
      // Same edge through the flag encoding; the two routes differ by a
      // relabelling, not necessarily the identity.
      auto via_flags = partial_dual_edge(to_flag_map(rs), to_flag_map(rs).edge_of_flag(2 * a - 1));
      CHECK(is_isomorphic(to_flag_map(d), via_flags));
    }
  }
}

TEST_CASE("to_flag_map") {
  auto rs = fixtures::triangle_rotation();
  auto m = to_flag_map(rs);
  CHECK(m.flag_count() == 12);
  CHECK(is_orientable(m));
  auto a = rs_metrics(rs);
  auto b = metrics(m);
  CHECK(a == b);
  // The triangle's flag encoding and this one describe the same map.
  CHECK(is_isomorphic(m, fixtures::triangle()));
}

TEST_CASE("from_flag_map") {
  auto rs = from_flag_map(fixtures::triangle());
  // Chosen flags {1,3,6,8,10,12}; sigma_v = (1 12)(3 6)(8 10) before renumbering.
  CHECK(format_cycles(rs.sigma_v()) == "(1 6)(2 3)(4 5)");
  CHECK(format_cycles(rs.sigma_e()) == "(1 2)(3 4)(5 6)");
  CHECK(rs == fixtures::triangle_rotation());

  try {
    from_flag_map(fixtures::twisted_loop());
    FAIL("expected NonOrientable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonOrientable);
  }

  CHECK(from_flag_map(FlagMap{}).halfedge_count() == 0);
}

TEST_CASE("conversions round-trip on random systems") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    auto rs = random_rotation_system(static_cast<std::size_t>(1 + trial % 8), rng);
    auto m = to_flag_map(rs);
    CHECK(is_orientable(m));
    CHECK(rs_metrics(rs) == metrics(m));
    // "+" flags are the odd ones and hold each component's minimal flag, so
    // the round trip is exact.
    CHECK(from_flag_map(m) == rs);
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto m = random_map(1 + seed % 6, 0, seed);
    auto back = to_flag_map(from_flag_map(m));
    CHECK(metrics(back) == metrics(m));
    CHECK(is_isomorphic(back, m));
  }
}
