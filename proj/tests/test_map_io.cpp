#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "rgdual/errors.hpp"
#include "rgdual/map_io.hpp"
#include "rgdual/partial_dual.hpp"
#include "rgdual/random_map.hpp"

using namespace rgdual;

TEST_CASE("reading the triangle files") {
  auto m = parse_flagmap(fixtures::read_text("triangle.map"));
  CHECK(m == fixtures::triangle());
  auto rs = parse_rotation(fixtures::read_text("triangle.rot"));
  CHECK(rs == fixtures::triangle_rotation());

  auto any = parse_map_file(fixtures::read_text("triangle.rot"));
  CHECK(std::holds_alternative<RotationSystem>(any));
  CHECK(is_isomorphic(as_flag_map(any), m));
}

TEST_CASE("writer output is canonical") {
  const std::string expected =
      "format flagmap 1\n"
      "flags 12\n"
      "tau0 (1 2)(3 4)(5 8)(6 7)(9 12)(10 11)\n"
      "tau1 (1 11)(2 6)(3 5)(4 12)(7 10)(8 9)\n"
      "tau2 (1 4)(2 3)(5 6)(7 8)(9 10)(11 12)\n"
      "edge e1 1\n"
      "edge e2 5\n"
      "edge e3 9\n";
  CHECK(write_flagmap(fixtures::triangle()) == expected);
  CHECK(write_rotation(fixtures::triangle_rotation()) == fixtures::read_text("triangle.rot"));
  CHECK(write_flagmap(FlagMap{}) == "format flagmap 1\nflags 0\ntau0 ()\ntau1 ()\ntau2 ()\n");
}

TEST_CASE("labels without edge lines are generated") {
  auto m = parse_flagmap(
      "format flagmap 1\nflags 4\ntau0 (1 2)(3 4)\ntau1 (1 3)(2 4)\ntau2 (1 4)(2 3)\n");
  CHECK(m.edge_labels() == std::vector<std::string>{"e1"});
  auto named = parse_flagmap(
      "# comment\n\nformat flagmap 1   \nflags 4\ntau0 (1 2)(3 4)  # trailing\r\n"
      "tau1 (1 3)(2 4)\ntau2 (1 4)(2 3)\nedge loop 3\n");
  CHECK(named.edge_labels() == std::vector<std::string>{"loop"});
  CHECK(named.edge_label_list()[0].flag == 1);
}

TEST_CASE("malformed files") {
  const std::string head = "format flagmap 1\nflags 4\n";
  const std::string taus = "tau0 (1 2)(3 4)\ntau1 (1 3)(2 4)\ntau2 (1 4)(2 3)\n";
  struct Case {
    std::string text;
    ErrorCode code;
  };
  const Case cases[] = {
      {"", ErrorCode::Parse},
      {"format flagmap 2\n", ErrorCode::Parse},
      {"format graph 1\n", ErrorCode::Parse},
      {"format flagmap 1\nflags x\n" + taus, ErrorCode::Parse},
      {"format flagmap 1\nflags -4\n" + taus, ErrorCode::Parse},
      {head + "tau1 (1 3)(2 4)\ntau0 (1 2)(3 4)\ntau2 (1 4)(2 3)\n", ErrorCode::Parse},
      {head + "tau0 (1 2)(3 4)\ntau1 (1 3)(2 4)\n", ErrorCode::Parse},
      {head + "tau0 (1 2) (3 4)\ntau1 (1 3)(2 4)\ntau2 (1 4)(2 3)\n", ErrorCode::Parse},
      {head + "tau0 (1 2)(3 5)\ntau1 (1 3)(2 4)\ntau2 (1 4)(2 3)\n", ErrorCode::Parse},
      {head + taus + "edge e1\n", ErrorCode::Parse},
      {head + taus + "edge e1 9\n", ErrorCode::Parse},
      {head + taus + "vertex v 1\n", ErrorCode::Parse},
      {head + taus + "edge a 1\nedge b 2\n", ErrorCode::BadEdgeLabels},
      {head + "tau0 (1 2)\ntau1 (1 3)(2 4)\ntau2 (1 4)(2 3)\n", ErrorCode::HasFixedPoint},
      {head + "tau0 (1 2)(3 4)\ntau1 (1 3)(2 4)\ntau2 (1 2)(3 4)\n", ErrorCode::HypermapDetected},
      {"format rotation 1\nhalfedges 2\nsigma_v ()\nsigma_e ()\n", ErrorCode::HasFixedPoint},
      {"format rotation 1\nhalfedges 2\nsigma_v ()\nsigma_e (1 2)\nextra 1\n", ErrorCode::Parse},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    try {
      parse_map_file(c.text);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == c.code);
    }
  }
}

TEST_CASE("emitted files re-parse to the same value") {
  std::mt19937_64 rng(31);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto edges = 1 + seed % 9;
    auto m = random_map(edges, seed % (edges + 1), seed);
    const auto text = write_flagmap(m);
    CHECK(parse_flagmap(text) == m);
    CHECK(write_flagmap(parse_flagmap(text)) == text);

    auto rs = random_rotation_system(edges, rng);
    CHECK(parse_rotation(write_rotation(rs)) == rs);
  }
}
