#include <doctest.h>

#include "artin/corpus.hpp"

using namespace artin;

TEST_CASE("random modules are deterministic per seed") {
  AlgebraRef R = plane_ring(3);
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    Module a = random_module(R, 3, 3, seed), b = random_module(R, 3, 3, seed);
    CHECK(a.variable_actions() == b.variable_actions());
    CHECK(a.check_action() == std::nullopt);
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) CHECK(random_module(R, 3, 0, seed).is_free());
}

TEST_CASE("random modules reach shapes outside R^a (+) k^b") {
  AlgebraRef R = plane_ring(2);
  std::size_t fails = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed)
    if (!structure_test(random_module(R, 3, 3, seed)).holds) ++fails;
  CHECK(fails > 0);
}

TEST_CASE("pd certificate share over small rings") {
  SearchConfig cfg;
  CHECK(explore_pd_share({}, cfg).empty());

  AlgebraPresentation line;
  line.field = Field::prime(2);
  line.variables = {"x"};
  line.nilpotency = 2;
  AlgebraPresentation plane = line;
  plane.variables = {"x", "y"};
  auto table = explore_pd_share({line, plane}, cfg, 12, 5);
  REQUIRE(table.size() == 2);
  CHECK(table[0].found == 12);
  CHECK(table[0].fraction == doctest::Approx(1.0));
  // Oracle on the plane: the fraction is the share of R^a (+) k^b shapes in the same sample.
  AlgebraRef P = build_algebra(plane);
  std::size_t shapes = 0;
  for (std::size_t t = 0; t < 12; ++t)
    if (structure_test(random_module(P, 3, 3, 5 + 1000 + t)).holds) ++shapes;
  CHECK(table[1].found == shapes);
}

TEST_CASE("fixture registry") {
  const auto& all = fixtures();
  REQUIRE(all.size() == 10);
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].criterion == i + 1);
  auto one = run_fixtures("negative_controls");
  REQUIRE(one.size() == 1);
  CHECK(one[0].passed);
  CHECK(fixture_to_json(one[0])["checks"].size() == one[0].checks.size());
  CHECK(run_fixtures("no such fixture").empty());
}
