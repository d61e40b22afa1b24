#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "torimax/topology.hpp"

#include <random>

using namespace torimax;
using namespace torimax::testing;

namespace {

LatticePolytope hull(std::vector<LatticePoint> pts) { return LatticePolytope::convex_hull(pts); }

LatticePolytope unit_simplex(int n) {
  std::vector<LatticePoint> pts;
  pts.emplace_back(IntVec(n, 0));
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    pts.emplace_back(std::move(e));
  }
  return hull(pts);
}

LatticePolytope dilated(const LatticePolytope& p, long long t) {
  std::vector<LatticePoint> pts;
  for (const auto& v : p.vertices()) {
    IntVec c = v.coords();
    for (Int& x : c) x *= t;
    pts.emplace_back(std::move(c));
  }
  return hull(pts);
}

LatticePolytope example4_simplex() {
  return hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
}

LatticePolytope unit_cube() {
  return hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
               {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

} // namespace

TEST_CASE("gauss_degree equals normalized volume") {
  CHECK(gauss_degree(unit_simplex(2)) == 1);
  CHECK(gauss_degree(unit_simplex(3)) == 1);
  CHECK(gauss_degree(unit_simplex(4)) == 1);
  CHECK(gauss_degree(example4_simplex()) == 2);
  CHECK(gauss_degree(dilated(unit_simplex(3), 3)) == 27);
  CHECK_THROWS_WITH_AS(gauss_degree(hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})),
                       doctest::Contains("BadDimension"), DomainError);
}

TEST_CASE("gauss_degree is multiplicative under dilation") {
  std::vector<LatticePolytope> bases = {unit_simplex(2), unit_simplex(3), example4_simplex()};
  for (const auto& p : bases) {
    Int base = gauss_degree(p);
    for (long long t = 1; t <= 3; ++t) {
      Int tn = 1;
      for (int i = 0; i < p.ambient_dim(); ++i) tn *= t;
      CHECK(gauss_degree(dilated(p, t)) == tn * base);
    }
  }
}

TEST_CASE("outer_circle_degree") {
  // unit triangle facet of the unit tetrahedron
  CHECK(outer_circle_degree(unit_simplex(3).faces(2)[0]) == 1);
  // triangle with all edges of length 2
  CHECK(outer_circle_degree(dilated(unit_simplex(3), 2).faces(2)[0]) == 4);
  // unit square facet of the cube
  CHECK(outer_circle_degree(unit_cube().faces(2)[0]) == 2);
  CHECK_THROWS_WITH_AS(outer_circle_degree(unit_simplex(3).faces(1)[0]),
                       doctest::Contains("BadDimension"), DomainError);
}

TEST_CASE("outer_circle_degree is at least 1 on random 2-faces") {
  std::mt19937_64 rng(111);
  int checked = 0;
  while (checked < 15) {
    auto p = random_polytope(rng, 3, 5 + static_cast<int>(rng() % 4), 0, 4);
    if (p.dim() < 2) continue;
    ++checked;
    for (const Face& f : p.faces(2)) CHECK(outer_circle_degree(f) >= 1);
  }
}

TEST_CASE("khovanskii_betti3 matches classical surface Betti sums") {
  CHECK(khovanskii_betti3(unit_simplex(3)) == 3);       // plane in CP^3
  CHECK(khovanskii_betti3(dilated(unit_simplex(3), 2)) == 4); // quadric
  CHECK(khovanskii_betti3(dilated(unit_simplex(3), 3)) == 9); // cubic
  CHECK_THROWS_WITH_AS(khovanskii_betti3(unit_simplex(2)), doctest::Contains("BadDimension"),
                       DomainError);
}

TEST_CASE("real_component_budget on the unit tetrahedron") {
  auto b = real_component_budget(unit_simplex(3));
  CHECK(b.volume == 1);
  CHECK(b.betti_complex == 3);
  REQUIRE(b.feasible_pairs.size() == 1);
  CHECK(b.feasible_pairs[0].first == 0);  // k
  CHECK(b.feasible_pairs[0].second == 1); // l: a single RP^2
}

TEST_CASE("real_component_budget on the doubled tetrahedron is empty") {
  auto b = real_component_budget(dilated(unit_simplex(3), 2));
  CHECK(b.volume == 8);
  CHECK(b.betti_complex == 4);
  CHECK(b.feasible_pairs.empty());
}

TEST_CASE("feasible pairs satisfy both constraints and are sorted by l descending") {
  std::mt19937_64 rng(121);
  int checked = 0;
  while (checked < 15) {
    auto p = random_polytope(rng, 3, 4 + static_cast<int>(rng() % 5), 0, 3);
    if (!p.full_dimensional()) continue;
    ++checked;
    auto b = real_component_budget(p);
    Int prev_l = -1;
    bool first = true;
    for (const auto& [k, l] : b.feasible_pairs) {
      CHECK(k >= 0);
      CHECK(l >= 0);
      CHECK(2 * k + l == b.volume);
      CHECK(3 * l + 2 * k <= b.betti_complex);
      CHECK(2 * l + b.volume <= b.betti_complex); // derived inequality
      if (!first) CHECK(l < prev_l);
      prev_l = l;
      first = false;
    }
  }
}
