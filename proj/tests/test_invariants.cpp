#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "torimax/invariants.hpp"

#include <numeric>
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

LatticePolytope family_simplex(long long p, long long q) {
  return hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, p, q}});
}

Face segment_face(std::vector<LatticePoint> pts) {
  return hull(pts).faces(1)[0];
}

// Independent volume route for simplices: chart determinant through the
// saturated affine basis, solving for coordinates with rational elimination.
Int chart_det_volume(const LatticePolytope& p) {
  REQUIRE(p.is_simplex());
  const int d = p.dim();
  auto basis = saturated_affine_basis(p.vertices(), p.ambient_dim());
  const int n = p.ambient_dim();
  IntMat bcols(n, IntVec(d));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) bcols[i][j] = basis[j][i];
  IntMat m(d, IntVec(d));
  for (int r = 1; r <= d; ++r) {
    auto sol = solve_full_rank(bcols, vec_sub(p.vertices()[r].coords(), p.vertices()[0].coords()));
    REQUIRE(sol.has_value());
    for (int j = 0; j < d; ++j) {
      REQUIRE(denominator((*sol)[j]) == 1);
      m[r - 1][j] = numerator((*sol)[j]);
    }
  }
  return abs(determinant(m));
}

} // namespace

TEST_CASE("lattice_length examples") {
  CHECK(lattice_length(segment_face({{0, 0, 0}, {0, 0, 2}})) == 2);
  CHECK(lattice_length(segment_face({{1, 0, 0}, {0, 0, 2}})) == 1);
  CHECK(lattice_length(segment_face({{0, 0}, {1, 0}})) == 1);
  Face not_edge = unit_simplex(2).faces(2)[0];
  CHECK_THROWS_WITH_AS(lattice_length(not_edge), doctest::Contains("BadDimension"), DomainError);
}

TEST_CASE("normalized_volume examples") {
  CHECK(normalized_volume(unit_simplex(2)) == 1);
  CHECK(normalized_volume(unit_simplex(3)) == 1);
  CHECK(normalized_volume(unit_simplex(4)) == 1);
  CHECK(normalized_volume(example4_simplex()) == 2);
  // family (1,p,q): volume q
  for (auto [p, q] : std::vector<std::pair<long long, long long>>{
           {0, 1}, {1, 2}, {2, 3}, {3, 5}, {5, 7}, {7, 12}})
    CHECK(normalized_volume(family_simplex(p, q)) == q);
  // slanted facet has area 1 in its saturated lattice
  CHECK(normalized_volume(hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})) == 1);
  CHECK_THROWS_WITH_AS(normalized_volume(hull({{3, 3}})), doctest::Contains("DegenerateFace"),
                       DomainError);
}

TEST_CASE("normalized_volume of simplices: minor-gcd route equals chart determinant route") {
  std::mt19937_64 rng(51);
  int checked = 0;
  while (checked < 80) {
    int n = 2 + static_cast<int>(rng() % 4); // ambient 2..5
    int k = 1 + static_cast<int>(rng() % n);
    int bound = 4 + static_cast<int>(rng() % 3);
    std::vector<LatticePoint> pts;
    for (int i = 0; i <= k; ++i) pts.push_back(random_point(rng, n, -bound, bound));
    auto p = hull(pts);
    if (!p.is_simplex() || p.dim() < 1) continue;
    ++checked;
    CHECK(normalized_volume(p) == chart_det_volume(p));
  }
}

TEST_CASE("volume is additive over known decompositions") {
  // unit square = two unit triangles
  CHECK(normalized_volume(hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}})) == 2);
  // unit cube = six unimodular tetrahedra
  CHECK(normalized_volume(hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})) == 6);
  // triangular prism
  CHECK(normalized_volume(hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0},
                                {0, 0, 1}, {1, 0, 1}, {0, 1, 1}})) == 3);
}

TEST_CASE("volume agrees with Ehrhart point-counting oracle") {
  CHECK(ehrhart_volume(unit_simplex(3)) == 1);
  CHECK(ehrhart_volume(example4_simplex()) == 2);
  CHECK(ehrhart_volume(dilated(unit_simplex(3), 2)) == 8);
  std::mt19937_64 rng(61);
  int checked = 0;
  while (checked < 25) {
    int n = 1 + static_cast<int>(rng() % 3);
    auto p = random_polytope(rng, n, 3 + static_cast<int>(rng() % 5), 0, 4);
    if (!p.full_dimensional()) continue;
    ++checked;
    CHECK(ehrhart_volume(p) == normalized_volume(p));
  }
}

TEST_CASE("volume and smoothness are invariant under unimodular affine maps") {
  std::mt19937_64 rng(71);
  std::vector<LatticePolytope> bases = {unit_simplex(3), example4_simplex(),
                                        family_simplex(1, 2),
                                        hull({{0, 0}, {3, 0}, {0, 2}, {2, 2}})};
  std::uniform_int_distribution<int> tdist(-3, 3);
  int maps = 0;
  while (maps < 100) {
    const auto& base = bases[maps % bases.size()];
    int n = base.ambient_dim();
    IntMat u = random_unimodular(rng, n);
    IntVec t(n);
    for (auto& x : t) x = tdist(rng);
    auto img = apply_affine(base, u, t);
    CHECK(normalized_volume(img) == normalized_volume(base));
    if (base.full_dimensional() && n >= 2)
      CHECK(is_smooth_dim1(img).smooth == is_smooth_dim1(base).smooth);
    ++maps;
  }
}

TEST_CASE("lattice_length is the lattice point count minus one") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 2 + static_cast<int>(rng() % 3);
    auto u = random_point(rng, n, -4, 4);
    auto v = random_point(rng, n, -4, 4);
    if (u == v) continue;
    // independent count: integer points collinear with and between the endpoints
    long long count = 0;
    std::vector<long long> lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
      long long a = u.coords()[j].convert_to<long long>();
      long long b = v.coords()[j].convert_to<long long>();
      lo[j] = std::min(a, b);
      hi[j] = std::max(a, b);
    }
    std::vector<long long> x(n);
    std::function<void(int)> rec = [&](int axis) {
      if (axis == n) {
        // x on segment [u,v]: (x - u) parallel to (v - u) and within the box
        IntVec d1(n), d2(n);
        for (int j = 0; j < n; ++j) {
          d1[j] = Int(x[j]) - u.coords()[j];
          d2[j] = v.coords()[j] - u.coords()[j];
        }
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            if (d1[i] * d2[j] != d1[j] * d2[i]) return;
        ++count;
        return;
      }
      for (long long t = lo[axis]; t <= hi[axis]; ++t) {
        x[axis] = t;
        rec(axis + 1);
      }
    };
    rec(0);
    Face e = hull({u, v}).faces(1)[0];
    CHECK(lattice_length(e) == count - 1);
  }
}

TEST_CASE("lattice_length equals one-dimensional volume") {
  std::mt19937_64 rng(81);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 2 + static_cast<int>(rng() % 3);
    auto p = random_polytope(rng, n, 4 + static_cast<int>(rng() % 4), 0, 4);
    if (p.dim() < 1) continue;
    for (const Face& e : p.faces(1)) CHECK(lattice_length(e) == normalized_volume(e));
  }
}

TEST_CASE("is_unimodular") {
  CHECK(is_unimodular(unit_simplex(2)));
  CHECK(is_unimodular(unit_simplex(3)));
  CHECK_FALSE(is_unimodular(hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}))); // square: not a simplex
  CHECK_FALSE(is_unimodular(hull({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}}))); // area 2
  CHECK_FALSE(is_unimodular(example4_simplex()));
}

TEST_CASE("is_smooth_dim1 on the unit simplex") {
  auto res = is_smooth_dim1(unit_simplex(3));
  CHECK(res.smooth);
  CHECK_FALSE(res.witness_edge.has_value());
  CHECK(is_smooth_dim1(unit_simplex(4)).smooth);
}

TEST_CASE("is_smooth_dim1 on the singular simplex") {
  auto p = example4_simplex();
  auto res = is_smooth_dim1(p);
  REQUIRE_FALSE(res.smooth);
  REQUIRE(res.witness_edge.has_value());
  // unique failing edge: [(0,1,0),(1,0,0)]
  REQUIRE(res.witness_edge->vertices.size() == 2);
  CHECK(res.witness_edge->vertices[0] == LatticePoint{0, 1, 0});
  CHECK(res.witness_edge->vertices[1] == LatticePoint{1, 0, 0});
}

TEST_CASE("is_smooth_dim1 on the unimodular-facet family") {
  for (auto [p, q] : std::vector<std::pair<long long, long long>>{{0, 1}, {1, 1}, {1, 2}, {3, 5}}) {
    auto s = family_simplex(p, q);
    CHECK(is_smooth_dim1(s).smooth == (q == 1));
    // the edge joining (1,0,0) and (0,1,0) is smooth exactly when q = 1
    for (const Face& e : s.faces(1)) {
      if (e.vertices[0] == LatticePoint{0, 1, 0} && e.vertices[1] == LatticePoint{1, 0, 0})
        CHECK(smooth_at_edge(s, e) == (q == 1));
    }
  }
}

TEST_CASE("is_smooth_dim1 requires a full-dimensional polytope") {
  CHECK_THROWS_WITH_AS(is_smooth_dim1(hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})),
                       doctest::Contains("BadDimension"), DomainError);
}

TEST_CASE("smoothness is invariant under unimodular affine maps") {
  std::mt19937_64 rng(91);
  auto base = family_simplex(1, 2);
  for (int iter = 0; iter < 30; ++iter) {
    auto img = apply_affine(base, random_unimodular(rng, 3), {0, 1, -1});
    CHECK_FALSE(is_smooth_dim1(img).smooth);
  }
}

TEST_CASE("invariant_report on the unit tetrahedron") {
  auto rep = invariant_report(unit_simplex(3));
  CHECK(rep.volume == 1);
  CHECK(rep.unimodular);
  CHECK(rep.smooth_dim1);
  CHECK(rep.facet_areas.size() == 4);
  for (const auto& [k, v] : rep.facet_areas) CHECK(v == 1);
  CHECK(rep.edge_lengths.size() == 6);
  for (const auto& [k, v] : rep.edge_lengths) CHECK(v == 1);
  for (const auto& [k, v] : rep.perimeters) CHECK(v == 3);
}

TEST_CASE("invariant_report on the doubled tetrahedron") {
  auto rep = invariant_report(dilated(unit_simplex(3), 2));
  CHECK(rep.volume == 8);
  for (const auto& [k, v] : rep.facet_areas) CHECK(v == 4);
  for (const auto& [k, v] : rep.edge_lengths) CHECK(v == 2);
  CHECK_FALSE(rep.unimodular);
}

TEST_CASE("invariant_report on the singular simplex") {
  auto rep = invariant_report(example4_simplex());
  CHECK(rep.volume == 2);
  CHECK_FALSE(rep.smooth_dim1);
  std::multiset<Int> areas, lengths;
  for (const auto& [k, v] : rep.facet_areas) areas.insert(v);
  for (const auto& [k, v] : rep.edge_lengths) lengths.insert(v);
  CHECK(areas == std::multiset<Int>{1, 1, 2, 2});
  CHECK(lengths == std::multiset<Int>{1, 1, 1, 1, 1, 2});
  // perimeter consistency: each facet perimeter is the sum of its edge lengths
  Int perim_total = 0;
  for (const auto& [k, v] : rep.perimeters) perim_total += v;
  Int len_total = 0;
  for (const auto& [k, v] : rep.edge_lengths) len_total += v;
  CHECK(perim_total == 2 * len_total); // each edge lies in exactly two facets
}

TEST_CASE("invariant_report requires full dimension") {
  CHECK_THROWS_WITH_AS(invariant_report(hull({{0, 0, 0}, {1, 0, 0}})),
                       doctest::Contains("BadDimension"), DomainError);
}

TEST_CASE("perimeters are the sums of the facet's edge lengths") {
  std::mt19937_64 rng(131);
  int checked = 0;
  while (checked < 12) {
    int n = 2 + static_cast<int>(rng() % 2);
    auto p = random_polytope(rng, n, 4 + static_cast<int>(rng() % 5), 0, 4);
    if (!p.full_dimensional()) continue;
    ++checked;
    auto rep = invariant_report(p);
    for (const Face& f : p.faces(n - 1)) {
      Int expect = 0;
      for (const Face& e : p.faces(1)) {
        if (std::includes(f.vertex_indices.begin(), f.vertex_indices.end(),
                          e.vertex_indices.begin(), e.vertex_indices.end()))
          expect += lattice_length(e);
      }
      CHECK(rep.perimeters.at(f.vertex_indices) == expect);
    }
  }
}
