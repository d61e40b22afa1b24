#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "torimax/gauss_fiber.hpp"

#include <cmath>
#include <random>

using namespace torimax;
using namespace torimax::testing;

namespace {

bool point_is_real(const FiberPoint& pt) {
  auto ok = [](const std::complex<double>& z) {
    return std::abs(z.imag()) <= kFiberTol * std::max(1.0, std::abs(z));
  };
  return ok(pt.z3) && ok(pt.s) && ok(pt.z1) && ok(pt.z2);
}

} // namespace

TEST_CASE("FamilyParameter and Direction validate their invariants") {
  CHECK_THROWS_WITH_AS(FamilyParameter(0.0), doctest::Contains("BadParameters"), DomainError);
  CHECK_THROWS_WITH_AS(Direction::make(0, 0, 0), doctest::Contains("BadParameters"), DomainError);
  Direction d = Direction::make(2, -4, 1);
  CHECK(d.g1 == 0.5);
  CHECK(d.g2 == -1.0);
  CHECK(d.g3 == 0.25);
}

TEST_CASE("fiber_quadratic examples") {
  auto q = fiber_quadratic(FamilyParameter(0.1), Direction::make(1, 1, 1));
  CHECK(q.A == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(q.B == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(q.C == 1.0);

  q = fiber_quadratic(FamilyParameter(0.5), Direction::make(0.5, 0.5, 1));
  CHECK(q.A == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(q.B == doctest::Approx(2.0).epsilon(1e-14));

  // linear degeneration: 2 g1 + 2 g2 + 1 = 0 exactly
  q = fiber_quadratic(FamilyParameter(0.7), Direction::make(-0.25, -0.25, 1));
  CHECK(q.A == 0.0);

  CHECK_THROWS_WITH_AS(fiber_quadratic(FamilyParameter(0.1), Direction::make(1, 1, 0)),
                       doctest::Contains("BoundaryDirection"), DomainError);
}

TEST_CASE("discriminant polynomial") {
  // 16a(4a-1) < 0 on (0, 1/4): P keeps one sign, and P(0) = 4a > 0
  for (double a : {0.05, 0.1, 0.2, 0.24}) {
    CHECK(16.0 * a * (4.0 * a - 1.0) < 0.0);
    for (double x = -20.0; x <= 20.0; x += 0.5) CHECK(discriminant_sign(a, x) > 0);
  }
  CHECK(discriminant_poly(0.5, 2.0) == doctest::Approx(-2.0));
  CHECK(discriminant_sign(0.5, 2.0) == -1);
  CHECK(discriminant_poly(0.1, 3.0) == doctest::Approx(7.0));
  CHECK(discriminant_sign(0.1, 3.0) == 1);
}

TEST_CASE("discriminant identity B^2 - 4AC = P(g1+g2+1) over random samples") {
  std::mt19937_64 rng(4001);
  std::uniform_real_distribution<double> adist(-2.0, 2.0), gdist(-10.0, 10.0);
  int done = 0;
  while (done < 10000) {
    double a = adist(rng);
    if (a == 0.0) continue;
    double g1 = gdist(rng), g2 = gdist(rng);
    auto q = fiber_quadratic(FamilyParameter(a), Direction::make(g1, g2, 1.0));
    double lhs = q.B * q.B - 4.0 * q.A * q.C;
    double rhs = discriminant_poly(a, g1 + g2 + 1.0);
    double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    CHECK(std::abs(lhs - rhs) <= 1e-9 * scale);
    ++done;
  }
}

TEST_CASE("solve_fiber: totally real example with z3 = -3 +- sqrt(7)") {
  auto res = solve_fiber(FamilyParameter(0.1), Direction::make(1, 1, 1));
  CHECK(res.classification == FiberClass::TotallyReal);
  REQUIRE(res.points.size() == 2);
  const double r = std::sqrt(7.0);
  CHECK(res.points[0].z3.real() == doctest::Approx(-3.0 - r).epsilon(1e-12));
  CHECK(res.points[1].z3.real() == doctest::Approx(-3.0 + r).epsilon(1e-12));
  CHECK(res.residual <= 1e-9);
  for (const auto& pt : res.points) CHECK(point_is_real(pt));
}

TEST_CASE("solve_fiber: nonreal conjugate pair") {
  auto res = solve_fiber(FamilyParameter(0.5), Direction::make(0.5, 0.5, 1));
  CHECK(res.classification == FiberClass::NonReal);
  CHECK(res.discriminant == doctest::Approx(-2.0).epsilon(1e-12));
  REQUIRE(res.points.size() == 2);
  CHECK(res.points[0].z3 == std::conj(res.points[1].z3));
  CHECK(res.residual <= 1e-9);
}

TEST_CASE("solve_fiber: boundary direction g3 = 0 is real") {
  for (double a : {0.1, 0.5, -0.3}) {
    auto res = solve_fiber(FamilyParameter(a), Direction::make(1, 1, 0));
    CHECK(res.classification == FiberClass::BoundaryCase);
    CHECK(res.points.size() == 2);
    for (const auto& pt : res.points) CHECK(point_is_real(pt));
    CHECK(res.residual <= 1e-9);
  }
  // g1 + g2 = 0: no finite solutions
  auto res = solve_fiber(FamilyParameter(0.1), Direction::make(1, -1, 0));
  CHECK(res.classification == FiberClass::BoundaryCase);
  CHECK(res.points.empty());
}

TEST_CASE("solve_fiber: residual and conjugation over random inputs") {
  std::mt19937_64 rng(4101);
  std::uniform_real_distribution<double> adist(-2.0, 2.0), gdist(-10.0, 10.0);
  int done = 0;
  while (done < 2000) {
    double a = adist(rng);
    if (a == 0.0) continue;
    auto res = solve_fiber_chart(FamilyParameter(a), gdist(rng), gdist(rng));
    CHECK(res.residual <= 1e-9);
    // conjugation symmetry of the point set
    for (const auto& pt : res.points) {
      if (std::abs(pt.z3.imag()) == 0.0) continue;
      bool has_conj = false;
      for (const auto& other : res.points)
        if (other.z3 == std::conj(pt.z3)) has_conj = true;
      CHECK(has_conj);
    }
    // degree consistency: generic fibers carry exactly two points
    if (res.quadratic.A != 0.0 && res.discriminant != 0.0) CHECK(res.points.size() == 2);
    ++done;
  }
}

TEST_CASE("solve_fiber classification matches the kernel classifier") {
  std::mt19937_64 rng(4201);
  std::uniform_real_distribution<double> adist(-2.0, 2.0), gdist(-10.0, 10.0);
  int done = 0;
  while (done < 20000) {
    double a = adist(rng);
    if (a == 0.0) continue;
    double g1 = gdist(rng), g2 = gdist(rng);
    auto res = solve_fiber_chart(FamilyParameter(a), g1, g2);
    CHECK(static_cast<std::uint8_t>(res.classification) == classify_direction(a, g1, g2));
    // classification agrees with the reality of the unflagged points
    bool all_real = true;
    int live = 0;
    for (const auto& pt : res.points) {
      if (pt.s_boundary) continue;
      ++live;
      if (!point_is_real(pt)) all_real = false;
    }
    if (res.classification == FiberClass::TotallyReal) {
      CHECK(live > 0);
      CHECK(all_real);
    }
    if (res.classification == FiberClass::NonReal) CHECK_FALSE(all_real);
    ++done;
  }
}

#if defined(TORIMAX_HAVE_AVX2)
TEST_CASE("scalar and AVX2 kernels classify identically") {
  if (!cpu_has_avx2()) {
    MESSAGE("AVX2 not available on this CPU; skipping");
    return;
  }
  std::mt19937_64 rng(4301);
  std::uniform_real_distribution<double> adist(-2.0, 2.0), gdist(-10.0, 10.0);
  for (int iter = 0; iter < 50; ++iter) {
    double a = adist(rng);
    if (a == 0.0) continue;
    std::size_t n = 1 + rng() % 1029; // deliberately not a multiple of 4
    std::vector<double> g1(n), g2(n);
    for (std::size_t i = 0; i < n; ++i) {
      g1[i] = gdist(rng);
      g2[i] = gdist(rng);
    }
    // sprinkle exact boundary/degenerate inputs
    if (n > 4) {
      g1[0] = -0.25;
      g2[0] = -0.25;
      g1[1] = 0.75;
      g2[1] = -1.25;
    }
    std::vector<std::uint8_t> scalar(n, 255), avx2(n, 255);
    classify_directions_scalar(g1.data(), g2.data(), n, a, scalar.data());
    classify_directions_avx2(g1.data(), g2.data(), n, a, avx2.data());
    CHECK(scalar == avx2);
  }
}

TEST_CASE("AVX2 kernel agrees on near-boundary fibers around a = 1/4") {
  if (!cpu_has_avx2()) return;
  // near a = 1/4 one root has s ~ 0 and the classification takes the
  // boundary-artifact path; both backends must agree bit for bit
  std::vector<double> g1, g2;
  for (double t = -10.0; t <= 10.0; t += 0.125) {
    g1.push_back(t);
    g2.push_back(3.0 - t);
  }
  for (double a : {0.25, 0.25 + 1e-12, 0.25 - 1e-12, 0.2500001}) {
    std::vector<std::uint8_t> s(g1.size()), v(g1.size());
    classify_directions_scalar(g1.data(), g2.data(), g1.size(), a, s.data());
    classify_directions_avx2(g1.data(), g2.data(), g1.size(), a, v.data());
    CHECK(s == v);
  }
}
#endif

TEST_CASE("total_reality_scan: totally real parameters") {
  for (double a : {0.05, 0.1, 0.2, 0.24}) {
    auto sum = total_reality_scan(FamilyParameter(a), 100, 10.0);
    CHECK(sum.analytic_verdict == "TotallyReal");
    CHECK(sum.nonreal == 0);
    CHECK(sum.consistent);
    CHECK(sum.max_residual <= 1e-9);
    CHECK(sum.generic_fibers_two_points);
    CHECK(sum.nonreal_witnesses.empty());
  }
}

TEST_CASE("total_reality_scan: parameters with nonreal fibers") {
  for (double a : {0.3, 0.5, 1.0, -0.1}) {
    auto sum = total_reality_scan(FamilyParameter(a), 100, 10.0);
    CHECK(sum.analytic_verdict == "NotTotallyReal");
    CHECK(sum.nonreal >= 1);
    CHECK(sum.consistent);
    CHECK(sum.max_residual <= 1e-9);
    CHECK_FALSE(sum.nonreal_witnesses.empty());
    // witnesses really are nonreal
    for (std::size_t i = 0; i < std::min<std::size_t>(5, sum.nonreal_witnesses.size()); ++i) {
      const auto& w = sum.nonreal_witnesses[i];
      auto res = solve_fiber_chart(FamilyParameter(a), w[0], w[1]);
      CHECK(res.classification == FiberClass::NonReal);
    }
  }
}

TEST_CASE("total_reality_scan: boundary parameter a = 1/4") {
  auto sum = total_reality_scan(FamilyParameter(0.25), 60, 10.0);
  CHECK(sum.analytic_verdict == "Boundary");
  CHECK(sum.nonreal == 0);
  CHECK(sum.consistent);
}

TEST_CASE("total_reality_scan: random parameter sweeps") {
  std::mt19937_64 rng(4401);
  std::uniform_real_distribution<double> inside(1e-6, 0.25 - 1e-6);
  for (int i = 0; i < 50; ++i) {
    auto sum = total_reality_scan(FamilyParameter(inside(rng)), 100, 10.0);
    CHECK(sum.nonreal == 0);
    CHECK(sum.consistent);
  }
  std::uniform_real_distribution<double> pick(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    double u = pick(rng);
    double a = u < 0.5 ? 0.25 + 1e-3 + (1.0 - 0.25 - 1e-3) * pick(rng) // (1/4, 1]
                       : -1.0 + (1.0 - 1e-3) * pick(rng);              // [-1, 0)
    if (a == 0.0) a = -0.5;
    auto sum = total_reality_scan(FamilyParameter(a), 100, 10.0);
    CHECK(sum.nonreal >= 1);
    CHECK(sum.consistent);
  }
}

TEST_CASE("total_reality_scan guards") {
  CHECK_THROWS_WITH_AS(total_reality_scan(FamilyParameter(0.1), 2000000),
                       doctest::Contains("GridTooLarge"), DomainError);
  CHECK_THROWS_WITH_AS(total_reality_scan(FamilyParameter(0.1), 0),
                       doctest::Contains("GridTooLarge"), DomainError);
}

TEST_CASE("univariate_harnack_check examples") {
  auto hc = univariate_harnack_check({-1, 0, 1}); // z^2 - 1
  CHECK(hc.maximal);
  CHECK(hc.real_roots == 2);
  CHECK(hc.squarefree);

  hc = univariate_harnack_check({1, 0, 1}); // z^2 + 1
  CHECK_FALSE(hc.maximal);
  CHECK(hc.real_roots == 0);

  hc = univariate_harnack_check({1, -2, 1}); // (z-1)^2
  CHECK_FALSE(hc.maximal);
  CHECK_FALSE(hc.squarefree);
  CHECK(hc.reason.find("repeated") != std::string::npos);

  hc = univariate_harnack_check({0, -1, 0, 1}); // z^3 - z = z(z^2 - 1)
  CHECK(hc.maximal);
  CHECK(hc.stripped_power == 1);
  CHECK(hc.degree == 2);
  CHECK(hc.real_roots == 2);

  hc = univariate_harnack_check({Rat(1, 2), Rat(-3, 2), 1}); // (z-1)(z-1/2)
  CHECK(hc.maximal);

  CHECK_THROWS_WITH_AS(univariate_harnack_check({0, 0, 0}), doctest::Contains("ZeroPolynomial"),
                       DomainError);
}

TEST_CASE("sturm count on fixed polynomials") {
  CHECK(sturm_real_root_count({-1, 0, 1}) == 2);
  CHECK(sturm_real_root_count({1, 0, 1}) == 0);
  CHECK(sturm_real_root_count({1, -2, 1}) == 1); // (z-1)^2: one distinct root
  // (z-1)(z-2)(z-3): roots 1,2,3
  CHECK(sturm_real_root_count({-6, 11, -6, 1}) == 3);
  CHECK(sturm_real_root_count_interval({-6, 11, -6, 1}, Rat(0), Rat(2)) == 2);
  CHECK(sturm_real_root_count_interval({-6, 11, -6, 1}, Rat(2), Rat(10)) == 1);
  // z^4 + 1: none
  CHECK(sturm_real_root_count({1, 0, 0, 0, 1}) == 0);
}

TEST_CASE("sturm count equals the bisection isolator on random polynomials") {
  std::mt19937_64 rng(4501);
  std::uniform_int_distribution<int> cdist(-9, 9), ddist(1, 8), den(1, 4);
  for (int iter = 0; iter < 400; ++iter) {
    int deg = ddist(rng);
    RatPoly p(deg + 1);
    for (int i = 0; i <= deg; ++i) p[i] = Rat(cdist(rng), den(rng));
    if (p.back() == 0) p.back() = 1;
    CHECK(sturm_real_root_count(p) == bisection_real_root_count(p));
  }
  // products of linear factors: all roots real
  std::uniform_int_distribution<int> root(-4, 4);
  for (int iter = 0; iter < 100; ++iter) {
    RatPoly p{1};
    std::set<int> used;
    int k = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) used.insert(root(rng));
    for (int r : used) {
      RatPoly next(p.size() + 1, Rat(0));
      for (std::size_t j = 0; j < p.size(); ++j) {
        next[j + 1] += p[j];
        next[j] -= p[j] * r;
      }
      p = std::move(next);
    }
    CHECK(sturm_real_root_count(p) == static_cast<int>(used.size()));
    CHECK(bisection_real_root_count(p) == static_cast<int>(used.size()));
  }
}
