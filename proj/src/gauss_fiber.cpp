#include "torimax/gauss_fiber.hpp"

#include <algorithm>
#include <cmath>

namespace torimax {

namespace {

[[noreturn]] void fail(const std::string& name, const std::string& msg) {
  throw DomainError(std::string("gauss_fiber.") + name, msg);
}

double cplx_mag(const std::complex<double>& z) {
  return std::sqrt(z.real() * z.real() + z.imag() * z.imag());
}

// Fill one fiber point from a z3 root; pure back-substitution.
FiberPoint make_point(double a, double gc1, double gc2, std::complex<double> z3,
                      int multiplicity) {
  FiberPoint pt;
  pt.z3 = z3;
  pt.s = 2.0 * a * (z3 * z3) + z3;
  pt.z1 = pt.s * gc1;
  pt.z2 = pt.s * gc2;
  pt.multiplicity = multiplicity;
  const double zsq = z3.real() * z3.real() + z3.imag() * z3.imag();
  const double zmag = std::sqrt(zsq);
  const double sscale = std::max(1.0, 2.0 * std::abs(a) * zsq + zmag);
  pt.s_boundary = cplx_mag(pt.s) <= kFiberTol * sscale;
  return pt;
}

// Max relative residual of the four system equations at one point, with g3
// the chart value (1 for interior directions, 0 on the boundary locus).
double point_residual(double a, double gc1, double gc2, double g3, const FiberPoint& pt) {
  using C = std::complex<double>;
  const C z1 = pt.z1, z2 = pt.z2, z3 = pt.z3, s = pt.s;
  const C eq1 = a * (z3 * z3) + z3 + z2 + z1 + 1.0;
  const double sc1 =
      std::abs(a) * cplx_mag(z3 * z3) + cplx_mag(z3) + cplx_mag(z2) + cplx_mag(z1) + 1.0;
  const C eq2 = z1 - s * gc1;
  const double sc2 = cplx_mag(z1) + cplx_mag(s * gc1);
  const C eq3 = z2 - s * gc2;
  const double sc3 = cplx_mag(z2) + cplx_mag(s * gc2);
  const C eq4 = 2.0 * a * (z3 * z3) + z3 - s * g3;
  const double sc4 = 2.0 * std::abs(a) * cplx_mag(z3 * z3) + cplx_mag(z3) + cplx_mag(s * g3);
  double r = 0.0;
  r = std::max(r, cplx_mag(eq1) / std::max(1.0, sc1));
  r = std::max(r, cplx_mag(eq2) / std::max(1.0, sc2));
  r = std::max(r, cplx_mag(eq3) / std::max(1.0, sc3));
  r = std::max(r, cplx_mag(eq4) / std::max(1.0, sc4));
  return r;
}

} // namespace

FiberResult solve_fiber_chart(const FamilyParameter& fam, double gc1, double gc2) {
  static_assert(static_cast<int>(FiberClass::TotallyReal) == kFiberReal);
  static_assert(static_cast<int>(FiberClass::NonReal) == kFiberNonReal);
  static_assert(static_cast<int>(FiberClass::BoundaryCase) == kFiberBoundary);
  const double a = fam.a;
  FiberResult res;
  double A, B;
  fiber_quadratic_terms(a, gc1, gc2, A, B);
  res.quadratic = {A, B, 1.0};
  res.discriminant = B * B - 4.0 * A;
  res.classification = static_cast<FiberClass>(classify_direction(a, gc1, gc2));
  if (A == 0.0) {
    res.notes.push_back("degenerate quadratic (2 g1 + 2 g2 + 1 = 0); fiber is real on this locus");
    if (B != 0.0) {
      res.points.push_back(make_point(a, gc1, gc2, {-1.0 / B, 0.0}, 1));
    } else {
      res.notes.push_back("no finite solution (A = B = 0)");
    }
  } else if (res.discriminant >= 0.0) {
    if (res.discriminant == 0.0) {
      res.points.push_back(make_point(a, gc1, gc2, {-B / (2.0 * A), 0.0}, 2));
      res.notes.push_back("double root: discriminant is exactly zero");
    } else {
      const double sq = std::sqrt(res.discriminant);
      const double qn = -0.5 * (B + std::copysign(sq, B));
      double r1 = qn / A;
      double r2 = 1.0 / qn; // C = 1
      if (r2 < r1) std::swap(r1, r2);
      res.points.push_back(make_point(a, gc1, gc2, {r1, 0.0}, 1));
      res.points.push_back(make_point(a, gc1, gc2, {r2, 0.0}, 1));
    }
  } else {
    const double x = -B / (2.0 * A);
    const double y = std::sqrt(-res.discriminant) / (2.0 * std::abs(A));
    res.points.push_back(make_point(a, gc1, gc2, {x, y}, 1));
    res.points.push_back(make_point(a, gc1, gc2, {x, -y}, 1));
  }

  for (const FiberPoint& pt : res.points)
    res.residual = std::max(res.residual, point_residual(a, gc1, gc2, 1.0, pt));
  if (std::any_of(res.points.begin(), res.points.end(),
                  [](const FiberPoint& p) { return p.s_boundary; }))
    res.notes.push_back("solution with s ~ 0 excluded from the reality classification");
  return res;
}

FamilyParameter::FamilyParameter(double value) : a(value) {
  if (value == 0.0 || !std::isfinite(value))
    fail("BadParameters", "family parameter a must be nonzero and finite");
}

Direction Direction::make(double g1, double g2, double g3) {
  if (!std::isfinite(g1) || !std::isfinite(g2) || !std::isfinite(g3))
    fail("BadParameters", "direction coordinates must be finite");
  double m = std::max({std::abs(g1), std::abs(g2), std::abs(g3)});
  if (m == 0.0) fail("BadParameters", "direction must be nonzero");
  Direction d;
  d.g1 = g1 / m;
  d.g2 = g2 / m;
  d.g3 = g3 / m;
  return d;
}

const char* to_string(FiberClass c) {
  switch (c) {
    case FiberClass::TotallyReal: return "TotallyReal";
    case FiberClass::NonReal: return "NonReal";
    case FiberClass::BoundaryCase: return "BoundaryCase";
  }
  return "?";
}

QuadraticCoeffs fiber_quadratic(const FamilyParameter& a, const Direction& d) {
  if (d.g3 == 0.0)
    fail("BoundaryDirection", "fiber_quadratic requires g3 != 0; use the boundary branch");
  QuadraticCoeffs q;
  fiber_quadratic_terms(a.a, d.g1 / d.g3, d.g2 / d.g3, q.A, q.B);
  q.C = 1.0;
  return q;
}

double discriminant_poly(double a, double x) { return x * x - 8.0 * a * x + 4.0 * a; }

int discriminant_sign(double a, double x) {
  double v = discriminant_poly(a, x);
  return v > 0.0 ? 1 : v < 0.0 ? -1 : 0;
}

FiberResult solve_fiber(const FamilyParameter& fam, const Direction& d) {
  if (d.g3 != 0.0) return solve_fiber_chart(fam, d.g1 / d.g3, d.g2 / d.g3);

  // Boundary locus g3 = 0: z3 solves 2a z3^2 + z3 = 0, and the defining
  // equation fixes s. The fiber is real here.
  FiberResult res;
  res.classification = FiberClass::BoundaryCase;
  res.quadratic = {0.0, 0.0, 1.0};
  res.discriminant = 0.0;
  res.notes.push_back("boundary locus g3 = 0: fiber lies in the real part");
  const double a = fam.a;
  const double gsum = d.g1 + d.g2;
  if (gsum != 0.0) {
    for (double z3 : {0.0, -1.0 / (2.0 * a)}) {
      const double t = a * z3 * z3 + z3;
      const double s = -(t + 1.0) / gsum;
      FiberPoint pt;
      pt.z3 = z3;
      pt.s = s;
      pt.z1 = s * d.g1;
      pt.z2 = s * d.g2;
      const double zsq = z3 * z3;
      const double sscale = std::max(1.0, 2.0 * std::abs(a) * zsq + std::abs(z3));
      pt.s_boundary = std::abs(s) <= kFiberTol * sscale;
      res.points.push_back(pt);
      res.residual = std::max(res.residual, point_residual(a, d.g1, d.g2, 0.0, pt));
    }
  } else {
    res.notes.push_back("g1 + g2 = 0: no finite solutions on this direction");
  }
  return res;
}

ScanSummary total_reality_scan(const FamilyParameter& fam, int grid, double extent) {
  if (grid < 1 || grid > 1000000) fail("GridTooLarge", "grid must be between 1 and 10^6");
  if (!(extent > 0.0)) fail("BadParameters", "extent must be positive");

  ScanSummary sum;
  sum.a = fam.a;
  sum.grid = grid;
  sum.extent = extent;
  const double d16 = 16.0 * fam.a * (4.0 * fam.a - 1.0);
  sum.analytic_verdict = d16 < 0.0 ? "TotallyReal" : d16 > 0.0 ? "NotTotallyReal" : "Boundary";

  std::vector<double> ticks(grid);
  const double step = grid > 1 ? 2.0 * extent / (grid - 1) : 0.0;
  for (int i = 0; i < grid; ++i) ticks[i] = -extent + i * step;

  auto count_code = [&](std::uint8_t code) {
    ++sum.total_samples;
    if (code == kFiberReal)
      ++sum.totally_real;
    else if (code == kFiberNonReal)
      ++sum.nonreal;
    else
      ++sum.boundary;
  };
  auto check_fiber = [&](const FiberResult& fr) {
    sum.max_residual = std::max(sum.max_residual, fr.residual);
    ++sum.residual_checked;
    const bool generic = fr.quadratic.A != 0.0 && fr.discriminant != 0.0 &&
                         std::none_of(fr.points.begin(), fr.points.end(),
                                      [](const FiberPoint& p) { return p.s_boundary; });
    if (generic && fr.points.size() != 2) sum.generic_fibers_two_points = false;
  };

  // Main grid over the g3 = 1 chart, classified row by row through the
  // runtime-selected kernel; solve_fiber spot checks on a deterministic
  // stride and on every NonReal witness.
  const long long total_grid = static_cast<long long>(grid) * grid;
  const long long stride = std::max<long long>(1, total_grid / 1024);
  std::vector<double> row_g1(grid), row_g2(grid);
  std::vector<std::uint8_t> codes(grid);
  long long flat = 0;
  for (int i = 0; i < grid; ++i) {
    std::fill(row_g1.begin(), row_g1.end(), ticks[i]);
    std::copy(ticks.begin(), ticks.end(), row_g2.begin());
    classify_directions(row_g1.data(), row_g2.data(), grid, fam.a, codes.data());
    for (int j = 0; j < grid; ++j, ++flat) {
      count_code(codes[j]);
      const bool witness = codes[j] == kFiberNonReal;
      if (witness && sum.nonreal_witnesses.size() < 100)
        sum.nonreal_witnesses.push_back({ticks[i], ticks[j], 1.0});
      if (witness || flat % stride == 0) check_fiber(solve_fiber_chart(fam, ticks[i], ticks[j]));
    }
  }

  // Boundary locus g3 = 0.
  for (int i = 0; i < grid; ++i) {
    FiberResult fr = solve_fiber(fam, Direction::make(ticks[i], 1.0, 0.0));
    count_code(static_cast<std::uint8_t>(fr.classification));
    check_fiber(fr);
  }
  for (const Direction& d : {Direction::make(1, 0, 0), Direction::make(1, -1, 0)}) {
    FiberResult fr = solve_fiber(fam, d);
    count_code(static_cast<std::uint8_t>(fr.classification));
    check_fiber(fr);
  }

  // Boundary locus 2 g1 + 2 g2 + 1 = 0 (sampled, plus two exact-zero hits).
  for (int i = 0; i < grid; ++i) {
    const double g1 = ticks[i];
    const double g2 = -0.5 - g1;
    FiberResult fr = solve_fiber_chart(fam, g1, g2);
    count_code(static_cast<std::uint8_t>(fr.classification));
    check_fiber(fr);
  }
  for (auto [g1, g2] : {std::pair{-0.25, -0.25}, std::pair{0.75, -1.25}}) {
    FiberResult fr = solve_fiber_chart(fam, g1, g2);
    count_code(static_cast<std::uint8_t>(fr.classification));
    check_fiber(fr);
  }

  if (sum.analytic_verdict == "NotTotallyReal")
    sum.consistent = sum.nonreal >= 1;
  else
    sum.consistent = sum.nonreal == 0;
  return sum;
}

HarnackCheck univariate_harnack_check(const std::vector<Rat>& coeffs) {
  RatPoly p = poly_normalize(coeffs);
  if (p.empty()) fail("ZeroPolynomial", "all coefficients are zero");

  HarnackCheck hc;
  std::size_t k = 0;
  while (p[k] == 0) ++k;
  hc.stripped_power = static_cast<int>(k);
  RatPoly q(p.begin() + static_cast<long>(k), p.end());
  hc.degree = poly_degree(q);
  hc.squarefree = poly_squarefree(q);

  if (hc.degree == 0) {
    hc.maximal = true;
    hc.real_roots = 0;
    hc.reason = "monomial: no roots in C*, vacuously maximal";
    return hc;
  }
  hc.real_roots = sturm_real_root_count(q);
  if (!hc.squarefree) {
    hc.maximal = false;
    hc.reason = "repeated root: gcd(Q, Q') is nonconstant";
  } else if (hc.real_roots != hc.degree) {
    hc.maximal = false;
    hc.reason = "only " + std::to_string(hc.real_roots) + " of " + std::to_string(hc.degree) +
                " roots are real";
  } else {
    hc.maximal = true;
    hc.reason = "all roots in C* are simple and real";
  }
  return hc;
}

} // namespace torimax
