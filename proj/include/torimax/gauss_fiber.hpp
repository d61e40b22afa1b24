#pragma once

#include "torimax/errors.hpp"
#include "torimax/fiber_kernel.hpp"
#include "torimax/sturm.hpp"

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace torimax {

/// The one-parameter family a z3^2 + z3 + z2 + z1 + 1 = 0, a != 0.
struct FamilyParameter {
  double a;
  explicit FamilyParameter(double value);
};

/// A direction (g1 : g2 : g3), not all zero, stored with the
/// largest-magnitude coordinate scaled to +-1.
struct Direction {
  double g1 = 0, g2 = 0, g3 = 0;
  static Direction make(double g1, double g2, double g3);
};

enum class FiberClass { TotallyReal, NonReal, BoundaryCase };
const char* to_string(FiberClass c);

struct FiberPoint {
  std::complex<double> z1, z2, z3, s;
  int multiplicity = 1;
  bool s_boundary = false; // |s| within tolerance of 0: excluded from the reality decision
};

struct QuadraticCoeffs {
  double A = 0, B = 0, C = 1;
};

/// Solutions of the fiber system over one direction: the defining equation,
/// z1 = s g1, z2 = s g2, 2a z3^2 + z3 = s g3.
struct FiberResult {
  FiberClass classification = FiberClass::BoundaryCase;
  std::vector<FiberPoint> points;
  double residual = 0.0; // max relative residual of the four equations
  QuadraticCoeffs quadratic;
  double discriminant = 0.0;
  std::vector<std::string> notes;
};

/// Coefficients of A z3^2 + B z3 + C = 0 over the g3 = 1 chart:
/// A = a(2 g1 + 2 g2 + 1), B = g1 + g2 + 1, C = 1.
/// Throws gauss_fiber.BoundaryDirection when g3 = 0.
QuadraticCoeffs fiber_quadratic(const FamilyParameter& a, const Direction& d);

/// P(x) = x^2 - 8 a x + 4 a. At x = g1 + g2 + 1 its sign equals the sign of
/// the fiber quadratic's discriminant B^2 - 4AC.
double discriminant_poly(double a, double x);
int discriminant_sign(double a, double x);

/// Full fiber solve with residual check; boundary directions (g3 = 0 or
/// A = 0) are classified, never errors.
FiberResult solve_fiber(const FamilyParameter& a, const Direction& d);

/// solve_fiber over the g3 = 1 chart with exact chart coordinates; the
/// classification agrees bit for bit with classify_direction, which is what
/// the scan kernels compute.
FiberResult solve_fiber_chart(const FamilyParameter& a, double g1, double g2);

struct ScanSummary {
  double a = 0;
  int grid = 0;
  double extent = 0;
  std::string analytic_verdict; // TotallyReal | NotTotallyReal | Boundary
  long long total_samples = 0;
  long long totally_real = 0;
  long long nonreal = 0;
  long long boundary = 0;
  std::vector<std::array<double, 3>> nonreal_witnesses; // first 100 in scan order
  bool consistent = false;   // sampling agrees with the analytic verdict
  double max_residual = 0.0; // over the solve_fiber subsample
  long long residual_checked = 0;
  bool generic_fibers_two_points = true;
};

/// Classifies the fiber over a grid x grid lattice of directions
/// (g1, g2, 1) in [-extent, extent]^2 plus the boundary loci g3 = 0 and
/// 2 g1 + 2 g2 + 1 = 0, and compares against the analytic verdict from the
/// sign of 16a(4a-1). Throws gauss_fiber.GridTooLarge for grid > 10^6.
ScanSummary total_reality_scan(const FamilyParameter& a, int grid, double extent = 10.0);

/// The n = 1 toric-maximality test: after stripping the monomial factor z^k,
/// the polynomial must be squarefree with every root real (exact Sturm count).
/// Throws gauss_fiber.ZeroPolynomial.
struct HarnackCheck {
  bool maximal = false;
  std::string reason;
  int stripped_power = 0;
  int degree = 0;       // degree after stripping
  int real_roots = 0;   // distinct real roots (Sturm)
  bool squarefree = false;
};

HarnackCheck univariate_harnack_check(const std::vector<Rat>& coeffs);

} // namespace torimax
