#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>

namespace torimax {

// Classification codes for fiber reality over one direction (g1, g2, 1).
inline constexpr std::uint8_t kFiberReal = 0;
inline constexpr std::uint8_t kFiberNonReal = 1;
inline constexpr std::uint8_t kFiberBoundary = 2;

inline constexpr double kFiberTol = 1e-9;

/// Quadratic coefficients of the fiber equation over the gamma3 = 1 chart:
/// A z^2 + B z + 1 with A = a(2 g1 + 2 g2 + 1), B = g1 + g2 + 1.
/// The operation order here is the contract: the SIMD kernels replicate it
/// exactly so classifications are bit-identical across backends.
inline void fiber_quadratic_terms(double a, double g1, double g2, double& A, double& B) {
  B = (g1 + g2) + 1.0;
  A = a * (((2.0 * g1) + (2.0 * g2)) + 1.0);
}

/// Reality classification of the fiber over (g1, g2, 1). Solutions with
/// s = 2a z^2 + z below the relative tolerance are toric-boundary artifacts
/// and do not take part in the reality decision.
inline std::uint8_t classify_direction(double a, double g1, double g2) {
  double A, B;
  fiber_quadratic_terms(a, g1, g2, A, B);
  if (A == 0.0) return kFiberBoundary;
  const double disc = B * B - 4.0 * A; // C = 1

  if (disc < 0.0) {
    const double x = -B / (2.0 * A);
    const double y = std::sqrt(-disc) / (2.0 * std::abs(A));
    const double zsq = x * x + y * y;
    const double zmag = std::sqrt(zsq);
    const double sre = 2.0 * a * (x * x - y * y) + x;
    const double sim = y * (4.0 * a * x + 1.0);
    const double smag = std::sqrt(sre * sre + sim * sim);
    const double sscale = std::max(1.0, 2.0 * std::abs(a) * zsq + zmag);
    if (smag <= kFiberTol * sscale) return kFiberBoundary; // conjugate pair flagged together
    const bool real_z = y <= kFiberTol * std::max(1.0, zmag);
    const bool real_s = std::abs(sim) <= kFiberTol * std::max(1.0, smag);
    return (real_z && real_s) ? kFiberReal : kFiberNonReal;
  }

  const double sq = std::sqrt(disc);
  const double qn = -0.5 * (B + std::copysign(sq, B));
  const double r1 = qn / A;
  const double r2 = (qn == 0.0) ? 0.0 : 1.0 / qn;
  int live = 0;
  for (double r : {r1, r2}) {
    const double s = 2.0 * a * (r * r) + r;
    const double sscale = std::max(1.0, 2.0 * std::abs(a) * (r * r) + std::abs(r));
    if (std::abs(s) > kFiberTol * sscale) ++live;
  }
  return live == 0 ? kFiberBoundary : kFiberReal;
}

enum class ScanBackend { Scalar, Avx2 };

const char* to_string(ScanBackend b);

/// Backend selected at runtime: AVX2 when the CPU supports it (and the build
/// carries the kernel), scalar otherwise. TORIMAX_SCAN_BACKEND=scalar|avx2
/// overrides.
ScanBackend active_scan_backend();

void classify_directions_scalar(const double* g1, const double* g2, std::size_t n, double a,
                                std::uint8_t* out);
#if defined(TORIMAX_HAVE_AVX2)
bool cpu_has_avx2();
void classify_directions_avx2(const double* g1, const double* g2, std::size_t n, double a,
                              std::uint8_t* out);
#endif

/// Batch classification through the active backend.
void classify_directions(const double* g1, const double* g2, std::size_t n, double a,
                         std::uint8_t* out);

} // namespace torimax
