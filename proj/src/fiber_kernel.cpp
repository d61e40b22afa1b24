#include "torimax/fiber_kernel.hpp"

#include <cstdlib>
#include <cstring>

namespace torimax {

const char* to_string(ScanBackend b) {
  switch (b) {
    case ScanBackend::Scalar: return "scalar";
    case ScanBackend::Avx2: return "avx2";
  }
  return "?";
}

void classify_directions_scalar(const double* g1, const double* g2, std::size_t n, double a,
                                std::uint8_t* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = classify_direction(a, g1[i], g2[i]);
}

ScanBackend active_scan_backend() {
  static const ScanBackend backend = [] {
    const char* env = std::getenv("TORIMAX_SCAN_BACKEND");
    if (env && std::strcmp(env, "scalar") == 0) return ScanBackend::Scalar;
#if defined(TORIMAX_HAVE_AVX2)
    bool want_avx2 = !env || std::strcmp(env, "avx2") == 0;
    if (want_avx2 && cpu_has_avx2()) return ScanBackend::Avx2;
#endif
    return ScanBackend::Scalar;
  }();
  return backend;
}

void classify_directions(const double* g1, const double* g2, std::size_t n, double a,
                         std::uint8_t* out) {
#if defined(TORIMAX_HAVE_AVX2)
  if (active_scan_backend() == ScanBackend::Avx2) {
    classify_directions_avx2(g1, g2, n, a, out);
    return;
  }
#endif
  classify_directions_scalar(g1, g2, n, a, out);
}

#if defined(TORIMAX_HAVE_AVX2)
bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}
#endif

} // namespace torimax
