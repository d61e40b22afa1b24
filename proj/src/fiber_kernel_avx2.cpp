#include "torimax/fiber_kernel.hpp"

#if defined(TORIMAX_HAVE_AVX2)

#include <immintrin.h>

namespace torimax {

namespace {

inline __m256d abs_pd(__m256d v) {
  const __m256d signmask = _mm256_set1_pd(-0.0);
  return _mm256_andnot_pd(signmask, v);
}

inline __m256d copysign_nonneg_pd(__m256d mag, __m256d sgn) {
  // mag >= 0: just transplant the sign bit of sgn.
  const __m256d signmask = _mm256_set1_pd(-0.0);
  return _mm256_or_pd(mag, _mm256_and_pd(sgn, signmask));
}

inline __m256d neg_pd(__m256d v) {
  return _mm256_xor_pd(v, _mm256_set1_pd(-0.0)); // bitwise sign flip, as scalar negation
}

} // namespace

// Vector mirror of classify_direction(): identical operation order, no FMA,
// so each lane matches the scalar kernel bit for bit.
void classify_directions_avx2(const double* g1, const double* g2, std::size_t n, double a,
                              std::uint8_t* out) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vtwo = _mm256_set1_pd(2.0);
  const __m256d vfour = _mm256_set1_pd(4.0);
  const __m256d vone = _mm256_set1_pd(1.0);
  const __m256d vzero = _mm256_setzero_pd();
  const __m256d vhalfneg = _mm256_set1_pd(-0.5);
  const __m256d vtol = _mm256_set1_pd(kFiberTol);
  const __m256d vabs_a = abs_pd(va);
  const __m256d vtwo_abs_a = _mm256_mul_pd(vtwo, vabs_a);
  const __m256d vtwo_a = _mm256_mul_pd(vtwo, va);
  const __m256d vfour_a = _mm256_mul_pd(vfour, va);

  const __m256d code_real = _mm256_set1_pd(0.0);
  const __m256d code_nonreal = _mm256_set1_pd(1.0);
  const __m256d code_boundary = _mm256_set1_pd(2.0);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x1 = _mm256_loadu_pd(g1 + i);
    const __m256d x2 = _mm256_loadu_pd(g2 + i);

    // B = (g1 + g2) + 1; A = a * (((2 g1) + (2 g2)) + 1)
    const __m256d B = _mm256_add_pd(_mm256_add_pd(x1, x2), vone);
    const __m256d A = _mm256_mul_pd(
        va, _mm256_add_pd(
                _mm256_add_pd(_mm256_mul_pd(vtwo, x1), _mm256_mul_pd(vtwo, x2)), vone));
    const __m256d boundary0 = _mm256_cmp_pd(A, vzero, _CMP_EQ_OQ);
    const __m256d disc = _mm256_sub_pd(_mm256_mul_pd(B, B), _mm256_mul_pd(vfour, A));
    const __m256d negdisc = _mm256_cmp_pd(disc, vzero, _CMP_LT_OQ);

    // --- complex branch ---
    const __m256d twoA = _mm256_mul_pd(vtwo, A);
    const __m256d x = _mm256_div_pd(neg_pd(B), twoA);
    const __m256d y = _mm256_div_pd(
        _mm256_sqrt_pd(_mm256_max_pd(neg_pd(disc), vzero)),
        _mm256_mul_pd(vtwo, abs_pd(A)));
    const __m256d xx = _mm256_mul_pd(x, x);
    const __m256d yy = _mm256_mul_pd(y, y);
    const __m256d zsq = _mm256_add_pd(xx, yy);
    const __m256d zmag = _mm256_sqrt_pd(zsq);
    const __m256d sre = _mm256_add_pd(_mm256_mul_pd(vtwo_a, _mm256_sub_pd(xx, yy)), x);
    const __m256d sim = _mm256_mul_pd(y, _mm256_add_pd(_mm256_mul_pd(vfour_a, x), vone));
    const __m256d smag = _mm256_sqrt_pd(
        _mm256_add_pd(_mm256_mul_pd(sre, sre), _mm256_mul_pd(sim, sim)));
    const __m256d sscale =
        _mm256_max_pd(vone, _mm256_add_pd(_mm256_mul_pd(vtwo_abs_a, zsq), zmag));
    const __m256d sflag = _mm256_cmp_pd(smag, _mm256_mul_pd(vtol, sscale), _CMP_LE_OQ);
    const __m256d realz =
        _mm256_cmp_pd(y, _mm256_mul_pd(vtol, _mm256_max_pd(vone, zmag)), _CMP_LE_OQ);
    const __m256d reals = _mm256_cmp_pd(
        abs_pd(sim), _mm256_mul_pd(vtol, _mm256_max_pd(vone, smag)), _CMP_LE_OQ);
    const __m256d zreal = _mm256_and_pd(realz, reals);
    __m256d complex_code = _mm256_blendv_pd(code_nonreal, code_real, zreal);
    complex_code = _mm256_blendv_pd(complex_code, code_boundary, sflag);

    // --- real branch ---
    const __m256d sq = _mm256_sqrt_pd(_mm256_max_pd(disc, vzero));
    const __m256d qn = _mm256_mul_pd(vhalfneg, _mm256_add_pd(B, copysign_nonneg_pd(sq, B)));
    const __m256d r1 = _mm256_div_pd(qn, A);
    const __m256d qn_zero = _mm256_cmp_pd(qn, vzero, _CMP_EQ_OQ);
    const __m256d r2 = _mm256_blendv_pd(_mm256_div_pd(vone, qn), vzero, qn_zero);

    auto live = [&](__m256d r) {
      const __m256d rr = _mm256_mul_pd(r, r);
      const __m256d s = _mm256_add_pd(_mm256_mul_pd(vtwo_a, rr), r);
      const __m256d scale =
          _mm256_max_pd(vone, _mm256_add_pd(_mm256_mul_pd(vtwo_abs_a, rr), abs_pd(r)));
      return _mm256_cmp_pd(abs_pd(s), _mm256_mul_pd(vtol, scale), _CMP_GT_OQ);
    };
    const __m256d any_live = _mm256_or_pd(live(r1), live(r2));
    const __m256d real_code = _mm256_blendv_pd(code_boundary, code_real, any_live);

    __m256d code = _mm256_blendv_pd(real_code, complex_code, negdisc);
    code = _mm256_blendv_pd(code, code_boundary, boundary0);

    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, code);
    for (int k = 0; k < 4; ++k) out[i + k] = static_cast<std::uint8_t>(lanes[k]);
  }
  for (; i < n; ++i) out[i] = classify_direction(a, g1[i], g2[i]);
}

} // namespace torimax

#endif // TORIMAX_HAVE_AVX2
