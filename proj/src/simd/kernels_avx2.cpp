#include <immintrin.h>

#include "hullvol/simd/kernels.hpp"

// Built with -mavx2 only (no -mfma), so every multiply and add rounds separately as in the
// scalar reference.

namespace hullvol::simd::avx2 {

void affine_map(const double* re, const double* im, std::size_t n, double rr, double ri, double br, double bi,
                bool conjugate, double* out_re, double* out_im) noexcept {
  const double sign = conjugate ? -1.0 : 1.0;
  const __m256d vrr = _mm256_set1_pd(rr), vri = _mm256_set1_pd(ri);
  const __m256d vbr = _mm256_set1_pd(br), vbi = _mm256_set1_pd(bi);
  const __m256d vsign = _mm256_set1_pd(sign);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(re + i);
    const __m256d y = _mm256_mul_pd(vsign, _mm256_loadu_pd(im + i));
    const __m256d xr = _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(vrr, x), _mm256_mul_pd(vri, y)), vbr);
    const __m256d yi = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(vrr, y), _mm256_mul_pd(vri, x)), vbi);
    _mm256_storeu_pd(out_re + i, xr);
    _mm256_storeu_pd(out_im + i, yi);
  }
  scalar::affine_map(re + i, im + i, n - i, rr, ri, br, bi, conjugate, out_re + i, out_im + i);
}

bool any_within(const double* xs, const double* ys, std::size_t n, double qx, double qy, double r2) noexcept {
  const __m256d vqx = _mm256_set1_pd(qx), vqy = _mm256_set1_pd(qy), vr2 = _mm256_set1_pd(r2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vqx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vqy);
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    if (_mm256_movemask_pd(_mm256_cmp_pd(d2, vr2, _CMP_LE_OQ)) != 0) return true;
  }
  return scalar::any_within(xs + i, ys + i, n - i, qx, qy, r2);
}

LaneSums cone_weight_sums(const double* px, const double* py, const double* pz, const double* w, std::size_t n,
                          const ConeKernel& cone) noexcept {
  const __m256d ax = _mm256_set1_pd(cone.axis[0]);
  const __m256d ay = _mm256_set1_pd(cone.axis[1]);
  const __m256d az = _mm256_set1_pd(cone.axis[2]);
  const __m256d a2 = _mm256_set1_pd(cone.radius * cone.radius);
  const __m256d c2 = _mm256_set1_pd(cone.cos2_half);
  const __m256d one = _mm256_set1_pd(1.0), two = _mm256_set1_pd(2.0);
  __m256d sum = _mm256_setzero_pd(), sum_sq = _mm256_setzero_pd();
  __m256i hits = _mm256_setzero_si256();

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(px + i), y = _mm256_loadu_pd(py + i), z = _mm256_loadu_pd(pz + i);
    const __m256d pp = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y)), _mm256_mul_pd(z, z));
    const __m256d s = _mm256_div_pd(two, _mm256_add_pd(one, pp));
    const __m256d qx = _mm256_mul_pd(s, x), qy = _mm256_mul_pd(s, y), qz = _mm256_mul_pd(s, z);
    const __m256d qq =
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(qx, qx), _mm256_mul_pd(qy, qy)), _mm256_mul_pd(qz, qz));
    const __m256d qd =
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(qx, ax), _mm256_mul_pd(qy, ay)), _mm256_mul_pd(qz, az));
    const __m256d dx = _mm256_sub_pd(ax, qx), dy = _mm256_sub_pd(ay, qy), dz = _mm256_sub_pd(az, qz);
    const __m256d dd =
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)), _mm256_mul_pd(dz, dz));
    const __m256d om = _mm256_sub_pd(one, qd);
    const __m256d in_ball = _mm256_cmp_pd(qq, a2, _CMP_LE_OQ);
    const __m256d in_cone = _mm256_and_pd(_mm256_cmp_pd(qd, a2, _CMP_GE_OQ),
                                          _mm256_cmp_pd(_mm256_mul_pd(om, om), _mm256_mul_pd(c2, dd), _CMP_GE_OQ));
    const __m256d inside = _mm256_or_pd(in_ball, in_cone);

    const __m256d f = _mm256_div_pd(two, _mm256_sub_pd(one, pp));
    const __m256d g = _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_mul_pd(_mm256_mul_pd(f, f), f));
    const __m256d gm = _mm256_and_pd(inside, g);
    sum = _mm256_add_pd(sum, gm);
    sum_sq = _mm256_add_pd(sum_sq, _mm256_mul_pd(gm, gm));
    hits = _mm256_sub_epi64(hits, _mm256_castpd_si256(inside));  // mask lanes are -1
  }

  LaneSums out;
  _mm256_storeu_pd(out.sum.data(), sum);
  _mm256_storeu_pd(out.sum_sq.data(), sum_sq);
  alignas(32) long long h[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(h), hits);
  for (int k = 0; k < 4; ++k) out.hits[k] = static_cast<std::size_t>(h[k]);

  // The remainder continues the lane pattern: element i lands in lane i % 4, and i is a multiple of 4 here.
  const LaneSums tail = scalar::cone_weight_sums(px + i, py + i, pz + i, w + i, n - i, cone);
  for (int k = 0; k < 4; ++k) {
    out.sum[k] += tail.sum[k];
    out.sum_sq[k] += tail.sum_sq[k];
    out.hits[k] += tail.hits[k];
  }
  return out;
}

}  // namespace hullvol::simd::avx2
