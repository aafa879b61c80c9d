#include "hullvol/simd/kernels.hpp"

namespace hullvol::simd::scalar {

void affine_map(const double* re, const double* im, std::size_t n, double rr, double ri, double br, double bi,
                bool conjugate, double* out_re, double* out_im) noexcept {
  const double sign = conjugate ? -1.0 : 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = re[i];
    const double y = sign * im[i];
    out_re[i] = (rr * x - ri * y) + br;
    out_im[i] = (rr * y + ri * x) + bi;
  }
}

bool any_within(const double* xs, const double* ys, std::size_t n, double qx, double qy, double r2) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - qx;
    const double dy = ys[i] - qy;
    if (dx * dx + dy * dy <= r2) return true;
  }
  return false;
}

LaneSums cone_weight_sums(const double* px, const double* py, const double* pz, const double* w, std::size_t n,
                          const ConeKernel& cone) noexcept {
  LaneSums out;
  const double ax = cone.axis[0], ay = cone.axis[1], az = cone.axis[2];
  const double a2 = cone.radius * cone.radius;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lane = i & 3u;
    const double pp = (px[i] * px[i] + py[i] * py[i]) + pz[i] * pz[i];
    const double s = 2.0 / (1.0 + pp);
    const double qx = s * px[i], qy = s * py[i], qz = s * pz[i];
    const double qq = (qx * qx + qy * qy) + qz * qz;
    const double qd = (qx * ax + qy * ay) + qz * az;
    const double dx = ax - qx, dy = ay - qy, dz = az - qz;
    const double dd = (dx * dx + dy * dy) + dz * dz;
    const double om = 1.0 - qd;
    const bool inside = (qq <= a2) || (qd >= a2 && om * om >= cone.cos2_half * dd);
    if (!inside) continue;
    const double f = 2.0 / (1.0 - pp);
    const double g = w[i] * ((f * f) * f);
    out.sum[lane] += g;
    out.sum_sq[lane] += g * g;
    ++out.hits[lane];
  }
  return out;
}

}  // namespace hullvol::simd::scalar
