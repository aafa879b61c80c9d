#ifndef HULLVOL_SIMD_KERNELS_HPP
#define HULLVOL_SIMD_KERNELS_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops. Every kernel has a scalar reference and, on x86-64, an AVX2
// variant chosen at runtime. Both variants perform the same IEEE operations in the same
// order (no FMA contraction), so results are bit-identical; the tests hold them to that.

namespace hullvol::simd {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

bool isa_supported(Isa isa) noexcept;

/// Detected on first use; HULLVOL_SIMD=scalar|avx2 overrides the detection.
Isa active_isa() noexcept;

/// Force a variant (tests, benchmarks). Throws ParameterOutOfRange if unsupported here.
void set_active_isa(Isa isa);

/// out = rho * (conjugate ? conj(z) : z) + b, elementwise over split re/im arrays.
void affine_map(std::span<const double> re, std::span<const double> im, std::complex<double> rho,
                std::complex<double> b, bool conjugate, std::span<double> out_re, std::span<double> out_im);

/// True if some point has squared distance <= r2 from (qx, qy).
bool any_within(std::span<const double> xs, std::span<const double> ys, double qx, double qy, double r2) noexcept;

/// Klein-model ice-cream cone: hull of the ball |k| <= radius and the ideal point `axis`.
struct ConeKernel {
  std::array<double, 3> axis{1.0, 0.0, 0.0};
  double radius = 0.0;       ///< Klein radius a = tanh(delta)
  double cos2_half = 1.0;    ///< cos^2 of the tangent cone half-angle, 1 - a^2
};

/// Four interleaved partial sums (lane i accumulates samples i, i+4, ...).
struct LaneSums {
  std::array<double, 4> sum{};
  std::array<double, 4> sum_sq{};
  std::array<std::size_t, 4> hits{};

  double total() const noexcept { return (sum[0] + sum[1]) + (sum[2] + sum[3]); }
  double total_sq() const noexcept { return (sum_sq[0] + sum_sq[1]) + (sum_sq[2] + sum_sq[3]); }
  std::size_t total_hits() const noexcept { return hits[0] + hits[1] + hits[2] + hits[3]; }
};

/// For ball-model points p with sampling weights w, accumulates w * (2 / (1 - |p|^2))^3 over
/// the points inside the cone. Inputs must have equal length.
LaneSums cone_weight_sums(std::span<const double> px, std::span<const double> py, std::span<const double> pz,
                          std::span<const double> weight, const ConeKernel& cone) noexcept;

/// Direct access to each variant, for equivalence testing.
namespace scalar {
void affine_map(const double* re, const double* im, std::size_t n, double rr, double ri, double br, double bi,
                bool conjugate, double* out_re, double* out_im) noexcept;
bool any_within(const double* xs, const double* ys, std::size_t n, double qx, double qy, double r2) noexcept;
LaneSums cone_weight_sums(const double* px, const double* py, const double* pz, const double* w, std::size_t n,
                          const ConeKernel& cone) noexcept;
}  // namespace scalar

namespace avx2 {
void affine_map(const double* re, const double* im, std::size_t n, double rr, double ri, double br, double bi,
                bool conjugate, double* out_re, double* out_im) noexcept;
bool any_within(const double* xs, const double* ys, std::size_t n, double qx, double qy, double r2) noexcept;
LaneSums cone_weight_sums(const double* px, const double* py, const double* pz, const double* w, std::size_t n,
                          const ConeKernel& cone) noexcept;
}  // namespace avx2

}  // namespace hullvol::simd

#endif  // HULLVOL_SIMD_KERNELS_HPP
