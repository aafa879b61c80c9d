#include <atomic>
#include <cstdlib>
#include <string>

#include "hullvol/error.hpp"
#include "hullvol/simd/kernels.hpp"

namespace hullvol::simd {

namespace {

Isa detect() noexcept {
  Isa best = isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  if (const char* env = std::getenv("HULLVOL_SIMD")) {
    const std::string v(env);
    if (v == "scalar") return Isa::Scalar;
    if (v == "avx2" && isa_supported(Isa::Avx2)) return Isa::Avx2;
  }
  return best;
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

bool use_avx2() noexcept {
#ifdef HULLVOL_WITH_AVX2
  return current().load(std::memory_order_relaxed) == Isa::Avx2;
#else
  return false;
#endif
}

}  // namespace

std::string_view to_string(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) noexcept {
  if (isa == Isa::Scalar) return true;
#ifdef HULLVOL_WITH_AVX2
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa))
    throw Error(ErrorKind::ParameterOutOfRange, std::string("SIMD variant not supported: ") + std::string(to_string(isa)));
  current().store(isa, std::memory_order_relaxed);
}

void affine_map(std::span<const double> re, std::span<const double> im, std::complex<double> rho,
                std::complex<double> b, bool conjugate, std::span<double> out_re, std::span<double> out_im) {
  const std::size_t n = re.size();
#ifdef HULLVOL_WITH_AVX2
  if (use_avx2()) {
    avx2::affine_map(re.data(), im.data(), n, rho.real(), rho.imag(), b.real(), b.imag(), conjugate, out_re.data(),
                     out_im.data());
    return;
  }
#endif
  scalar::affine_map(re.data(), im.data(), n, rho.real(), rho.imag(), b.real(), b.imag(), conjugate, out_re.data(),
                     out_im.data());
}

bool any_within(std::span<const double> xs, std::span<const double> ys, double qx, double qy, double r2) noexcept {
#ifdef HULLVOL_WITH_AVX2
  if (use_avx2()) return avx2::any_within(xs.data(), ys.data(), xs.size(), qx, qy, r2);
#endif
  return scalar::any_within(xs.data(), ys.data(), xs.size(), qx, qy, r2);
}

LaneSums cone_weight_sums(std::span<const double> px, std::span<const double> py, std::span<const double> pz,
                          std::span<const double> weight, const ConeKernel& cone) noexcept {
#ifdef HULLVOL_WITH_AVX2
  if (use_avx2()) return avx2::cone_weight_sums(px.data(), py.data(), pz.data(), weight.data(), px.size(), cone);
#endif
  return scalar::cone_weight_sums(px.data(), py.data(), pz.data(), weight.data(), px.size(), cone);
}

}  // namespace hullvol::simd
