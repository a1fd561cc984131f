// NEON kernels for AArch64: two doubles per register. Advanced SIMD is
// mandatory on AArch64, so no runtime probe is needed once compiled in.

#include "collatz_zeros/kernels.hpp"
#include "scalar_impl.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

namespace collatz::kernels {

namespace {

void horner_neon(std::span<const double> coeffs, const double* z_re, const double* z_im,
                 std::size_t count, HornerOut out) {
  const std::size_t nc = coeffs.size();
  const double* a = coeffs.data();
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const float64x2_t zr = vld1q_f64(z_re + i);
    const float64x2_t zi = vld1q_f64(z_im + i);
    const float64x2_t r = vsqrtq_f64(vfmaq_f64(vmulq_f64(zi, zi), zr, zr));
    float64x2_t pr = vdupq_n_f64(a[nc - 1]);
    float64x2_t pi = vdupq_n_f64(0.0);
    float64x2_t dr = vdupq_n_f64(0.0);
    float64x2_t di = vdupq_n_f64(0.0);
    float64x2_t mag = vabsq_f64(pr);
    for (std::size_t k = nc - 1; k-- > 0;) {
      const float64x2_t ak = vdupq_n_f64(a[k]);
      const float64x2_t ndr = vaddq_f64(vfmsq_f64(vmulq_f64(dr, zr), di, zi), pr);
      const float64x2_t ndi = vaddq_f64(vfmaq_f64(vmulq_f64(di, zr), dr, zi), pi);
      const float64x2_t npr = vaddq_f64(vfmsq_f64(vmulq_f64(pr, zr), pi, zi), ak);
      const float64x2_t npi = vfmaq_f64(vmulq_f64(pi, zr), pr, zi);
      dr = ndr;
      di = ndi;
      pr = npr;
      pi = npi;
      mag = vfmaq_f64(vabsq_f64(ak), mag, r);
    }
    vst1q_f64(out.p_re + i, pr);
    vst1q_f64(out.p_im + i, pi);
    vst1q_f64(out.dp_re + i, dr);
    vst1q_f64(out.dp_im + i, di);
    vst1q_f64(out.magnitude + i, mag);
  }
  for (; i < count; ++i) {
    detail::horner_point(a, nc, z_re[i], z_im[i], out.p_re[i], out.p_im[i], out.dp_re[i],
                         out.dp_im[i], out.magnitude[i]);
  }
}

void aberth_sum_neon(const double* z_re, const double* z_im, std::size_t count, std::size_t i,
                     double* sum_re, double* sum_im) {
  const float64x2_t xr = vdupq_n_f64(z_re[i]);
  const float64x2_t xi = vdupq_n_f64(z_im[i]);
  const float64x2_t zero = vdupq_n_f64(0.0);
  const float64x2_t one = vdupq_n_f64(1.0);
  float64x2_t sr = zero;
  float64x2_t si = zero;
  std::size_t j = 0;
  for (; j + 2 <= count; j += 2) {
    const float64x2_t dr = vsubq_f64(xr, vld1q_f64(z_re + j));
    const float64x2_t di = vsubq_f64(xi, vld1q_f64(z_im + j));
    const float64x2_t den = vfmaq_f64(vmulq_f64(di, di), dr, dr);
    const uint64x2_t keep =
        vreinterpretq_u64_u32(vmvnq_u32(vreinterpretq_u32_u64(vceqq_f64(den, zero))));
    const float64x2_t inv = vdivq_f64(one, vbslq_f64(keep, den, one));
    sr = vaddq_f64(sr, vbslq_f64(keep, vmulq_f64(dr, inv), zero));
    si = vsubq_f64(si, vbslq_f64(keep, vmulq_f64(di, inv), zero));
  }
  double tr = vaddvq_f64(sr);
  double ti = vaddvq_f64(si);
  for (; j < count; ++j) {
    const double dr = z_re[i] - z_re[j];
    const double di = z_im[i] - z_im[j];
    const double den = dr * dr + di * di;
    if (den == 0) continue;
    tr += dr / den;
    ti -= di / den;
  }
  *sum_re = tr;
  *sum_im = ti;
}

}  // namespace

const KernelSet* neon_kernels() {
  static const KernelSet set{"neon", &horner_neon, &aberth_sum_neon};
  return &set;
}

}  // namespace collatz::kernels

#else

namespace collatz::kernels {

const KernelSet* neon_kernels() { return nullptr; }

}  // namespace collatz::kernels

#endif
