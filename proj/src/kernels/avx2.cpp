// AVX2 + FMA kernels: four points (or four repelling terms) per register.
// This translation unit is the only one built with -mavx2 -mfma; it is
// reached only after a CPUID check in dispatch.cpp.

#include "collatz_zeros/kernels.hpp"
#include "scalar_impl.hpp"

#if defined(COLLATZ_HAVE_AVX2)

#include <immintrin.h>

namespace collatz::kernels {

namespace {

inline __m256d abs_pd(__m256d x) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
}

inline double hsum_pd(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void horner_avx2(std::span<const double> coeffs, const double* z_re, const double* z_im,
                 std::size_t count, HornerOut out) {
  const std::size_t nc = coeffs.size();
  const double* a = coeffs.data();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d zr = _mm256_loadu_pd(z_re + i);
    const __m256d zi = _mm256_loadu_pd(z_im + i);
    const __m256d r = _mm256_sqrt_pd(_mm256_fmadd_pd(zr, zr, _mm256_mul_pd(zi, zi)));
    __m256d pr = _mm256_set1_pd(a[nc - 1]);
    __m256d pi = _mm256_setzero_pd();
    __m256d dr = _mm256_setzero_pd();
    __m256d di = _mm256_setzero_pd();
    __m256d mag = abs_pd(pr);
    for (std::size_t k = nc - 1; k-- > 0;) {
      const __m256d ak = _mm256_set1_pd(a[k]);
      // dp <- dp * z + p
      const __m256d ndr = _mm256_add_pd(_mm256_fmsub_pd(dr, zr, _mm256_mul_pd(di, zi)), pr);
      const __m256d ndi = _mm256_add_pd(_mm256_fmadd_pd(dr, zi, _mm256_mul_pd(di, zr)), pi);
      // p <- p * z + a_k
      const __m256d npr = _mm256_add_pd(_mm256_fmsub_pd(pr, zr, _mm256_mul_pd(pi, zi)), ak);
      const __m256d npi = _mm256_fmadd_pd(pr, zi, _mm256_mul_pd(pi, zr));
      dr = ndr;
      di = ndi;
      pr = npr;
      pi = npi;
      mag = _mm256_fmadd_pd(mag, r, abs_pd(ak));
    }
    _mm256_storeu_pd(out.p_re + i, pr);
    _mm256_storeu_pd(out.p_im + i, pi);
    _mm256_storeu_pd(out.dp_re + i, dr);
    _mm256_storeu_pd(out.dp_im + i, di);
    _mm256_storeu_pd(out.magnitude + i, mag);
  }
  for (; i < count; ++i) {
    detail::horner_point(a, nc, z_re[i], z_im[i], out.p_re[i], out.p_im[i], out.dp_re[i],
                         out.dp_im[i], out.magnitude[i]);
  }
}

void aberth_sum_avx2(const double* z_re, const double* z_im, std::size_t count, std::size_t i,
                     double* sum_re, double* sum_im) {
  const __m256d xr = _mm256_set1_pd(z_re[i]);
  const __m256d xi = _mm256_set1_pd(z_im[i]);
  const __m256d zero = _mm256_setzero_pd();
  __m256d sr = zero;
  __m256d si = zero;
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256d dr = _mm256_sub_pd(xr, _mm256_loadu_pd(z_re + j));
    const __m256d di = _mm256_sub_pd(xi, _mm256_loadu_pd(z_im + j));
    const __m256d den = _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di));
    const __m256d keep = _mm256_cmp_pd(den, zero, _CMP_NEQ_OQ);
    // Masked lanes divide by one instead of zero, then contribute nothing.
    const __m256d safe = _mm256_blendv_pd(_mm256_set1_pd(1.0), den, keep);
    const __m256d inv = _mm256_div_pd(_mm256_set1_pd(1.0), safe);
    sr = _mm256_add_pd(sr, _mm256_and_pd(_mm256_mul_pd(dr, inv), keep));
    si = _mm256_sub_pd(si, _mm256_and_pd(_mm256_mul_pd(di, inv), keep));
  }
  double tr = hsum_pd(sr);
  double ti = hsum_pd(si);
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

const KernelSet* avx2_kernels() {
  static const KernelSet set{"avx2", &horner_avx2, &aberth_sum_avx2};
  __builtin_cpu_init();
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &set : nullptr;
}

}  // namespace collatz::kernels

#else

namespace collatz::kernels {

const KernelSet* avx2_kernels() { return nullptr; }

}  // namespace collatz::kernels

#endif
