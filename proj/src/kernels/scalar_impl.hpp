#pragma once

// Reference kernels, templated so the extended-precision root finder can
// reuse them with long double. SIMD variants fall back to these for tails.

#include <cmath>
#include <cstddef>

namespace collatz::kernels::detail {

template <typename T>
inline void horner_point(const T* coeffs, std::size_t ncoeffs, T zr, T zi, T& pr, T& pi,
                         T& dr, T& di, T& mag) {
  const T r = std::sqrt(zr * zr + zi * zi);
  pr = coeffs[ncoeffs - 1];
  pi = 0;
  dr = 0;
  di = 0;
  mag = std::abs(coeffs[ncoeffs - 1]);
  for (std::size_t k = ncoeffs - 1; k-- > 0;) {
    const T ndr = dr * zr - di * zi + pr;
    const T ndi = dr * zi + di * zr + pi;
    const T npr = pr * zr - pi * zi + coeffs[k];
    const T npi = pr * zi + pi * zr;
    dr = ndr;
    di = ndi;
    pr = npr;
    pi = npi;
    mag = mag * r + std::abs(coeffs[k]);
  }
}

template <typename T>
inline void aberth_sum_point(const T* zr, const T* zi, std::size_t count, std::size_t i,
                             T& sr, T& si) {
  sr = 0;
  si = 0;
  const T xr = zr[i];
  const T xi = zi[i];
  for (std::size_t j = 0; j < count; ++j) {
    const T dr = xr - zr[j];
    const T di = xi - zi[j];
    const T den = dr * dr + di * di;
    if (den == 0) continue;
    sr += dr / den;
    si -= di / den;
  }
}

}  // namespace collatz::kernels::detail
