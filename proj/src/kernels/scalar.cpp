#include "collatz_zeros/kernels.hpp"
#include "scalar_impl.hpp"

namespace collatz::kernels {

namespace {

void horner_scalar(std::span<const double> coeffs, const double* z_re, const double* z_im,
                   std::size_t count, HornerOut out) {
  for (std::size_t i = 0; i < count; ++i) {
    detail::horner_point(coeffs.data(), coeffs.size(), z_re[i], z_im[i], out.p_re[i],
                         out.p_im[i], out.dp_re[i], out.dp_im[i], out.magnitude[i]);
  }
}

void aberth_sum_scalar(const double* z_re, const double* z_im, std::size_t count, std::size_t i,
                       double* sum_re, double* sum_im) {
  detail::aberth_sum_point(z_re, z_im, count, i, *sum_re, *sum_im);
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar", &horner_scalar, &aberth_sum_scalar};
  return set;
}

}  // namespace collatz::kernels
