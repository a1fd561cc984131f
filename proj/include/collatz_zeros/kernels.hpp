#pragma once

// Data-parallel inner loops of the root finder. Each kernel set exposes the
// same two entry points; the scalar set is the reference and every SIMD set
// must agree with it up to rounding (tests/test_kernels.cpp). Points are
// passed structure-of-arrays.

#include <cstddef>
#include <span>
#include <string_view>

namespace collatz::kernels {

struct HornerOut {
  double* p_re;
  double* p_im;
  double* dp_re;
  double* dp_im;
  double* magnitude;  // sum |a_k| |z|^k
};

/// Evaluates p, p' and the residual scale at count points.
/// coeffs is ascending degree with at least one entry.
using HornerFn = void (*)(std::span<const double> coeffs, const double* z_re,
                          const double* z_im, std::size_t count, HornerOut out);

/// Sum over j != i of 1 / (z_i - z_j). Terms with z_j == z_i exactly are
/// skipped, which also drops j = i.
using AberthSumFn = void (*)(const double* z_re, const double* z_im,
                             std::size_t count, std::size_t i, double* sum_re,
                             double* sum_im);

struct KernelSet {
  std::string_view name;
  HornerFn horner;
  AberthSumFn aberth_sum;
};

enum class KernelChoice { automatic, scalar, avx2, neon };

const KernelSet& scalar_kernels();

/// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelSet* avx2_kernels();
const KernelSet* neon_kernels();

/// automatic picks the widest supported set, unless COLLATZ_KERNEL names
/// one ("scalar", "avx2", "neon"). Asking for an unavailable set throws
/// DomainError.
const KernelSet& select_kernels(KernelChoice choice = KernelChoice::automatic);

KernelChoice parse_kernel_choice(std::string_view name);

}  // namespace collatz::kernels
