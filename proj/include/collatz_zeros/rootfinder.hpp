#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "collatz_zeros/bigint.hpp"
#include "collatz_zeros/errors.hpp"
#include "collatz_zeros/ek_bounds.hpp"
#include "collatz_zeros/kernels.hpp"
#include "collatz_zeros/polynomial.hpp"

namespace collatz {

enum class Precision { standard, extended };

struct RootFinderConfig {
  double tol = 1e-12;           // absolute bound on the per-root correction
  double residual_tol = 1e-10;  // acceptance bound on the scaled residual
  int max_iter = 500;
  std::uint64_t seed = 0;
  Precision precision = Precision::standard;
  kernels::KernelChoice kernel = kernels::KernelChoice::automatic;
};

struct RootSet {
  BigInt N;  // constant term a_0 (the start value for Collatz polynomials)
  std::vector<std::complex<double>> roots;
  std::vector<double> residuals;  // |P(z)| / sum |a_k| |z|^k
  int iterations_used = 0;
  bool converged = false;
  std::string kernel;
};

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, RootSet partial)
      : Error(what), partial_(std::move(partial)) {}

  const RootSet& partial() const { return partial_; }

 private:
  RootSet partial_;
};

/// All complex roots by simultaneous Aberth-Ehrlich iteration.
///
/// Coefficients are rounded to the nearest double (exact for magnitudes below
/// 2^53). Starting points sit on the circle of radius sqrt(alpha * beta) at
/// equally spaced angles, rotated by a seed-derived offset. A root is frozen
/// once its correction drops below tol or its residual reaches the rounding
/// floor of Horner's rule; frozen roots still repel the others. Jacobi-style
/// updates make the result deterministic for a fixed kernel set.
///
/// Requires degree >= 1 and strictly positive coefficients.
RootSet find_roots(const IntPolynomial& p, const RootFinderConfig& config = {});

struct VietaDiagnostics {
  std::complex<double> sum;
  std::complex<double> product;
  double expected_sum = 0;
  double expected_product = 0;
  double sum_error = 0;  // absolute
  double product_error = 0;
  double sum_rel_error = 0;
  double product_rel_error = 0;
};

VietaDiagnostics vieta_check(const IntPolynomial& p, const RootSet& r);

struct BoundViolation {
  std::size_t index;
  double modulus;
};

struct BoundCheck {
  bool ok = true;
  std::vector<BoundViolation> violations;
};

BoundCheck bound_check(const RootSet& r, const ModulusBounds& bounds, double margin);
BoundCheck bound_check(std::span<const std::complex<double>> roots, double lower,
                       double upper, double margin);

/// Angular offset in [0.1, 0.9) * 2pi/n applied to the starting circle.
double start_angle_offset(std::uint64_t seed, std::size_t degree);

}  // namespace collatz
