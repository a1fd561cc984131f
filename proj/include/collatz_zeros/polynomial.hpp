#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "collatz_zeros/bigint.hpp"
#include "collatz_zeros/collatz.hpp"

namespace collatz {

/// Dense polynomial over Z, ascending degree. The leading coefficient is
/// nonzero except for the zero polynomial, which is stored as [0].
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{BigInt(0)} {}
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](std::size_t k) const { return coeffs_[k]; }
  const BigInt& leading() const { return coeffs_.back(); }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  /// Coefficients rounded to the nearest double.
  std::vector<double> to_doubles() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

struct GaussianInteger {
  BigInt re;
  BigInt im;

  friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
};

/// Root 2*exp(2*pi*i*j/d) on the circle |z| = 2, kept symbolically.
struct BoundaryRoot {
  std::size_t j = 0;
  std::size_t d = 0;

  std::complex<double> value() const;
};

/// P(2z) = (1 + z + ... + z^(d-1)) * Q(z^d), with Q stored in w = z^d:
/// quotient_q[i] is the coefficient of w^i, i.e. of z^(d*i) in the expanded
/// quotient.
struct CircleFactorization {
  std::size_t d = 0;
  IntPolynomial quotient_q;
  std::vector<BoundaryRoot> boundary_roots;  // j = 1..d-1

  /// Q(z^d) as a polynomial in z.
  IntPolynomial expanded_quotient() const;
};

struct DivisionResult {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

IntPolynomial build_collatz_polynomial(const Trajectory& t);

IntPolynomial reciprocal(const IntPolynomial& p);

Rational eval_exact(const IntPolynomial& p, const Rational& x);
BigInt eval_exact(const IntPolynomial& p, const BigInt& x);
GaussianInteger eval_exact(const IntPolynomial& p, const GaussianInteger& x);

/// Plain Horner in double. Error is bounded by roughly
/// 2n * eps * sum |a_k| |z|^k (see eval_magnitude).
std::complex<double> eval_complex(const IntPolynomial& p, std::complex<double> z);

/// Horner in double-double arithmetic, rounded to double at the end. Used
/// when a plain-Horner residual is too noisy to accept a root.
std::complex<double> eval_complex_accurate(const IntPolynomial& p, std::complex<double> z);

/// sum |a_k| |z|^k, the scale for relative residuals.
double eval_magnitude(const IntPolynomial& p, std::complex<double> z);

IntPolynomial scale_argument_by_2(const IntPolynomial& p);

/// Long division by a monic divisor; stays in Z.
DivisionResult exact_divide(const IntPolynomial& dividend, const IntPolynomial& divisor);

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);

/// 1 + z + ... + z^(d-1).
IntPolynomial repunit_polynomial(std::size_t d);

/// Divides p_scaled = P_N(2z) by 1 + ... + z^(d-1) and certifies zero
/// remainder, quotient supported on multiples of d, and strictly positive Q.
/// Throws CertificationError naming the failed check.
CircleFactorization extract_circle_factorization(const IntPolynomial& p_scaled, std::size_t d);

}  // namespace collatz
