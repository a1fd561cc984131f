#pragma once

// Enestrom-Kakeya annulus for positive-coefficient polynomials and the
// resulting exact bounds, index sets and strictness verdicts for Collatz
// polynomials. All arithmetic is exact; nothing here touches floating point.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "collatz_zeros/bigint.hpp"
#include "collatz_zeros/collatz.hpp"
#include "collatz_zeros/polynomial.hpp"

namespace collatz {

struct AlphaBeta {
  Rational alpha;  // min a_k / a_{k+1}
  Rational beta;   // max a_k / a_{k+1}
};

struct ModulusBounds {
  Rational lower;
  Rational upper;
};

using IndexSet = std::vector<std::size_t>;  // sorted, unique

struct UpperVerdict {
  bool strict = true;
  std::size_t d = 1;
  std::optional<CircleFactorization> factorization;  // set iff !strict
};

struct LowerVerdict {
  bool strict = true;
  // Only for the strict case: beta of the reciprocal polynomial and the gcd
  // of its sharpness set (always 1 when the certificate holds).
  std::optional<Rational> reciprocal_beta;
  std::optional<std::size_t> reciprocal_gcd;
};

struct EKReport {
  BigInt N;
  std::size_t n = 0;
  LeastOddIterate M;
  Rational alpha;
  Rational beta;
  Rational lower_bound;
  Rational upper_bound;
  IndexSet T;
  std::size_t d = 1;
  bool lower_strict = true;
  bool upper_strict = true;
  std::optional<CircleFactorization> factorization;
};

/// Boundary certificate for the strict upper case.
struct NoBoundaryCertificate {
  BigInt value_at_minus_two;              // P_N(-2), nonzero
  std::vector<std::size_t> primes_checked;  // prime divisors of n + 1
};

AlphaBeta ek_alpha_beta(const IntPolynomial& p);

ModulusBounds theorem1_bounds(const Trajectory& t);

/// j in [1, n+1] with beta > a_{n-j} / a_{n+1-j}, taking a_{-1} = 0.
IndexSet sharpness_set_S(const IntPolynomial& p);

/// {n+1} U {j in [1, n] : c^{n-j}(N) odd}.
IndexSet index_set_T(const Trajectory& t);

std::size_t gcd_d(const IndexSet& T);

UpperVerdict upper_strictness(const Trajectory& t);

LowerVerdict lower_strictness(const Trajectory& t);

/// Checks 1/alpha[P_N] = 3/2 + 1/(2M) = beta[reciprocal(P_N)] exactly.
/// Returns true; throws CertificationError naming the failed equality and
/// DomainError for powers of two.
bool reciprocal_beta_identity_check(const Trajectory& t);

/// For d = 1: P_N(-2) != 0 and P_N(2z) is not divisible by
/// 1 + ... + z^(p-1) for any prime p | n+1. Throws CertificationError
/// otherwise, DomainError when called with d > 1.
NoBoundaryCertificate certify_no_boundary_roots(const Trajectory& t);

EKReport ek_report(const Trajectory& t);

std::vector<std::size_t> prime_divisors(std::size_t x);

}  // namespace collatz
