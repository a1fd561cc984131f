#pragma once

// Finite-scale checks of the probabilistic statements: the parity-vector
// bijection, the exact no-two-heads probability and its 6/n bound, the s_N
// bound, and the density sweep of N whose polynomial has a root on |z| = 2.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "collatz_zeros/bigint.hpp"
#include "collatz_zeros/collatz.hpp"

namespace collatz {

inline constexpr unsigned kDefaultParityCap = 16;

/// Verifies residue -> (x_0..x_k) is a bijection on Z/2^(k+1)Z. Throws
/// CertificationError with the colliding pair; DomainError above max_k.
bool parity_permutation_check(unsigned k, unsigned max_k = kDefaultParityCap);

/// Number of length-n coin strings without two consecutive heads (F_{n+2}).
BigInt no_two_heads_count(std::size_t n);

Rational q_exact(std::size_t n);

/// q_exact(n) <= 6/n for all n in [1, n_max]; throws CertificationError
/// naming the first violating n.
bool q_bound_check(std::size_t n_max);

/// 6 log 2 / log(2N). At least 1 (vacuous) for N <= 32.
double s_bound(double N);

/// Li(x) = integral from 2 to x of du / log u, adaptive Gauss-Kronrod.
double logarithmic_integral(double x, double rel_tol = 1e-12);

/// (3 log 2 / (n - 1)) * Li(2n).
double li_upper_bound(std::uint64_t n);

struct DensitySweepResult {
  std::uint64_t n_max = 0;
  std::uint64_t count_equality = 0;  // N in [2, n_max] with gcd(T_N) > 1
  Rational fraction;                 // count / (n_max - 1)
  std::vector<std::uint32_t> per_n_d;  // d for N = 2.., empty unless requested
  double markov_bound_avg = 0;
  double li_bound = 0;

  bool flagged(std::uint64_t N) const { return per_n_d.at(N - 2) > 1; }
};

struct SweepOptions {
  unsigned threads = 1;
  bool keep_per_n = false;
  std::size_t max_steps = kDefaultMaxSteps;
};

/// gcd(T_N) from the trajectory alone.
std::size_t circle_gcd(const Trajectory& t);

/// Exact count over [2, n_max]. Blocks of N are reduced independently and
/// merged in order, so the result does not depend on the thread count.
/// Trajectory cap errors are rethrown as CapExceededError for the offending N.
DensitySweepResult density_sweep(std::uint64_t n_max, const SweepOptions& options = {});

/// Runs body(N) for N in [low, high] on `threads` workers with static block
/// partitioning. The first exception thrown by any worker is rethrown.
void parallel_for_range(std::uint64_t low, std::uint64_t high, unsigned threads,
                        const std::function<void(std::uint64_t)>& body);

}  // namespace collatz
