#pragma once

// Exact arithmetic for the shortcut Collatz map
//
//   c(x) = x/2          x even
//          (3x + 1)/2   x odd, x != 1
//          0            x = 1
//
// Every value is an arbitrary-precision integer; trajectories can climb far
// above their starting point.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "collatz_zeros/bigint.hpp"
#include "collatz_zeros/errors.hpp"

namespace collatz {

inline constexpr std::size_t kDefaultMaxSteps = 10000;

/// Trajectory N, c(N), ..., 1. The terminal c(1) = 0 is never stored.
struct Trajectory {
  BigInt start;
  std::vector<BigInt> iterates;        // iterates[k] = c^k(start)
  std::size_t n = 0;                   // stopping index, iterates.size() - 1
  std::vector<std::uint8_t> parities;  // iterates[k] mod 2

  const BigInt& operator[](std::size_t k) const { return iterates[k]; }
};

/// Least odd iterate other than 1. Empty for powers of two, which stands in
/// for the M = -1/2 convention; the sentinel never enters arithmetic.
struct LeastOddIterate {
  std::optional<BigInt> value;

  bool is_none() const { return !value.has_value(); }
};

/// Raised when a trajectory has not reached 1 within the step cap.
class CapExceededError : public Error {
 public:
  CapExceededError(Trajectory partial, std::size_t cap);

  const Trajectory& partial() const { return partial_; }
  std::size_t cap() const { return cap_; }

 private:
  Trajectory partial_;
  std::size_t cap_;
};

BigInt collatz_step(const BigInt& x);

/// k-fold composition of collatz_step. Reaching 0 is only legal on the last
/// step; stepping from 0 throws DomainError.
BigInt iterate_k(const BigInt& x, std::uint64_t k);

Trajectory trajectory(const BigInt& start, std::size_t max_steps = kDefaultMaxSteps);

LeastOddIterate least_odd_iterate(const Trajectory& t);

bool is_power_of_two(const BigInt& x);

/// Parity bits x_0..x_k of residue r under the pure shortcut map (no 1 -> 0
/// clause), computed modulo 2^(k+1). Bit x_j only depends on r mod 2^(j+1),
/// so the running value is kept modulo a shrinking power of two and the
/// computation never overflows. Requires k <= 63 and r < 2^(k+1).
std::vector<std::uint8_t> parity_vector(std::uint64_t residue, unsigned k);

/// Same bits packed little-endian into a word (bit j = x_j).
std::uint64_t parity_word(std::uint64_t residue, unsigned k);

}  // namespace collatz
