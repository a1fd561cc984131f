#include "collatz_zeros/collatz.hpp"

#include <string>

namespace collatz {

CapExceededError::CapExceededError(Trajectory partial, std::size_t cap)
    : Error("trajectory of " + to_decimal(partial.start) + " did not reach 1 within " +
            std::to_string(cap) + " steps"),
      partial_(std::move(partial)),
      cap_(cap) {}

BigInt collatz_step(const BigInt& x) {
  if (x < 1) throw DomainError("collatz_step: argument must be >= 1, got " + to_decimal(x));
  if (x == 1) return BigInt(0);
  BigInt r;
  if (mpz_even_p(x.get_mpz_t())) {
    mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), 1);
  } else {
    r = 3 * x + 1;
    mpz_fdiv_q_2exp(r.get_mpz_t(), r.get_mpz_t(), 1);
  }
  return r;
}

BigInt iterate_k(const BigInt& x, std::uint64_t k) {
  if (x < 1) throw DomainError("iterate_k: argument must be >= 1, got " + to_decimal(x));
  BigInt v = x;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (v == 0) {
      throw DomainError("iterate_k: iteration of " + to_decimal(x) + " reached 0 after " +
                        std::to_string(i) + " of " + std::to_string(k) + " steps");
    }
    v = collatz_step(v);
  }
  return v;
}

Trajectory trajectory(const BigInt& start, std::size_t max_steps) {
  if (start < 2) throw DomainError("trajectory: N must be >= 2, got " + to_decimal(start));
  Trajectory t;
  t.start = start;
  t.iterates.push_back(start);
  while (t.iterates.back() != 1) {
    if (t.iterates.size() > max_steps) {
      t.n = t.iterates.size() - 1;
      for (const auto& x : t.iterates) t.parities.push_back(mpz_odd_p(x.get_mpz_t()) ? 1 : 0);
      throw CapExceededError(std::move(t), max_steps);
    }
    t.iterates.push_back(collatz_step(t.iterates.back()));
  }
  t.n = t.iterates.size() - 1;
  t.parities.reserve(t.iterates.size());
  for (const auto& x : t.iterates) t.parities.push_back(mpz_odd_p(x.get_mpz_t()) ? 1 : 0);
  return t;
}

LeastOddIterate least_odd_iterate(const Trajectory& t) {
  LeastOddIterate m;
  for (std::size_t k = 0; k < t.n; ++k) {
    if (!t.parities[k]) continue;
    if (!m.value || t.iterates[k] < *m.value) m.value = t.iterates[k];
  }
  return m;
}

bool is_power_of_two(const BigInt& x) {
  return x > 0 && mpz_popcount(x.get_mpz_t()) == 1;
}

std::uint64_t parity_word(std::uint64_t residue, unsigned k) {
  if (k > 63) throw DomainError("parity_vector: k must be <= 63");
  if (k < 63 && residue >> (k + 1) != 0) {
    throw DomainError("parity_vector: residue must be < 2^(k+1)");
  }
  // Invariant: x holds the j-th iterate modulo 2^(k+1-j); unsigned
  // wrap-around is harmless since only the low bits are ever read.
  std::uint64_t x = residue;
  std::uint64_t word = 0;
  for (unsigned j = 0; j <= k; ++j) {
    const std::uint64_t bit = x & 1u;
    word |= bit << j;
    x = bit ? (3 * x + 1) >> 1 : x >> 1;
  }
  return word;
}

std::vector<std::uint8_t> parity_vector(std::uint64_t residue, unsigned k) {
  const std::uint64_t word = parity_word(residue, k);
  std::vector<std::uint8_t> bits(k + 1);
  for (unsigned j = 0; j <= k; ++j) bits[j] = static_cast<std::uint8_t>((word >> j) & 1u);
  return bits;
}

}  // namespace collatz
