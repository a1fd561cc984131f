#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace collatz {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

/// Parses a base-10 integer with optional leading '-'. Throws DomainError on
/// anything else (including empty input and embedded whitespace).
BigInt parse_bigint(const std::string& text);

/// Canonical rational num/den in lowest terms.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool fits_u64(const BigInt& x) {
  return x >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const BigInt& x);
BigInt from_u64(std::uint64_t x);

}  // namespace collatz
