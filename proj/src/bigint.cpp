#include "collatz_zeros/bigint.hpp"

#include <cctype>

#include "collatz_zeros/errors.hpp"

namespace collatz {

BigInt parse_bigint(const std::string& text) {
  std::size_t i = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (i == text.size()) throw DomainError("not an integer: '" + text + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw DomainError("not an integer: '" + text + "'");
    }
  }
  return BigInt(text, 10);
}

std::uint64_t to_u64(const BigInt& x) {
  if (!fits_u64(x)) throw DomainError("value does not fit in 64 bits: " + to_decimal(x));
  static_assert(sizeof(unsigned long) == 8, "mpz_get_ui must return 64 bits");
  return mpz_get_ui(x.get_mpz_t());
}

BigInt from_u64(std::uint64_t x) {
  BigInt r;
  mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(x));
  return r;
}

}  // namespace collatz
