#include <cstdlib>
#include <string>

#include "collatz_zeros/errors.hpp"
#include "collatz_zeros/kernels.hpp"

namespace collatz::kernels {

KernelChoice parse_kernel_choice(std::string_view name) {
  if (name == "auto" || name.empty()) return KernelChoice::automatic;
  if (name == "scalar") return KernelChoice::scalar;
  if (name == "avx2") return KernelChoice::avx2;
  if (name == "neon") return KernelChoice::neon;
  throw DomainError("unknown kernel set '" + std::string(name) + "'");
}

const KernelSet& select_kernels(KernelChoice choice) {
  if (choice == KernelChoice::automatic) {
    if (const char* env = std::getenv("COLLATZ_KERNEL")) choice = parse_kernel_choice(env);
  }
  switch (choice) {
    case KernelChoice::scalar:
      return scalar_kernels();
    case KernelChoice::avx2:
      if (const KernelSet* k = avx2_kernels()) return *k;
      throw DomainError("avx2 kernels are not available on this machine");
    case KernelChoice::neon:
      if (const KernelSet* k = neon_kernels()) return *k;
      throw DomainError("neon kernels are not available on this machine");
    case KernelChoice::automatic:
      break;
  }
  if (const KernelSet* k = avx2_kernels()) return *k;
  if (const KernelSet* k = neon_kernels()) return *k;
  return scalar_kernels();
}

}  // namespace collatz::kernels
