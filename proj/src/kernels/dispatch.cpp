#include <cstdlib>
#include <string_view>

#include "neuberg/kernels.hpp"

namespace neuberg::kernels {

#if !defined(NEUBERG_HAVE_AVX2)
void horner_mod_avx2(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
                     std::span<std::uint32_t> out, std::uint32_t p) {
  horner_mod_scalar(coeffs, xs, out, p);
}
#endif

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool avx2_available() {
#if defined(NEUBERG_HAVE_AVX2)
  static const bool ok = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return ok;
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* forced = std::getenv("NEUBERG_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return Isa::Scalar;
    return avx2_available() ? Isa::Avx2 : Isa::Scalar;
  }();
  return isa;
}

void horner_mod(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
                std::span<std::uint32_t> out, std::uint32_t p) {
  if (active_isa() == Isa::Avx2 && p < kSimdMaxModulus) {
    horner_mod_avx2(coeffs, xs, out, p);
  } else {
    horner_mod_scalar(coeffs, xs, out, p);
  }
}

}  // namespace neuberg::kernels
