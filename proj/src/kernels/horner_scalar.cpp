#include "neuberg/kernels.hpp"

namespace neuberg::kernels {

void horner_mod_scalar(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
                       std::span<std::uint32_t> out, std::uint32_t p) {
  const std::uint64_t m = p;
  for (std::size_t n = 0; n < xs.size(); ++n) {
    const std::uint64_t x = xs[n];
    std::uint64_t acc = 0;
    for (const std::uint32_t c : coeffs) acc = (acc * x + c) % m;
    out[n] = static_cast<std::uint32_t>(acc);
  }
}

}  // namespace neuberg::kernels
