#pragma once

/// Batched modular polynomial evaluation used by the enumeration sweeps.
///
/// Every variant computes, for each n,
///   out[n] = coeffs[0]*xs[n]^d + coeffs[1]*xs[n]^(d-1) + ... + coeffs[d]  (mod p)
/// with all inputs already reduced into [0, p). The scalar routine is the
/// reference; the AVX2 routine must agree with it bit for bit.

#include <cstdint>
#include <span>

namespace neuberg::kernels {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);

/// The vector path keeps residues in doubles, so products must stay exact.
inline constexpr std::uint32_t kSimdMaxModulus = std::uint32_t{1} << 26;

void horner_mod_scalar(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
                       std::span<std::uint32_t> out, std::uint32_t p);

/// True when the AVX2 variant was compiled in and the CPU reports AVX2 + FMA.
bool avx2_available();

/// Precondition: avx2_available() and p < kSimdMaxModulus.
void horner_mod_avx2(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
                     std::span<std::uint32_t> out, std::uint32_t p);

/// Variant chosen at first use: AVX2 when available, unless the environment
/// variable NEUBERG_SIMD=scalar forces the reference path.
Isa active_isa();

/// Dispatches to the active variant (scalar for p >= kSimdMaxModulus).
void horner_mod(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
                std::span<std::uint32_t> out, std::uint32_t p);

}  // namespace neuberg::kernels
