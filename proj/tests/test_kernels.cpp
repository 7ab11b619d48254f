#include <random>
#include <vector>

#include "doctest.h"
#include "neuberg/kernels.hpp"

using namespace neuberg::kernels;

namespace {

std::uint32_t reference(const std::vector<std::uint32_t>& c, std::uint32_t x, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (auto k : c) acc = (acc * x + k) % p;
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

TEST_CASE("scalar kernel matches direct evaluation") {
  std::mt19937_64 rng(29);
  for (std::uint32_t p : {3u, 23u, 65521u, 2147483647u}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::uint32_t> c(1 + rng() % 6), xs(rng() % 40), out(0);
      for (auto& k : c) k = static_cast<std::uint32_t>(rng() % p);
      for (auto& x : xs) x = static_cast<std::uint32_t>(rng() % p);
      out.resize(xs.size());
      horner_mod_scalar(c, xs, out, p);
      for (std::size_t i = 0; i < xs.size(); ++i) CHECK(out[i] == reference(c, xs[i], p));
    }
  }
}

TEST_CASE("vector kernel agrees with the scalar reference") {
  if (!avx2_available()) {
    MESSAGE("AVX2 not available; vector variant skipped");
    return;
  }
  std::mt19937_64 rng(31);
  // Include the largest admissible modulus, where rounding margins are tightest.
  for (std::uint32_t p : {3u, 5u, 23u, 251u, 65521u, 1000003u, 67108859u}) {
    REQUIRE(p < kSimdMaxModulus);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::uint32_t> c(1 + rng() % 8), xs(rng() % 67);
      for (auto& k : c) k = static_cast<std::uint32_t>(rng() % p);
      for (auto& x : xs) x = static_cast<std::uint32_t>(trial % 5 == 0 ? p - 1 : rng() % p);
      std::vector<std::uint32_t> a(xs.size()), b(xs.size());
      horner_mod_scalar(c, xs, a, p);
      horner_mod_avx2(c, xs, b, p);
      CHECK(a == b);
    }
  }
}

TEST_CASE("dispatch stays exact above the vector modulus limit") {
  const std::uint32_t p = 2147483647u;
  std::vector<std::uint32_t> c{p - 1, p - 2, 5}, xs{0, 1, p - 1, 123456789};
  std::vector<std::uint32_t> out(xs.size());
  horner_mod(c, xs, out, p);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(out[i] == reference(c, xs[i], p));
  CHECK(isa_name(active_isa()) != nullptr);
}
