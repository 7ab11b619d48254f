#pragma once

// Shared fixtures: the reference triangle over F_23 and small generators.

#include <cstdint>
#include <random>
#include <vector>

#include "neuberg/plane.hpp"

namespace neuberg::testing {

inline const Field& f23() {
  static const Field f(23);
  return f;
}

inline Pt pt(std::int64_t x, std::int64_t y) { return Pt(f23(), x, y); }
inline Ln ln(std::int64_t a, std::int64_t b, std::int64_t c) { return Ln::make(f23(), a, b, c); }

/// A1 A2 A3 of the worked example.
inline Tri example_triangle() { return Tri::make(pt(13, 1), pt(5, 5), pt(2, 11)); }
/// I1 I2 I3; I0 = [0,0] is their orthocenter.
inline Tri incenter_triangle() { return Tri::make(pt(6, 4), pt(22, 22), pt(21, 12)); }

inline Num random_num(std::mt19937_64& rng, const Field& f) {
  return f(static_cast<std::int64_t>(rng() % f.p()));
}

inline Pt random_pt(std::mt19937_64& rng, const Field& f) {
  return Pt(random_num(rng, f), random_num(rng, f));
}

/// Random non-degenerate triangle.
inline Tri random_tri(std::mt19937_64& rng, const Field& f) {
  for (;;) {
    const Pt a = random_pt(rng, f), b = random_pt(rng, f), c = random_pt(rng, f);
    if (a != b && b != c && a != c && !is_collinear(a, b, c)) return Tri::make(a, b, c);
  }
}

inline const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> ps{5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  return ps;
}

}  // namespace neuberg::testing

#include "neuberg/polynomial.hpp"
#include "neuberg/projective.hpp"

namespace neuberg::testing {

inline Poly2 eq1() { return parse_poly2("y^3 + x^2*y + 22*y^2 + 7*x*y + 9*x^2 + 13*y", f23()); }

inline ProjPt ppt(std::int64_t x, std::int64_t y) { return ProjPt(pt(x, y)); }
inline ProjPt infinity_e() { return ProjPt::make(f23(), 1, 0, 0); }

}  // namespace neuberg::testing
