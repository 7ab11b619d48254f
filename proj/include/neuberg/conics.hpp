#pragma once

/// Tangent conics: the degree-2 Taylor truncation of a curve at a point,
/// and the identical-or-disjoint behaviour for y^2 = ax^3 + bx + c.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "neuberg/polynomial.hpp"

namespace neuberg {

/// y^2 = a x^3 + b x + c with a != 0.
struct WeierstrassCurve {
  Num a, b, c;

  /// Throws `Errc::InvalidInput` when a = 0 or the moduli differ.
  static WeierstrassCurve make(Num a, Num b, Num c);

  std::uint64_t modulus() const noexcept { return a.modulus(); }
  Num rhs(Num x) const { return a * x.pow(3) + b * x + c; }
  bool is_on(const Pt& P) const { return P.y * P.y == rhs(P.x); }
  /// y^2 - a x^3 - b x - c.
  Poly2 poly() const;
  /// x0 carries at least one curve point.
  bool has_x(Num x0) const;
};

/// Terms of degree <= 2 of f expanded about A: translate A to the origin,
/// truncate, translate back. Throws `Errc::NotOnCurve` unless f(A) = 0.
Poly2 taylor_conic(const Poly2& f, const Pt& A);

/// y^2 - 3a x0 x^2 + (3a x0^2 - b) x - a x0^3 - c. Independent of y0, so
/// both points over x0 share it. Throws `Errc::NotOnCurve`.
Poly2 weierstrass_tangent_conic(const WeierstrassCurve& w, Num x0, Num y0);

enum class PairStatus { Identical, Disjoint, Intersecting };

std::string to_string(PairStatus s);

struct PairResult {
  PairStatus status;
  std::vector<Pt> points;  // common points, sorted; empty unless Intersecting
};

/// Compares the tangent conics over x0 and x1. Their difference is
/// a (x1 - x0)(3x^2 - 3x(x0 + x1) + x0^2 + x0 x1 + x1^2), whose quadratic
/// factor has discriminant -3 (x1 - x0)^2. Common points come from its roots;
/// Intersecting requires at least one rational y. Throws `Errc::NotOnCurve`
/// when x0 or x1 carries no curve point.
PairResult conic_pair_status(const WeierstrassCurve& w, Num x0, Num x1);

struct SweepWitness {
  Num x0, x1;
  std::vector<Pt> points;
};

struct SweepCurve {
  WeierstrassCurve curve;
  std::uint64_t pairs_checked = 0;
  std::uint64_t identical = 0, disjoint = 0, intersecting = 0;
  /// Pairs where the discriminant criterion and enumeration disagree.
  std::uint64_t disagreements = 0;
  std::optional<SweepWitness> witness;  // first intersecting pair
};

struct SweepPrime {
  std::uint64_t p;
  bool minus3_square;
  std::vector<SweepCurve> curves;
};

struct SweepReport {
  std::vector<SweepPrime> primes;  // ascending p

  /// No disagreement anywhere, and no intersecting pair where -3 is not a square.
  bool theorem_holds() const;
};

/// Every odd prime p in [p_lo, p_hi] with p >= 5. Curves are y^2 = x^3 + 1
/// followed by distinct nonsingular y^2 = x^3 + bx + c drawn from a
/// mt19937_64 seeded with `seed`, `curves_per_p` in all (fewer only if the
/// field runs out). Each pair x0 < x1 of curve abscissae is classified by
/// the discriminant criterion and by enumerating the common zeros of both
/// conics. Throws `Errc::EnumerationBound` when p > max_enum.
SweepReport disjointness_sweep(std::uint64_t p_lo, std::uint64_t p_hi, std::size_t curves_per_p,
                               std::uint64_t seed = 1, std::uint64_t max_enum = kDefaultMaxEnum);

}  // namespace neuberg
