#pragma once

/// The Neuberg cubic of a triangle and its inverse construction.

#include <array>
#include <utility>

#include "neuberg/cubic.hpp"
#include "neuberg/triangle.hpp"

namespace neuberg {

/// Intermediate objects of the construction, kept for inspection.
struct NeubergConstruction {
  /// P -> P_i, the reflection of P = [x, y] in side i, as coordinate polynomials.
  std::array<std::pair<Poly2, Poly2>, 3> reflections;
  /// Coefficients <a : b : c> of the line P_i A_i, linear in x and y.
  std::array<std::array<Poly2, 3>, 3> lines;
  /// det of the 3x3 line matrix before normalization.
  Poly2 determinant;
  Cubic cubic;
};

/// Locus of P whose reflections in the sides form a triangle perspective
/// with T. Throws `Errc::NullSide`, or `Errc::DegenerateConfiguration`
/// when the determinant is not a cubic.
NeubergConstruction neuberg_construction(const Tri& t);
Cubic neuberg_cubic(const Tri& t);

struct RecoveredTriangle {
  ProjPt infinite_point;
  ProjLine asymptote;                // tangent at the infinite point
  std::array<ProjPt, 4> incenters;   // sorted
  Tri orthic;                        // orthic triangle of incenters[1..3]
};

/// Finds the first point at infinity whose quadrangle is four affine points
/// and returns the orthic triangle of three of them. Throws
/// `Errc::NoInfinitePoint` or `Errc::IncompleteQuadrangle`.
RecoveredTriangle recover_triangle(const Cubic& c, std::uint64_t max_enum = kDefaultMaxEnum);

/// Locus of P for which the join of P and its isogonal conjugate is parallel
/// to the Euler line: a (X - xZ) + b (Y - yZ) = 0 with P* = [X : Y : Z] and
/// Euler line <a : b : c>. Normalized; propagates triangle errors.
Poly2 euler_parallel_locus(const Tri& t);

}  // namespace neuberg
