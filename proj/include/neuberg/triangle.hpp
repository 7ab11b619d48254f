#pragma once

/// Triangle centers and constructions over F_p (p >= 5).
///
/// Vertex indices are 0, 1, 2 (A1, A2, A3); side i is opposite vertex i.
/// Operations that need bisectors only succeed when every vertex spread is a
/// square; those that need equilateral apexes require 3 to be a square.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "neuberg/plane.hpp"
#include "neuberg/polynomial.hpp"
#include "neuberg/projective.hpp"

namespace neuberg {

/// Throws `Errc::InvalidInput` for p = 3 (midpoints and centroids divide by 2, 3).
void require_triangle_field(std::uint64_t p);

/// Orthocenter by the closed Cartesian form. Throws `Errc::DegenerateTriangle`.
Pt orthocenter(const Tri& t);

/// (R1+R2+R3)^2 - 2(R1^2+R2^2+R3^2) from the side quadrances.
Num quadrea(const Tri& t);
/// 4 * (twice the signed area)^2. Equal to quadrea() for every triangle.
Num quadrea_from_determinant(const Tri& t);

/// Affine weights (b1, b2, b3), b1+b2+b3 = 1, with orthocenter = sum bi*Ai.
std::array<Num, 3> orthocenter_barycentric(const Tri& t);

/// Feet of the three altitudes; foot i lies on side i. Throws `Errc::NullSide`.
Tri orthic_triangle(const Tri& t);

/// The two lines through vertex i whose reflection swaps its two sides,
/// sorted. nullopt when the vertex spread is a nonsquare. Throws
/// `Errc::NullSide` if a side through the vertex is null.
std::optional<std::pair<Ln, Ln>> vertex_bisectors(const Tri& t, int vertex);

/// Common spread a vertex bisector makes with both sides at that vertex.
Num bisector_spread(const Tri& t, int vertex, const Ln& bisector);

/// Quadrangle of incenters. points[0] is the base point (lexicographically
/// smallest unless overridden); for i = 1..3, vertex i-1 lies on the line
/// joining points[0] and points[i].
struct IncenterQuadrangle {
  std::array<Pt, 4> points;
};

/// Throws `Errc::NoBisectors` when some vertex spread is a nonsquare and
/// `Errc::InvalidInput` when `base` is not one of the four incenters.
IncenterQuadrangle incenter_quadrangle(const Tri& t, std::optional<Pt> base = std::nullopt);

Pt circumcenter(const Tri& t);
Pt centroid(const Tri& t);

/// Line through orthocenter and circumcenter. Throws
/// `Errc::EquilateralDegenerate` when they coincide.
Ln euler_line(const Tri& t);

/// Isogonal conjugate via reflection of the cevians in the vertex bisectors.
/// nullopt when P is a vertex or the reflected lines do not meet in one point.
std::optional<ProjPt> isogonal_conjugate(const Tri& t, const ProjPt& P);
/// Affine version; nullopt also when the conjugate lies at infinity.
std::optional<Pt> isogonal_conjugate(const Tri& t, const Pt& P);

/// Symbolic conjugation: P* = [X(x,y) : Y(x,y) : Z(x,y)] with quadratic forms.
struct ConjugationMap {
  Poly2 X, Y, Z;

  std::optional<Pt> apply(const Pt& P) const;
  /// Same map up to a nonzero scalar.
  bool equivalent(const ConjugationMap& o) const;
};

ConjugationMap isogonal_map(const Tri& t);

/// Apexes (E, E') of the two equilateral triangles on side i. With the
/// side oriented cyclically (A_{i+1} -> A_{i+2}) and t the smaller square
/// root of 3, E = M + (t/2) n and E' = M - (t/2) n where M is the midpoint
/// and n the quarter-turned side vector. Throws `Errc::ThreeNotSquare`.
std::pair<Pt, Pt> equilateral_points(const Tri& t, int side);

struct NapoleonCentroids {
  std::array<Pt, 3> unprimed;  // centroids of (A_{i+1}, A_{i+2}, E_i)
  std::array<Pt, 3> primed;    // same with E'_i
};

NapoleonCentroids napoleon(const Tri& t);

struct Circle {
  Pt center;
  Num quadrance;  // (x-cx)^2 + (y-cy)^2 = quadrance

  bool contains(const Pt& P) const { return neuberg::quadrance(P, center) == quadrance; }
  Poly2 equation() const;
};

std::string to_string(const Circle& c);

struct ApolloniusCircle {
  Circle circle;
  Pt foot_first;   // first bisector meets the opposite side here
  Pt foot_second;  // second bisector meets the opposite side here
};

/// Throws `Errc::NoBisectors` or `Errc::BisectorParallelToSide`.
ApolloniusCircle apollonius_circle(const Tri& t, int vertex);

/// Common points of the three Apollonius circles (0, 1 or 2). When two
/// exist and 3 is a square, the first is the one whose isogonal conjugate
/// is the perspector with the E-apex triangle; otherwise sorted.
std::vector<Pt> isodynamic_points(const Tri& t);

struct SpecialLines {
  Ln lemoine;  // through the Apollonius centers
  Ln brocard;  // through circumcenter and symmedian point
};

SpecialLines special_lines(const Tri& t);

/// Concurrence point of the joins A_i B_i; nullopt when not concurrent or
/// some join is undefined.
std::optional<Pt> perspector(const Tri& a, const Tri& b);

/// S2(s) = 4 s (1 - s)
Num spread_poly_s2(Num s);

template <class T>
struct Maybe {
  std::optional<T> value;
  std::string reason;  // empty when value is present

  bool has_value() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

struct CenterReport {
  Maybe<Pt> orthocenter;
  Maybe<Pt> circumcenter;
  Maybe<Pt> centroid;
  Maybe<Pt> symmedian;
  Maybe<Ln> euler;
  Maybe<std::array<Pt, 4>> incenters;
  Maybe<std::pair<Pt, Pt>> isodynamic;
  Maybe<std::pair<Pt, Pt>> fermat;
  Maybe<Ln> lemoine;
  Maybe<Ln> brocard;
};

/// Every center that exists for `t`; absent ones carry a reason.
CenterReport center_report(const Tri& t);

}  // namespace neuberg
