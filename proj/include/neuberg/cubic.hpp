#pragma once

/// Plane cubic curves over F_p, the chord-tangent operation and the group
/// law with an arbitrary base point.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "neuberg/polynomial.hpp"
#include "neuberg/projective.hpp"

namespace neuberg {

/// Affine cubic f(x, y) = 0 together with its projective closure F.
/// f is stored normalized (leading graded coefficient 1).
class Cubic {
 public:
  /// Throws `Errc::DegreeMismatch` unless deg f = 3.
  static Cubic make(const Poly2& f);

  const Poly2& affine() const { return f_; }
  const Form3& form() const { return F_; }
  std::uint64_t modulus() const noexcept { return f_.modulus(); }

  bool is_on(const ProjPt& P) const;
  std::array<Num, 3> gradient(const ProjPt& P) const { return F_.gradient(P.coords()); }

  /// Points at infinity: roots of F(X, Y, 0), sorted.
  std::vector<ProjPt> infinite_points(std::uint64_t max_enum = kDefaultMaxEnum) const;
  /// Affine points sorted by (x, y), then the points at infinity.
  std::vector<ProjPt> enumerate_points(std::uint64_t max_enum = kDefaultMaxEnum) const;
  /// Projective points where F and all partials vanish.
  std::vector<ProjPt> singular_points(std::uint64_t max_enum = kDefaultMaxEnum) const;
  bool is_nonsingular(std::uint64_t max_enum = kDefaultMaxEnum) const {
    return singular_points(max_enum).empty();
  }

  /// Polar line F_X(P) X + F_Y(P) Y + F_Z(P) Z = 0. Throws `Errc::NotOnCurve`
  /// or `Errc::SingularPoint`.
  ProjLine tangent_line(const ProjPt& P) const;

  /// Third intersection of the line XY (the tangent when X = Y) with the
  /// curve. Throws `Errc::NotOnCurve`, `Errc::SingularPoint`, or
  /// `Errc::LineOnCurve` when the line is a component.
  ProjPt star(const ProjPt& X, const ProjPt& Y) const;

  /// All on-curve X with X * X = P (X = P included when P is a flex).
  std::vector<ProjPt> tangential_preimages(const ProjPt& P,
                                           std::uint64_t max_enum = kDefaultMaxEnum) const;

  bool operator==(const Cubic& o) const { return f_ == o.f_; }

 private:
  Cubic(Poly2 f, Form3 F) : f_(std::move(f)), F_(std::move(F)) {}
  void require_on(const ProjPt& P) const;

  Poly2 f_;
  Form3 F_;
};

/// Points other than P whose tangent passes through P, sorted. Usually four;
/// the count is whatever the field provides. Throws `Errc::NotOnCurve`.
std::vector<ProjPt> quadrangle_to(const Cubic& c, const ProjPt& P,
                                  std::uint64_t max_enum = kDefaultMaxEnum);

/// Group on the points of a nonsingular cubic with identity `base`:
/// X . Y = (X * Y) * base. Three points are collinear exactly when their
/// product is base * base.
class CubicGroup {
 public:
  /// Throws `Errc::NotOnCurve` for the base and `Errc::SingularPoint` when
  /// the curve has a singular point.
  CubicGroup(Cubic curve, const ProjPt& base, std::uint64_t max_enum = kDefaultMaxEnum);

  const Cubic& curve() const { return curve_; }
  const ProjPt& base() const { return base_; }
  /// base * base; the inverse of X is X * tangential().
  const ProjPt& tangential() const { return tangential_; }
  const std::vector<ProjPt>& points() const { return points_; }
  std::size_t order() const { return points_.size(); }

  ProjPt mul(const ProjPt& X, const ProjPt& Y) const;
  ProjPt inv(const ProjPt& X) const;
  ProjPt pow(const ProjPt& X, std::uint64_t n) const;
  std::uint64_t element_order(const ProjPt& X) const;

  /// Invariant factors d1 | d2 | ... with product = order(); [] for the
  /// trivial group.
  std::vector<std::uint64_t> structure() const;

  /// X . Y . Z == tangential().
  bool collinear_product(const ProjPt& X, const ProjPt& Y, const ProjPt& Z) const;

 private:
  Cubic curve_;
  ProjPt base_;
  ProjPt tangential_;
  std::vector<ProjPt> points_;
};

}  // namespace neuberg
