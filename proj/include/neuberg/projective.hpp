#pragma once

#include <array>
#include <optional>
#include <string>

#include "neuberg/field.hpp"
#include "neuberg/plane.hpp"

namespace neuberg {

/// Projective point [X:Y:Z], scaled so the last nonzero coordinate is 1.
/// Affine points embed as [x:y:1]; Z = 0 marks a point at infinity.
class ProjPt {
 public:
  ProjPt() = default;
  explicit ProjPt(const Pt& a);

  /// Throws `Errc::InvalidInput` when X = Y = Z = 0.
  static ProjPt make(Num X, Num Y, Num Z);
  static ProjPt make(const std::array<Num, 3>& v) { return make(v[0], v[1], v[2]); }
  static ProjPt make(const Field& f, std::int64_t X, std::int64_t Y, std::int64_t Z) {
    return make(f(X), f(Y), f(Z));
  }

  Num X() const { return v_[0]; }
  Num Y() const { return v_[1]; }
  Num Z() const { return v_[2]; }
  const std::array<Num, 3>& coords() const { return v_; }
  std::uint64_t modulus() const noexcept { return v_[0].modulus(); }

  bool is_affine() const { return !v_[2].is_zero(); }
  std::optional<Pt> affine() const;

  bool operator==(const ProjPt&) const = default;
  /// Affine points by (x, y) first, then points at infinity.
  bool operator<(const ProjPt& o) const;

 private:
  std::array<Num, 3> v_;
};

/// "[x,y]" for affine points, "[X:Y:0]" at infinity.
std::string to_string(const ProjPt& a);

/// Projective line aX + bY + cZ = 0, canonical like `Ln`. Unlike `Ln`, the
/// line at infinity <0:0:1> is allowed.
class ProjLine {
 public:
  ProjLine() = default;
  explicit ProjLine(const Ln& l) : v_{l.a(), l.b(), l.c()} {}

  static ProjLine make(Num a, Num b, Num c);
  static ProjLine make(const std::array<Num, 3>& v) { return make(v[0], v[1], v[2]); }

  const std::array<Num, 3>& coords() const { return v_; }
  bool contains(const ProjPt& P) const;
  bool is_line_at_infinity() const { return v_[0].is_zero() && v_[1].is_zero(); }
  std::optional<Ln> affine() const;

  bool operator==(const ProjLine&) const = default;

 private:
  std::array<Num, 3> v_;
};

std::string to_string(const ProjLine& l);

/// Join of two distinct projective points. Throws `Errc::CoincidentPoints`.
ProjLine join(const ProjPt& P, const ProjPt& Q);
/// Meet of two distinct lines. Throws `Errc::CoincidentPoints` for equal lines.
ProjPt meet(const ProjLine& l, const ProjLine& m);
bool are_collinear(const ProjPt& P, const ProjPt& Q, const ProjPt& R);

}  // namespace neuberg
