#pragma once

/// Affine plane over F_p: points, line proportions, quadrance, spread,
/// reflections and the incidence predicates of rational trigonometry.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <utility>

#include "neuberg/field.hpp"

namespace neuberg {

struct Pt {
  Num x;
  Num y;

  Pt() = default;
  Pt(Num x_, Num y_) : x(x_), y(y_) {}
  Pt(const Field& f, std::int64_t x_, std::int64_t y_) : x(f(x_)), y(f(y_)) {}

  std::uint64_t modulus() const noexcept { return x.modulus(); }

  bool operator==(const Pt&) const = default;
  auto operator<=>(const Pt&) const = default;
};

std::string to_string(const Pt& a);

/// Line ax + by + c = 0 held as a proportion <a:b:c>, scaled so that the last
/// nonzero coordinate is 1. Canonical form makes == projective equality.
class Ln {
 public:
  Ln() = default;

  /// Throws `Errc::InvalidLine` when a = b = 0.
  static Ln make(Num a, Num b, Num c);
  static Ln make(const Field& f, std::int64_t a, std::int64_t b, std::int64_t c) {
    return make(f(a), f(b), f(c));
  }

  Num a() const { return a_; }
  Num b() const { return b_; }
  Num c() const { return c_; }
  std::uint64_t modulus() const noexcept { return a_.modulus(); }

  /// a*x + b*y + c
  Num eval(const Pt& p) const { return a_ * p.x + b_ * p.y + c_; }
  bool contains(const Pt& p) const { return eval(p).is_zero(); }

  bool operator==(const Ln&) const = default;
  auto operator<=>(const Ln&) const = default;

 private:
  Ln(Num a, Num b, Num c) : a_(a), b_(b), c_(c) {}
  Num a_, b_, c_;
};

std::string to_string(const Ln& l);

/// Q(A1, A2) = (x2 - x1)^2 + (y2 - y1)^2
Num quadrance(const Pt& a1, const Pt& a2);

/// Throws `Errc::CoincidentPoints` when the points agree.
Ln line_through(const Pt& a1, const Pt& a2);

bool is_null(const Ln& l);
bool is_perpendicular(const Ln& l1, const Ln& l2);
bool is_parallel(const Ln& l1, const Ln& l2);

/// Throws `Errc::NullLine` if either line is null.
Num spread(const Ln& l1, const Ln& l2);

/// Unique line through `a` perpendicular to `l`.
Ln altitude(const Ln& l, const Pt& a);

/// Foot of the altitude from `a` to the non-null line `l`.
Num foot_parameter(const Ln& l, const Pt& a);
Pt foot_of_altitude(const Ln& l, const Pt& a);

/// Reflection of a point in a non-null line.
Pt reflect_point(const Ln& l, const Pt& a);

/// Reflection of the line `m` in the non-null line `l`.
Ln reflect_line(const Ln& l, const Ln& m);

Pt midpoint(const Pt& a, const Pt& b);
Pt centroid(const Pt& a, const Pt& b, const Pt& c);

/// Determinant test.
bool is_collinear(const Pt& a, const Pt& b, const Pt& c);

/// (Q1+Q2+Q3)^2 == 2(Q1^2+Q2^2+Q3^2). Agrees with is_collinear everywhere.
bool triple_quad_collinear(const Pt& a, const Pt& b, const Pt& c);

/// Meeting point of two lines; nullopt when parallel or equal.
std::optional<Pt> intersect(const Ln& l1, const Ln& l2);

/// Whether three lines pass through one affine point (or share a direction).
bool are_concurrent(const Ln& l1, const Ln& l2, const Ln& l3);

/// Triangle: three non-collinear points. Vertex i is `v[i]`, i = 0, 1, 2;
/// side i is the line opposite vertex i.
class Tri {
 public:
  /// Throws `Errc::DegenerateTriangle` for repeated or collinear vertices.
  static Tri make(const Pt& a1, const Pt& a2, const Pt& a3);

  const Pt& vertex(int i) const { return v_[static_cast<std::size_t>(i)]; }
  const std::array<Pt, 3>& vertices() const { return v_; }
  std::uint64_t modulus() const noexcept { return v_[0].modulus(); }

  /// Line through the two vertices other than i.
  Ln side(int i) const;
  /// Quadrance of side i.
  Num quadrance(int i) const;
  /// Spread at vertex i between its two sides.
  Num spread(int i) const;
  /// True iff all three side lines are non-null.
  bool non_null() const;

  bool operator==(const Tri&) const = default;

 private:
  explicit Tri(std::array<Pt, 3> v) : v_(v) {}
  std::array<Pt, 3> v_;
};

namespace formula {

// These coefficient formulas are written once and instantiated both for
// numbers and for polynomials in the coordinates of a moving point.

template <class T>
std::array<T, 3> join(const T& x1, const T& y1, const T& x2, const T& y2) {
  return {y1 - y2, x2 - x1, x1 * y2 - x2 * y1};
}

template <class T>
std::array<T, 3> cross(const std::array<T, 3>& u, const std::array<T, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

/// sigma_l([x, y]) for l = <a:b:c>, a^2 + b^2 != 0.
template <class T>
std::pair<T, T> reflect_point(Num a, Num b, Num c, const T& x, const T& y) {
  const Num inv = (a * a + b * b).inverse();
  const Num xx = (b * b - a * a) * inv;
  const Num xy = -(2 * a * b) * inv;
  const Num yy = (a * a - b * b) * inv;
  return {x * xx + y * xy - 2 * a * c * inv, x * xy + y * yy - 2 * b * c * inv};
}

/// Sigma_l(<a1:b1:c1>) for l = <a:b:c>.
template <class T>
std::array<T, 3> reflect_line(Num a, Num b, Num c, const T& a1, const T& b1, const T& c1) {
  const Num d = a * a - b * b;
  const Num e = 2 * a * b;
  return {a1 * d + b1 * e, a1 * e - b1 * d, a1 * (2 * a * c) + b1 * (2 * b * c) - c1 * (a * a + b * b)};
}

}  // namespace formula

}  // namespace neuberg
