#pragma once

/// Sparse bivariate polynomials over F_p and ternary forms.
///
/// Terms iterate in graded order: total degree descending, then the power of
/// y descending. The first term of a cubic is therefore y^3 when present,
/// which is what `normalized()` scales to 1.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "neuberg/field.hpp"
#include "neuberg/plane.hpp"

namespace neuberg {

inline constexpr unsigned kDefaultDegreeCap = 8;

struct Mono2 {
  unsigned i = 0;  // power of x
  unsigned j = 0;  // power of y

  unsigned degree() const { return i + j; }
  bool operator==(const Mono2&) const = default;
};

struct GradedOrder2 {
  bool operator()(const Mono2& a, const Mono2& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.j > b.j;
  }
};

/// "x^i*y^j" with exponent-0 factors dropped; "1" for the constant monomial.
std::string monomial_key(const Mono2& m);

class Poly2 {
 public:
  using TermMap = std::map<Mono2, Num, GradedOrder2>;

  explicit Poly2(std::uint64_t p, unsigned degree_cap = kDefaultDegreeCap);

  static Poly2 constant(Num c);
  static Poly2 monomial(Num c, unsigned i, unsigned j);
  static Poly2 x(const Field& f) { return monomial(f.one(), 1, 0); }
  static Poly2 y(const Field& f) { return monomial(f.one(), 0, 1); }

  std::uint64_t modulus() const noexcept { return p_; }
  unsigned degree_cap() const noexcept { return cap_; }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  Num coeff(unsigned i, unsigned j) const;
  /// Adds c * x^i y^j. Throws `Errc::DegreeBound` past the cap.
  void add_term(Num c, unsigned i, unsigned j);

  Num eval(Num x, Num y) const;
  Num eval(const Pt& a) const { return eval(a.x, a.y); }

  /// Coefficients of f(., y) as a polynomial in x, highest power first.
  std::vector<Num> x_coefficients(Num y) const;

  Poly2 operator+(const Poly2& g) const;
  Poly2 operator-(const Poly2& g) const;
  Poly2 operator*(const Poly2& g) const;
  Poly2 operator*(Num c) const;
  Poly2 operator+(Num c) const;
  Poly2 operator-(Num c) const;
  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& g) { return *this = *this + g; }
  Poly2& operator-=(const Poly2& g) { return *this = *this - g; }
  Poly2& operator*=(const Poly2& g) { return *this = *this * g; }

  Poly2 partial_x() const;
  Poly2 partial_y() const;

  /// Keeps the terms of total degree <= d.
  Poly2 truncated(unsigned d) const;
  /// Homogeneous part of total degree exactly d.
  Poly2 homogeneous_part(unsigned d) const;

  /// f(gx(x, y), gy(x, y)).
  Poly2 substitute(const Poly2& gx, const Poly2& gy) const;
  /// f(x + dx, y + dy).
  Poly2 translated(Num dx, Num dy) const;

  /// Coefficient of the first term in graded order (0 for the zero polynomial).
  Num leading_coeff() const;
  /// Scaled so that the leading coefficient is 1; zero stays zero.
  Poly2 normalized() const;

  /// True when g = k * f for some nonzero k.
  bool proportional_to(const Poly2& g) const;

  bool operator==(const Poly2& g) const { return p_ == g.p_ && terms_ == g.terms_; }

 private:
  void check_same(const Poly2& g) const;

  std::uint64_t p_;
  unsigned cap_;
  TermMap terms_;
};

inline Poly2 operator*(Num c, const Poly2& f) { return f * c; }
inline Poly2 operator+(Num c, const Poly2& f) { return f + c; }
inline Poly2 operator-(Num c, const Poly2& f) { return -f + c; }

/// "y^3 + x^2*y + 22*y^2 + ..." in graded order; "0" for zero.
std::string to_string(const Poly2& f);

/// Parses sums of terms such as "y^3 + x^2*y - 3*x*y + 13". Integer
/// coefficients are reduced mod p. Throws `Errc::ParseError`.
Poly2 parse_poly2(std::string_view text, const Field& f);

/// 3x3 determinant by cofactor expansion along the first row.
Poly2 det3(const std::array<std::array<Poly2, 3>, 3>& m);

struct Mono3 {
  unsigned i = 0;  // X
  unsigned j = 0;  // Y
  unsigned k = 0;  // Z

  bool operator==(const Mono3&) const = default;
};

struct GradedOrder3 {
  bool operator()(const Mono3& a, const Mono3& b) const {
    if (a.k != b.k) return a.k < b.k;
    return a.j > b.j;
  }
};

std::string monomial_key(const Mono3& m);

/// Homogeneous ternary form of fixed degree d in X, Y, Z.
class Form3 {
 public:
  using TermMap = std::map<Mono3, Num, GradedOrder3>;

  Form3(std::uint64_t p, unsigned degree);

  std::uint64_t modulus() const noexcept { return p_; }
  unsigned degree() const noexcept { return d_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  Num coeff(unsigned i, unsigned j, unsigned k) const;
  /// Throws `Errc::DegreeMismatch` if i + j + k != degree().
  void add_term(Num c, unsigned i, unsigned j, unsigned k);

  Num eval(Num X, Num Y, Num Z) const;
  Num eval(const std::array<Num, 3>& v) const { return eval(v[0], v[1], v[2]); }

  /// Partial derivative in variable 0 (X), 1 (Y) or 2 (Z).
  Form3 partial(int var) const;
  /// Gradient (F_X, F_Y, F_Z) evaluated at v.
  std::array<Num, 3> gradient(const std::array<Num, 3>& v) const;

  bool operator==(const Form3& g) const { return p_ == g.p_ && d_ == g.d_ && terms_ == g.terms_; }

 private:
  std::uint64_t p_;
  unsigned d_;
  TermMap terms_;
};

std::string to_string(const Form3& f);

/// Z-homogenization to degree d. Throws `Errc::DegreeMismatch` if d < deg f.
Form3 homogenize(const Poly2& f, unsigned d);
/// Sets Z = 1.
Poly2 dehomogenize(const Form3& F);

/// Affine zeros of f over F_p, sorted by (x, y). Row sweeps go through the
/// batched kernels. Throws `Errc::EnumerationBound` when p > max_enum.
std::vector<Pt> affine_zeros(const Poly2& f, std::uint64_t max_enum = kDefaultMaxEnum);

/// Affine points where both f and g vanish, sorted by (x, y).
std::vector<Pt> common_affine_zeros(const Poly2& f, const Poly2& g,
                                    std::uint64_t max_enum = kDefaultMaxEnum);

}  // namespace neuberg
