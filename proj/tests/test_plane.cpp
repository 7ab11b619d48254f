#include <random>

#include "doctest.h"
#include "neuberg/error.hpp"
#include "neuberg/plane.hpp"
#include "support.hpp"

using namespace neuberg;
using neuberg::testing::ln;
using neuberg::testing::pt;

namespace {

// Spread from direction vectors, independent of the line normal form.
Num spread_of_directions(Num u1, Num v1, Num u2, Num v2) {
  const Num cross = u1 * v2 - v1 * u2;
  return cross * cross / ((u1 * u1 + v1 * v1) * (u2 * u2 + v2 * v2));
}

Ln random_line(std::mt19937_64& rng, const Field& f) {
  for (;;) {
    const Num a = testing::random_num(rng, f), b = testing::random_num(rng, f);
    if (!(a.is_zero() && b.is_zero())) return Ln::make(a, b, testing::random_num(rng, f));
  }
}

}  // namespace

TEST_CASE("quadrance examples") {
  CHECK(quadrance(pt(13, 1), pt(2, 11)) == 14);
  CHECK(quadrance(pt(4, 9), pt(4, 9)) == 0);
  CHECK(quadrance(pt(8, 16), pt(0, 15)) == 19);
}

TEST_CASE("line canonical form") {
  CHECK(line_through(pt(13, 1), pt(5, 5)) == ln(3, 6, 1));
  CHECK(line_through(pt(13, 1), pt(2, 11)) == ln(12, 4, 1));
  CHECK(line_through(pt(0, 0), pt(0, 1)) == ln(1, 0, 0));
  CHECK(ln(2, 4, 6) == ln(1, 2, 3));
  CHECK(to_string(ln(3, 6, 1)) == "<3:6:1>");
  CHECK(to_string(pt(3, 13)) == "[3,13]");
  try {
    (void)ln(0, 0, 1);
    FAIL("accepted <0:0:1>");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidLine);
  }
  try {
    (void)line_through(pt(1, 2), pt(1, 2));
    FAIL("joined a point with itself");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CoincidentPoints);
  }
}

TEST_CASE("null lines") {
  // -1 is a nonsquare mod 23, so no line is null there.
  const Field f(23);
  for (auto a : f.elements()) {
    for (auto b : f.elements()) {
      if (!(a.is_zero() && b.is_zero())) CHECK_FALSE(is_null(Ln::make(a, b, f(0))));
    }
  }
  CHECK(is_null(Ln::make(Field(13), 1, 5, 0)));
  CHECK_FALSE(is_null(Ln::make(Field(13), 1, 0, 0)));
  try {
    (void)spread(Ln::make(Field(13), 1, 5, 0), Ln::make(Field(13), 1, 0, 0));
    FAIL("spread with a null line");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NullLine);
  }
}

TEST_CASE("perpendicularity") {
  CHECK(is_perpendicular(line_through(pt(0, 0), pt(6, 4)), line_through(pt(22, 22), pt(21, 12))));
  CHECK_FALSE(is_perpendicular(ln(3, 6, 1), ln(3, 6, 1)));
  CHECK(is_perpendicular(ln(16, 7, 1), ln(10, 10, 1)));
}

TEST_CASE("spread examples") {
  CHECK(spread(ln(3, 6, 1), ln(12, 4, 1)) == 12);
  CHECK(spread(ln(3, 6, 1), ln(3, 6, 1)) == 0);
  CHECK(spread(line_through(pt(5, 5), pt(13, 1)), line_through(pt(5, 5), pt(2, 11))) == 16);
}

TEST_CASE("feet of altitudes") {
  const Ln l = line_through(pt(22, 22), pt(21, 12));
  CHECK(foot_of_altitude(l, pt(6, 4)) == pt(13, 1));
  CHECK(foot_of_altitude(l, pt(22, 22)) == pt(22, 22));
  CHECK(foot_of_altitude(line_through(pt(6, 4), pt(21, 12)), pt(22, 22)) == pt(5, 5));
}

TEST_CASE("reflection of points") {
  const Ln a2a3 = line_through(pt(5, 5), pt(2, 11));
  CHECK(reflect_point(a2a3, pt(13, 1)) == pt(8, 10));
  CHECK(reflect_point(a2a3, pt(5, 5)) == pt(5, 5));
  CHECK(reflect_point(line_through(pt(13, 1), pt(2, 11)), pt(5, 5)) == pt(17, 9));
}

TEST_CASE("reflection of lines") {
  const Ln l = ln(3, 6, 1);
  CHECK(reflect_line(l, l) == l);
}

TEST_CASE("midpoints") {
  CHECK(midpoint(pt(4, 7), pt(4, 7)) == pt(4, 7));
  CHECK(midpoint(pt(5, 5), pt(2, 11)) == pt(15, 8));
  CHECK(midpoint(pt(20, 21), pt(12, 14)) == pt(16, 6));
}

TEST_CASE("collinearity") {
  CHECK(is_collinear(pt(3, 13), pt(19, 13), pt(7, 13)));
  CHECK(is_collinear(pt(3, 13), pt(19, 13), pt(3, 13)));
  CHECK(is_collinear(pt(18, 21), pt(10, 6), pt(3, 13)));
  CHECK_FALSE(is_collinear(pt(13, 1), pt(5, 5), pt(2, 11)));
}

TEST_CASE("intersection and concurrence") {
  CHECK(intersect(ln(1, 0, 0), ln(0, 1, 0)) == pt(0, 0));
  CHECK_FALSE(intersect(ln(1, 0, 0), ln(1, 0, 1)).has_value());
  CHECK_FALSE(intersect(ln(1, 0, 0), ln(1, 0, 0)).has_value());
  CHECK(are_concurrent(ln(1, 0, 0), ln(0, 1, 0), ln(1, 1, 0)));
  CHECK_FALSE(are_concurrent(ln(1, 0, 0), ln(0, 1, 0), ln(1, 1, 1)));
}

TEST_CASE("triangles") {
  const Tri t = testing::example_triangle();
  CHECK(t.side(0) == line_through(pt(5, 5), pt(2, 11)));
  CHECK(t.spread(0) == 12);
  CHECK(t.spread(1) == 16);
  CHECK(t.spread(2) == 6);
  CHECK(t.quadrance(1) == 14);
  CHECK(t.non_null());
  try {
    (void)Tri::make(pt(0, 0), pt(1, 1), pt(2, 2));
    FAIL("collinear triangle accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateTriangle);
  }
}

TEST_CASE("five laws on random triangles") {
  std::mt19937_64 rng(3);
  for (auto p : testing::small_primes()) {
    const Field f(p);
    for (int i = 0; i < 60; ++i) {
      const Tri t = testing::random_tri(rng, f);
      if (!t.non_null()) continue;
      const Num q1 = t.quadrance(0), q2 = t.quadrance(1), q3 = t.quadrance(2);
      const Num s1 = t.spread(0), s2 = t.spread(1), s3 = t.spread(2);
      // Spread law.
      CHECK(s1 * q2 == s2 * q1);
      CHECK(s2 * q3 == s3 * q2);
      // Cross law with c = 1 - s.
      const Num lhs = q2 + q3 - q1;
      CHECK(lhs * lhs == 4 * q2 * q3 * (1 - s1));
      // Triple spread formula.
      const Num sum = s1 + s2 + s3;
      CHECK(sum * sum == 2 * (s1 * s1 + s2 * s2 + s3 * s3) + 4 * s1 * s2 * s3);
      // Pythagoras: right vertex iff s = 1.
      CHECK((s1 == 1) == (q2 + q3 == q1));
    }
  }
}

TEST_CASE("triple quad formula agrees with the determinant test") {
  std::mt19937_64 rng(5);
  for (auto p : testing::small_primes()) {
    const Field f(p);
    for (int i = 0; i < 300; ++i) {
      const Pt a = testing::random_pt(rng, f), b = testing::random_pt(rng, f);
      const Pt c = i % 3 == 0 ? midpoint(a, b) : testing::random_pt(rng, f);
      CHECK(triple_quad_collinear(a, b, c) == is_collinear(a, b, c));
    }
  }
}

TEST_CASE("reflection properties on random inputs") {
  std::mt19937_64 rng(9);
  for (auto p : testing::small_primes()) {
    const Field f(p);
    for (int i = 0; i < 100; ++i) {
      const Ln l = random_line(rng, f);
      if (is_null(l)) continue;
      const Pt a = testing::random_pt(rng, f);
      const Pt r = reflect_point(l, a);
      CHECK(reflect_point(l, r) == a);
      CHECK(quadrance(a, foot_of_altitude(l, a)) == quadrance(r, foot_of_altitude(l, a)));
      CHECK(midpoint(a, r) == foot_of_altitude(l, a));
      const Ln m = random_line(rng, f);
      CHECK(reflect_line(l, reflect_line(l, m)) == m);
      // Image line contains the images of two points of m.
      const Ln img = reflect_line(l, m);
      const Pt on_m = m.b().is_zero() ? Pt(-m.c() / m.a(), f(0)) : Pt(f(0), -m.c() / m.b());
      CHECK(img.contains(reflect_point(l, on_m)));
      if (!is_null(m)) CHECK(spread(l, m) == spread(l, img));
    }
  }
}

TEST_CASE("spread from normals matches spread from directions") {
  std::mt19937_64 rng(13);
  for (auto p : testing::small_primes()) {
    const Field f(p);
    for (int i = 0; i < 100; ++i) {
      const Ln l1 = random_line(rng, f), l2 = random_line(rng, f);
      if (is_null(l1) || is_null(l2)) continue;
      CHECK(spread(l1, l2) == spread_of_directions(l1.b(), -l1.a(), l2.b(), -l2.a()));
      CHECK(is_perpendicular(l1, l2) == (spread(l1, l2) == 1));
      CHECK(is_parallel(l1, l2) == spread(l1, l2).is_zero());
    }
  }
}
