#include <random>
#include <set>

#include "doctest.h"
#include "neuberg/error.hpp"
#include "neuberg/polynomial.hpp"
#include "support.hpp"

using namespace neuberg;
using neuberg::testing::f23;
using neuberg::testing::pt;

namespace {

Poly2 eq1() { return parse_poly2("y^3 + x^2*y + 22*y^2 + 7*x*y + 9*x^2 + 13*y", f23()); }

// The 27 affine points listed for the example cubic.
std::vector<Pt> listed_points() {
  const int xy[27][2] = {{0, 0},   {0, 8},   {0, 16},  {2, 11},  {3, 13},  {4, 5},   {5, 5},
                         {5, 14},  {6, 4},   {7, 1},   {7, 2},   {7, 21},  {8, 10},  {13, 1},
                         {13, 7},  {13, 16}, {14, 9},  {16, 11}, {17, 7},  {17, 8},  {17, 9},
                         {18, 21}, {19, 13}, {21, 2},  {21, 10}, {21, 12}, {22, 22}};
  std::vector<Pt> out;
  for (const auto& p : xy) out.push_back(pt(p[0], p[1]));
  return out;
}

Poly2 random_poly(std::mt19937_64& rng, const Field& f, unsigned deg) {
  Poly2 g(f.p());
  for (unsigned i = 0; i <= deg; ++i) {
    for (unsigned j = 0; i + j <= deg; ++j) {
      if (rng() % 3 == 0) continue;
      g.add_term(testing::random_num(rng, f), i, j);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("parse and print round trip") {
  const Poly2 f = eq1();
  CHECK(to_string(f) == "y^3 + x^2*y + 22*y^2 + 7*x*y + 9*x^2 + 13*y");
  CHECK(parse_poly2(to_string(f), f23()) == f);
  CHECK(parse_poly2("-x + 3", f23()) == parse_poly2("22x+3", f23()));
  CHECK(parse_poly2("2xy", f23()) == parse_poly2("2*x*y", f23()));
  CHECK(to_string(Poly2(23)) == "0");
  for (const char* bad : {"x^", "3**x", "y +", "z", "x^a", ""}) {
    try {
      (void)parse_poly2(bad, f23());
      FAIL("parsed " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
    }
  }
}

TEST_CASE("ring arithmetic examples") {
  const Poly2 x = Poly2::x(f23()), y = Poly2::y(f23());
  CHECK(eq1() + Poly2(23) == eq1());
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((eq1() * f23()(22)).proportional_to(eq1()));
  for (const Pt& p : listed_points()) CHECK((eq1() * f23()(22)).eval(p) == 0);
}

TEST_CASE("evaluation") {
  CHECK(eq1().eval(pt(6, 4)) == 0);
  CHECK_FALSE(eq1().eval(pt(1, 1)) == 0);
  CHECK(Poly2(23).eval(pt(5, 7)) == 0);
}

TEST_CASE("the example cubic has exactly the 27 listed affine points") {
  // Oracle: direct evaluation at all 529 points.
  std::vector<Pt> brute;
  for (auto a : f23().elements()) {
    for (auto b : f23().elements()) {
      if (eq1().eval(a, b).is_zero()) brute.push_back(Pt(a, b));
    }
  }
  CHECK(brute == listed_points());
  CHECK(affine_zeros(eq1()) == listed_points());
}

TEST_CASE("affine_zeros matches brute force on random polynomials") {
  std::mt19937_64 rng(17);
  for (auto p : testing::small_primes()) {
    const Field f(p);
    for (int i = 0; i < 10; ++i) {
      const Poly2 g = random_poly(rng, f, 1 + static_cast<unsigned>(rng() % 5));
      const Poly2 h = random_poly(rng, f, 1 + static_cast<unsigned>(rng() % 3));
      std::vector<Pt> zg, zgh;
      for (auto a : f.elements()) {
        for (auto b : f.elements()) {
          if (g.eval(a, b).is_zero()) {
            zg.push_back(Pt(a, b));
            if (h.eval(a, b).is_zero()) zgh.push_back(Pt(a, b));
          }
        }
      }
      CHECK(affine_zeros(g) == zg);
      CHECK(common_affine_zeros(g, h) == zgh);
    }
  }
  try {
    (void)affine_zeros(eq1(), 10);
    FAIL("bound ignored");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EnumerationBound);
  }
}

TEST_CASE("determinants") {
  const Field& f = f23();
  const Poly2 one = Poly2::constant(f.one()), zero(23);
  CHECK(det3({{{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}}) == one);
  const Poly2 x = Poly2::x(f), y = Poly2::y(f);
  CHECK(det3({{{x, y, one}, {x, y, one}, {y, x * y, one}}}).is_zero());

  auto lin = [&f, &x, &y](int a, int b, int c) { return x * f(a) + y * f(b) + f(c); };
  const Poly2 d = det3({{{lin(13, 19, 5), lin(19, 10, 1), lin(19, 19, 3)},
                         {lin(4, 10, 3), lin(10, 19, 4), lin(22, 16, 11)},
                         {lin(13, 4, 1), lin(4, 10, 19), lin(22, 20, 19)}}});
  CHECK(d.proportional_to(eq1()));
  CHECK(d.normalized() == eq1());
}

TEST_CASE("homogenization") {
  const Form3 F = homogenize(eq1(), 3);
  CHECK(dehomogenize(F) == eq1());
  CHECK(F.coeff(0, 3, 0) == 1);
  CHECK(F.coeff(2, 1, 0) == 1);
  CHECK(F.coeff(3, 0, 0) == 0);
  CHECK(F.coeff(1, 2, 0) == 0);
  CHECK(F.coeff(1, 1, 1) == 7);
  CHECK(F.eval(f23()(1), f23()(0), f23()(0)) == 0);

  const Form3 one = homogenize(Poly2::constant(f23().one()), 2);
  CHECK(one.coeff(0, 0, 2) == 1);
  CHECK(one.terms().size() == 1);
  try {
    (void)homogenize(eq1(), 2);
    FAIL("degree too small");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreeMismatch);
  }
}

TEST_CASE("homogenization round trip on random polynomials") {
  std::mt19937_64 rng(19);
  for (auto p : testing::small_primes()) {
    const Field f(p);
    for (int i = 0; i < 20; ++i) {
      const Poly2 g = random_poly(rng, f, 4);
      const unsigned d = static_cast<unsigned>(std::max(g.degree(), 0)) + static_cast<unsigned>(rng() % 2);
      const Form3 G = homogenize(g, d);
      CHECK(dehomogenize(G) == g);
      // Scaling by lambda multiplies by lambda^d.
      const Num lam = f(2), X = testing::random_num(rng, f), Y = testing::random_num(rng, f),
                Z = testing::random_num(rng, f);
      CHECK(G.eval(lam * X, lam * Y, lam * Z) == lam.pow(d) * G.eval(X, Y, Z));
      // Euler's identity X F_X + Y F_Y + Z F_Z = d F.
      const auto grad = G.gradient({X, Y, Z});
      CHECK(X * grad[0] + Y * grad[1] + Z * grad[2] == f(static_cast<std::int64_t>(d)) * G.eval(X, Y, Z));
    }
  }
}

TEST_CASE("partial derivatives") {
  const Field& f = f23();
  const Poly2 x = Poly2::x(f), y = Poly2::y(f);
  CHECK((x * x * y).partial_x() == x * y * f(2));
  CHECK(Poly2::constant(f(5)).partial_x().is_zero());

  // Tangent at [a,b] in the closed form; it must be proportional to the
  // gradient line fx (x - a) + fy (y - b) = 0 at every curve point.
  const Poly2 fx = eq1().partial_x(), fy = eq1().partial_y();
  for (const Pt& P : listed_points()) {
    const Num a = P.x, b = P.y;
    const Num la = 18 * a + 7 * b + 2 * a * b;
    const Num lb = 7 * a + 21 * b + a * a + 3 * b * b + 13;
    const Num lc = 3 * b + 7 * a * b + 9 * a * a + 22 * b * b;
    const Num ga = fx.eval(P), gb = fy.eval(P);
    const Num gc = -(ga * a + gb * b);
    CHECK(la == ga);
    CHECK(lb == gb);
    CHECK(lc == gc);
  }
}

TEST_CASE("translation and truncation") {
  std::mt19937_64 rng(23);
  const Field& f = f23();
  for (int i = 0; i < 30; ++i) {
    const Poly2 g = random_poly(rng, f, 3);
    const Num dx = testing::random_num(rng, f), dy = testing::random_num(rng, f);
    const Pt P = testing::random_pt(rng, f);
    CHECK(g.translated(dx, dy).eval(P) == g.eval(P.x + dx, P.y + dy));
    CHECK(g.translated(dx, dy).translated(-dx, -dy) == g);
    Poly2 parts(23);
    for (unsigned d = 0; d <= 3; ++d) parts += g.homogeneous_part(d);
    CHECK(parts == g);
    CHECK(g.truncated(1) == g.homogeneous_part(0) + g.homogeneous_part(1));
  }
}

TEST_CASE("degree cap") {
  Poly2 g(23, 3);
  CHECK_NOTHROW(g.add_term(f23()(1), 3, 0));
  try {
    g.add_term(f23()(1), 2, 2);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreeBound);
  }
}
