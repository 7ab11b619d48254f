#include <random>

#include "doctest.h"
#include "neuberg/conics.hpp"
#include "neuberg/error.hpp"
#include "support.hpp"

using namespace neuberg;
using namespace neuberg::testing;

namespace {

// Sum of c * x^i * y^j, built term by term so it does not share code with
// the closed forms under test.
Poly2 poly(const Field& f, std::initializer_list<std::tuple<std::int64_t, unsigned, unsigned>> terms) {
  Poly2 g(f.p());
  for (const auto& [c, i, j] : terms) g.add_term(f(c), i, j);
  return g;
}

std::vector<Pt> curve_points(const WeierstrassCurve& w) {
  std::vector<Pt> out;
  const Field f(w.modulus());
  for (const Num x : f.elements()) {
    for (const Num y : f.elements()) {
      if (w.is_on(Pt(x, y))) out.push_back(Pt(x, y));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("tangent conic of the nodal cubic") {
  for (std::uint64_t p : {7ull, 13ull, 23ull}) {
    const Field f(p);
    const Poly2 nodal = poly(f, {{1, 0, 2}, {-1, 3, 0}, {-1, 2, 0}});
    int checked = 0;
    for (const Pt& A : affine_zeros(nodal)) {
      const Num x0 = A.x;
      // y^2 + 3 x x0^2 + x^2 (-3 x0 - 1) - x0^3
      Poly2 want = poly(f, {{1, 0, 2}});
      want.add_term(x0 * x0 * 3, 1, 0);
      want.add_term(-(x0 * 3) - f.one(), 2, 0);
      want.add_term(-x0.pow(3), 0, 0);
      CHECK(taylor_conic(nodal, A) == want);
      ++checked;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("taylor_conic") {
  const Field& f = f23();
  const Poly2 conic = poly(f, {{1, 2, 0}, {3, 1, 1}, {5, 0, 1}, {7, 0, 0}});
  for (const Pt& A : affine_zeros(conic)) CHECK(taylor_conic(conic, A) == conic);
  try {
    (void)taylor_conic(conic, pt(1, 1));
    FAIL("off-curve point accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotOnCurve);
  }
}

TEST_CASE("Weierstrass tangent conic examples") {
  const Field f7(7);
  CHECK(weierstrass_tangent_conic(WeierstrassCurve::make(f7(1), f7(-1), f7(0)), f7(0), f7(0)) ==
        poly(f7, {{1, 0, 2}, {1, 1, 0}}));
  CHECK(weierstrass_tangent_conic(WeierstrassCurve::make(f7(1), f7(1), f7(0)), f7(0), f7(0)) ==
        poly(f7, {{1, 0, 2}, {-1, 1, 0}}));
  const Field& f = f23();
  // With b = 0 the x term vanishes: y^2 - 1. By hand, (y + 1)^2 - x^3 - 1
  // truncates to y^2 + 2y, and shifting back gives y^2 - 1.
  CHECK(weierstrass_tangent_conic(WeierstrassCurve::make(f(1), f(0), f(1)), f(0), f(1)) ==
        poly(f, {{1, 0, 2}, {-1, 0, 0}}));
  CHECK(weierstrass_tangent_conic(WeierstrassCurve::make(f(1), f(1), f(1)), f(0), f(1)) ==
        poly(f, {{1, 0, 2}, {-1, 1, 0}, {-1, 0, 0}}));
  try {
    (void)weierstrass_tangent_conic(WeierstrassCurve::make(f(1), f(0), f(1)), f(1), f(1));
    FAIL("off-curve point accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotOnCurve);
  }
  try {
    (void)WeierstrassCurve::make(f(0), f(1), f(1));
    FAIL("a = 0 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidInput);
  }
}

TEST_CASE("closed form agrees with truncation and satisfies the rewrite identity") {
  std::mt19937_64 rng(101);
  int checked = 0;
  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 23ull, 31ull}) {
    const Field f(p);
    for (int i = 0; i < 6; ++i) {
      Num a = random_num(rng, f);
      if (a.is_zero()) a = f.one();
      const auto w = WeierstrassCurve::make(a, random_num(rng, f), random_num(rng, f));
      const Poly2 x = Poly2::x(f);
      for (const Pt& A : curve_points(w)) {
        const Poly2 q = weierstrass_tangent_conic(w, A.x, A.y);
        CHECK(q == taylor_conic(w.poly(), A));
        // q + (a x^3 + b x + c) - y^2 = a (x - x0)^3
        const Poly2 shift = x - A.x;
        CHECK(q - w.poly() == shift * shift * shift * w.a);
        // Same value and first derivatives as the cubic at A.
        CHECK(q.eval(A).is_zero());
        CHECK(q.partial_x().eval(A) == w.poly().partial_x().eval(A));
        CHECK(q.partial_y().eval(A) == w.poly().partial_y().eval(A));
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("discriminant identity") {
  for (std::uint64_t p : {5ull, 7ull, 23ull, 101ull}) {
    const Field f(p);
    const Poly2 x0 = Poly2::x(f), x1 = Poly2::y(f);
    const Poly2 s = x0 + x1, d = x1 - x0;
    const Poly2 lhs = s * s * f(9) - (x0 * x0 + x0 * x1 + x1 * x1) * f(12);
    CHECK(lhs == d * d * f(-3));
  }
  // And the difference of two conics factors as displayed.
  const Field& f = f23();
  const auto w = WeierstrassCurve::make(f(4), f(9), f(2));
  const Poly2 x = Poly2::x(f);
  for (const Pt& A : curve_points(w)) {
    for (const Pt& B : curve_points(w)) {
      const Poly2 diff = weierstrass_tangent_conic(w, A.x, A.y) - weierstrass_tangent_conic(w, B.x, B.y);
      const Poly2 quad = x * x * f(3) - x * ((A.x + B.x) * 3) + (A.x * A.x + A.x * B.x + B.x * B.x);
      CHECK(diff == quad * (w.a * (B.x - A.x)));
    }
  }
}

TEST_CASE("pair status") {
  const Field& f = f23();
  const auto w = WeierstrassCurve::make(f(1), f(0), f(1));
  CHECK(conic_pair_status(w, f(0), f(0)).status == PairStatus::Identical);
  CHECK_FALSE(is_square(f(-3)));
  for (const Pt& A : curve_points(w)) {
    for (const Pt& B : curve_points(w)) {
      if (A.x == B.x) continue;
      CHECK(conic_pair_status(w, A.x, B.x).status == PairStatus::Disjoint);
    }
  }
  try {
    (void)conic_pair_status(w, f(0), f(5));  // 5^3 + 1 = 11 is not a square
    FAIL("abscissa without a point accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotOnCurve);
  }
}

TEST_CASE("p = 13 has intersecting tangent conics") {
  const Field f(13);
  CHECK(f(-3) == f(6) * f(6));
  const auto w = WeierstrassCurve::make(f(1), f(0), f(1));
  int intersecting = 0;
  for (const Pt& A : curve_points(w)) {
    for (const Pt& B : curve_points(w)) {
      if (A.x >= B.x) continue;
      const auto r = conic_pair_status(w, A.x, B.x);
      const Poly2 ca = weierstrass_tangent_conic(w, A.x, A.y), cb = weierstrass_tangent_conic(w, B.x, B.y);
      CHECK(r.points == common_affine_zeros(ca, cb));
      if (r.status != PairStatus::Intersecting) continue;
      ++intersecting;
      for (const Pt& P : r.points) {
        // Substitute by hand: y^2 equals each conic's x-part.
        const auto part = [&](Num x0) { return x0 * P.x * P.x * 3 - (x0 * x0 * 3) * P.x + x0.pow(3) + f(1); };
        CHECK(P.y * P.y == part(A.x));
        CHECK(P.y * P.y == part(B.x));
      }
    }
  }
  CHECK(intersecting > 0);
}

TEST_CASE("criterion agrees with enumeration on random curves") {
  std::mt19937_64 rng(103);
  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 19ull, 31ull}) {
    const Field f(p);
    for (int i = 0; i < 4; ++i) {
      Num a = random_num(rng, f);
      if (a.is_zero()) a = f(2);
      const auto w = WeierstrassCurve::make(a, random_num(rng, f), random_num(rng, f));
      const auto pts = curve_points(w);
      for (const Pt& A : pts) {
        for (const Pt& B : pts) {
          if (A.x >= B.x) continue;
          const auto r = conic_pair_status(w, A.x, B.x);
          const auto common = common_affine_zeros(weierstrass_tangent_conic(w, A.x, A.y),
                                                  weierstrass_tangent_conic(w, B.x, B.y));
          CHECK(r.points == common);
          CHECK((r.status == PairStatus::Intersecting) == !common.empty());
          if (!is_square(f(-3))) CHECK(r.status == PairStatus::Disjoint);
        }
      }
    }
  }
}

TEST_CASE("disjointness sweep") {
  const auto rep = disjointness_sweep(3, 47, 5, 1);
  CHECK(rep.theorem_holds());
  std::vector<std::uint64_t> ps;
  for (const auto& sp : rep.primes) {
    ps.push_back(sp.p);
    CHECK(sp.minus3_square == (sp.p % 3 == 1));
    CHECK(sp.curves.size() == 5);
    CHECK(sp.curves.front().curve.b.is_zero());
    CHECK(sp.curves.front().curve.c == 1);
    for (const auto& c : sp.curves) {
      CHECK(c.disagreements == 0);
      CHECK(c.pairs_checked == c.disjoint + c.intersecting);
      CHECK(c.pairs_checked > 0);
      if (!sp.minus3_square) CHECK(c.intersecting == 0);
      CHECK(c.witness.has_value() == (c.intersecting > 0));
    }
  }
  CHECK(ps == std::vector<std::uint64_t>{5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47});
  const auto& p13 = rep.primes[3];
  REQUIRE(p13.p == 13);
  REQUIRE(p13.curves.front().witness);
  CHECK_FALSE(p13.curves.front().witness->points.empty());
  // Deterministic for a fixed seed.
  const auto again = disjointness_sweep(3, 47, 5, 1);
  for (std::size_t i = 0; i < rep.primes.size(); ++i) {
    for (std::size_t j = 0; j < rep.primes[i].curves.size(); ++j) {
      CHECK(rep.primes[i].curves[j].curve.b == again.primes[i].curves[j].curve.b);
      CHECK(rep.primes[i].curves[j].curve.c == again.primes[i].curves[j].curve.c);
    }
  }
  try {
    (void)disjointness_sweep(5, 47, 1, 1, 20);
    FAIL("bound ignored");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EnumerationBound);
  }
}
