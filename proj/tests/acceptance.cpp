// Acceptance gate: one PASS/FAIL line per criterion, exact equality
// throughout. Exit status counts criteria whose outcome differs from the
// expectation; `--expect-fail NAME` marks a criterion known to fail.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "neuberg/conics.hpp"
#include "neuberg/cubic.hpp"
#include "neuberg/error.hpp"
#include "neuberg/neuberg.hpp"
#include "neuberg/triangle.hpp"
#include "neuberg/verify.hpp"
#include "support.hpp"

using namespace neuberg;
using neuberg::testing::f23;
using neuberg::testing::ppt;
using neuberg::testing::pt;

namespace {

// Collects failures of one criterion; the first few are kept for the report.
class Gate {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 4) notes_.push_back(what);
  }
  void note(const std::string& s) { info_ = s; }

  bool passed() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream o;
    o << checks_ << " checks, " << failures_ << " failed";
    if (!info_.empty()) o << "; " << info_;
    for (const auto& n : notes_) o << "; " << n;
    return o.str();
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::vector<std::string> notes_;
  std::string info_;
};

// Guards against an exception aborting the whole gate.
template <class Fn>
Gate run_gate(Fn fn) {
  Gate g;
  try {
    fn(g);
  } catch (const std::exception& e) {
    g.expect(false, std::string("threw ") + e.what());
  }
  return g;
}

Cubic eq1() { return Cubic::make(testing::eq1()); }

Num det3(const ProjPt& a, const ProjPt& b, const ProjPt& c) {
  return a.X() * (b.Y() * c.Z() - b.Z() * c.Y()) - a.Y() * (b.X() * c.Z() - b.Z() * c.X()) +
         a.Z() * (b.X() * c.Y() - b.Y() * c.X());
}

// ---- criteria ----

Gate example_replication() {
  return run_gate([](Gate& g) {
    const auto checks = verify_paper();
    std::size_t failed = 0;
    for (const Check& c : checks) {
      g.expect(c.pass, c.name + " (expected " + c.expected + ", got " + c.got + ")");
      failed += c.pass ? 0 : 1;
    }
    g.note(std::to_string(checks.size() - failed) + " of " + std::to_string(checks.size()) + " published values reproduced");
  });
}

Gate group_law() {
  return run_gate([](Gate& g) {
    const Cubic c = eq1();
    const ProjPt I0 = ppt(0, 0), I1 = ppt(6, 4), I2 = ppt(22, 22), I3 = ppt(21, 12);
    const ProjPt inf_e = testing::infinity_e();
    g.expect(c.star(I0, I0) == inf_e, "I0 * I0 != infinity_e");
    const CubicGroup grp(c, I0);
    const auto& pts = grp.points();
    const std::size_t n = pts.size();
    g.expect(n == 28, "group order " + std::to_string(n));

    std::set<ProjPt> involutions;
    for (const ProjPt& X : pts) {
      if (X != I0 && grp.mul(X, X) == I0) involutions.insert(X);
    }
    g.expect(involutions == std::set<ProjPt>{I1, I2, I3}, "order-two points differ from I1, I2, I3");

    const std::vector<ProjPt> klein{I0, I1, I2, I3};
    for (const ProjPt& X : klein) {
      for (const ProjPt& Y : klein) {
        g.expect(std::find(klein.begin(), klein.end(), grp.mul(X, Y)) != klein.end(), "incenters not closed");
      }
    }

    // Cayley table by index.
    std::map<ProjPt, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[pts[i]] = i;
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto it = index.find(grp.mul(pts[i], pts[j]));
        g.expect(it != index.end(), "product off the curve");
        table[i][j] = it == index.end() ? 0 : it->second;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        g.expect(table[i][j] == table[j][i], "not commutative");
        for (std::size_t k = 0; k < n; ++k) {
          g.expect(table[table[i][j]][k] == table[i][table[j][k]], "not associative");
        }
      }
    }

    // Distinct triples: determinant collinearity against the product rule.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          const bool on_line = det3(pts[i], pts[j], pts[k]).is_zero();
          g.expect(on_line == (pts[table[table[i][j]][k]] == inf_e), "collinearity rule");
        }
      }
      // Tangent triples X, X, X * X.
      const ProjPt T = c.star(pts[i], pts[i]);
      g.expect(grp.mul(grp.mul(pts[i], pts[i]), T) == inf_e, "tangent rule");
    }

    // Brute-force element orders against the orders in Z/2 x Z/14.
    std::map<std::uint64_t, std::size_t> seen, want;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t k = 1, cur = i;
      while (pts[cur] != I0) {
        cur = table[cur][i];
        ++k;
      }
      ++seen[k];
      g.expect(k == grp.element_order(pts[i]), "element_order disagrees");
    }
    for (std::uint64_t a = 0; a < 2; ++a) {
      for (std::uint64_t b = 0; b < 14; ++b) {
        const std::uint64_t oa = a == 0 ? 1 : 2, ob = 14 / std::gcd(b, std::uint64_t{14});
        ++want[std::lcm(oa, ob)];
      }
    }
    g.expect(seen == want, "element order histogram is not that of Z/2 x Z/14");
    g.expect(grp.structure() == std::vector<std::uint64_t>{2, 14}, "invariant factors");
  });
}

Gate locus_equivalence() {
  return run_gate([](Gate& g) {
    const Tri t = testing::example_triangle();
    const Cubic c = eq1();
    g.expect(euler_parallel_locus(t).proportional_to(c.affine()), "locus is not a multiple of the cubic");
    const CubicGroup grp(c, ppt(0, 0));
    const ConjugationMap m = isogonal_map(t);
    std::size_t mapped = 0;
    for (const ProjPt& P : c.enumerate_points()) {
      if (!P.is_affine()) continue;
      const Pt a = *P.affine();
      const Num X = m.X.eval(a), Y = m.Y.eval(a), Z = m.Z.eval(a);
      if (X.is_zero() && Y.is_zero() && Z.is_zero()) continue;  // undefined at the vertices
      const ProjPt conj = ProjPt::make(X, Y, Z);
      ++mapped;
      g.expect(c.is_on(conj), to_string(P) + " maps off the curve");
      g.expect(grp.inv(P) == conj, "inverse of " + to_string(P) + " is not its conjugate");
      const auto direct = isogonal_conjugate(t, P);
      g.expect(direct && *direct == conj, "closed form and construction differ at " + to_string(P));
    }
    g.note(std::to_string(mapped) + " of 27 affine points have a conjugate");
  });
}

Gate recovery() {
  return run_gate([](Gate& g) {
    const auto r = recover_triangle(eq1());
    const std::set<ProjPt> incenters(r.incenters.begin(), r.incenters.end());
    g.expect(incenters == std::set<ProjPt>{ppt(0, 0), ppt(6, 4), ppt(22, 22), ppt(21, 12)}, "incenters");
    const std::set<Pt> orthic(r.orthic.vertices().begin(), r.orthic.vertices().end());
    g.expect(orthic == std::set<Pt>{pt(13, 1), pt(5, 5), pt(2, 11)}, "orthic triangle");
    g.expect(neuberg_cubic(r.orthic) == eq1(), "cubic of the recovered triangle");
  });
}

Gate tangent_conics() {
  return run_gate([](Gate& g) {
    const SweepReport rep = disjointness_sweep(5, 47, 5);
    std::size_t nonsquare_primes = 0;
    for (const SweepPrime& sp : rep.primes) {
      const Field f(sp.p);
      g.expect(sp.minus3_square == is_square(f(-3)), "square test at p = " + std::to_string(sp.p));
      g.expect(sp.curves.size() >= 5, "fewer than 5 curves at p = " + std::to_string(sp.p));
      for (const SweepCurve& c : sp.curves) {
        g.expect(c.pairs_checked > 0, "no pairs");
        g.expect(c.disagreements == 0, "methods disagree at p = " + std::to_string(sp.p));
        g.expect(c.identical + c.disjoint + c.intersecting == c.pairs_checked, "counts");
        if (!sp.minus3_square) g.expect(c.intersecting == 0, "intersection at p = " + std::to_string(sp.p));
      }
      nonsquare_primes += sp.minus3_square ? 0 : 1;
    }
    g.expect(nonsquare_primes == 7, "nonsquare primes in range: " + std::to_string(nonsquare_primes));

    // The p = 13 witness, checked by substituting into both conics.
    bool witnessed = false;
    for (const SweepPrime& sp : rep.primes) {
      if (sp.p != 13) continue;
      for (const SweepCurve& c : sp.curves) {
        if (!c.witness) continue;
        const WeierstrassCurve& w = c.curve;
        const auto conic = [&](Num x) { return weierstrass_tangent_conic(w, x, sqrt(w.rhs(x)).front()); };
        const Poly2 q0 = conic(c.witness->x0), q1 = conic(c.witness->x1);
        for (const Pt& P : c.witness->points) {
          g.expect(q0.eval(P).is_zero() && q1.eval(P).is_zero(), "witness point not on both conics");
        }
        witnessed = !c.witness->points.empty();
      }
    }
    g.expect(witnessed, "no intersecting pair at p = 13");

    // 9(x0+x1)^2 - 12(x0^2+x0x1+x1^2) + 3(x1-x0)^2 = 0 with x0 = x, x1 = y.
    // A large modulus keeps the small integer coefficients exact.
    const Field big(kMaxModulus);
    const Poly2 x = Poly2::x(big), y = Poly2::y(big);
    const Poly2 lhs = (x + y) * (x + y) * big(9) - (x * x + x * y + y * y) * big(12);
    const Poly2 rhs = (y - x) * (y - x) * big(-3);
    g.expect(lhs == rhs, "discriminant identity");
  });
}

Gate trig_laws() {
  return run_gate([](Gate& g) {
    std::mt19937_64 rng(20240601);
    const std::vector<std::uint64_t> primes{5, 7, 11, 13, 23, 101};
    std::size_t done = 0;
    for (std::size_t k = 0; done < 1000; ++k) {
      const Field f(primes[k % primes.size()]);
      const Tri t = testing::random_tri(rng, f);
      if (!t.non_null()) continue;
      ++done;
      const Num q1 = t.quadrance(0), q2 = t.quadrance(1), q3 = t.quadrance(2);
      const Num s1 = t.spread(0), s2 = t.spread(1), s3 = t.spread(2);
      const Num qs = q1 + q2 + q3, ss = s1 + s2 + s3;
      // Triple quad: fails for the triangle, holds for a side and its midpoint.
      g.expect(qs * qs != 2 * (q1 * q1 + q2 * q2 + q3 * q3), "triple quad holds for a triangle");
      g.expect(triple_quad_collinear(t.vertex(0), t.vertex(1), midpoint(t.vertex(0), t.vertex(1))), "triple quad");
      g.expect((s1 == 1) == (q2 + q3 == q1), "Pythagoras");
      g.expect(s1 * q2 == s2 * q1 && s2 * q3 == s3 * q2, "spread law");
      const Num d = q2 + q3 - q1;
      g.expect(d * d == 4 * q2 * q3 * (1 - s1), "cross law");
      g.expect(ss * ss == 2 * (s1 * s1 + s2 * s2 + s3 * s3) + 4 * s1 * s2 * s3, "triple spread");
      for (const Num s : {s1, s2, s3}) g.expect(is_square(s * (1 - s)), "s(1 - s) not a square");
      // Reflection in a non-null line keeps quadrances and spreads.
      const Ln l = t.side(0);
      const Tri r = Tri::make(reflect_point(l, t.vertex(0)), reflect_point(l, t.vertex(1)), reflect_point(l, t.vertex(2)));
      for (int i = 0; i < 3; ++i) {
        g.expect(r.quadrance(i) == t.quadrance(i) && r.spread(i) == t.spread(i), "reflection changes the triangle");
      }
    }
    const Field f(23);
    g.expect(spread_poly_s2(f(5)) == 12 && spread_poly_s2(f(17)) == 16 && spread_poly_s2(f(16)) == 6, "S2 values");
  });
}

Gate small_fields() {
  return run_gate([](Gate& g) {
    for (std::uint64_t p : {5, 7}) {
      const Field f(p);
      std::vector<Pt> pts;
      for (const Num x : f.elements()) {
        for (const Num y : f.elements()) pts.emplace_back(x, y);
      }
      for (const Pt& a : pts) {
        for (const Pt& b : pts) {
          for (const Pt& c : pts) g.expect(triple_quad_collinear(a, b, c) == is_collinear(a, b, c), "collinearity");
        }
      }
      for (const Num a : f.elements()) {
        for (const Num b : f.elements()) {
          if (a.is_zero() && b.is_zero()) continue;
          for (const Num c : f.elements()) {
            const Ln l = Ln::make(a, b, c);
            if (is_null(l)) continue;
            for (const Pt& P : pts) {
              const Pt r = reflect_point(l, P);
              g.expect(midpoint(P, r) == foot_of_altitude(l, P), "foot is not the midpoint");
              g.expect(reflect_point(l, r) == P, "reflection not involutive");
              g.expect(l.contains(foot_of_altitude(l, P)), "foot off the line");
            }
          }
        }
      }
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> expect_fail;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::string(argv[i]) == "--expect-fail") expect_fail.insert(argv[i + 1]);
  }
  const std::vector<std::pair<const char*, Gate (*)()>> criteria{
      {"AC1 example replication", example_replication},
      {"AC2 group law", group_law},
      {"AC3 locus equivalence", locus_equivalence},
      {"AC4 triangle recovery", recovery},
      {"AC5 tangent conics", tangent_conics},
      {"AC6 trigonometry laws", trig_laws},
      {"AC7 small-field oracle", small_fields},
  };
  int unexpected = 0;
  for (const auto& [name, fn] : criteria) {
    const Gate g = fn();
    const std::string id = std::string(name).substr(0, 3);
    const bool known = expect_fail.count(id) > 0;
    std::cout << id << ": " << (g.passed() ? "PASS" : "FAIL") << " " << (name + 4) << " (" << g.summary() << ")"
              << (known ? " [known failure]" : "") << "\n";
    unexpected += g.passed() == known ? 1 : 0;
  }
  return unexpected;
}
