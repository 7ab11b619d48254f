#include "neuberg/conics.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "neuberg/error.hpp"

namespace neuberg {

WeierstrassCurve WeierstrassCurve::make(Num a, Num b, Num c) {
  if (a.modulus() != b.modulus() || a.modulus() != c.modulus()) {
    throw Error(Errc::InvalidInput, "coefficients from different fields");
  }
  if (a.is_zero()) throw Error(Errc::InvalidInput, "leading coefficient a is 0");
  return {a, b, c};
}

Poly2 WeierstrassCurve::poly() const {
  Poly2 f = Poly2::monomial(Num(1, modulus()), 0, 2);
  f.add_term(-a, 3, 0);
  f.add_term(-b, 1, 0);
  f.add_term(-c, 0, 0);
  return f;
}

bool WeierstrassCurve::has_x(Num x0) const { return is_square(rhs(x0)) || rhs(x0).is_zero(); }

Poly2 taylor_conic(const Poly2& f, const Pt& A) {
  if (!f.eval(A).is_zero()) throw Error(Errc::NotOnCurve, to_string(A) + " is not on the curve");
  return f.translated(A.x, A.y).truncated(2).translated(-A.x, -A.y);
}

Poly2 weierstrass_tangent_conic(const WeierstrassCurve& w, Num x0, Num y0) {
  if (!w.is_on(Pt(x0, y0))) throw Error(Errc::NotOnCurve, to_string(Pt(x0, y0)) + " is not on the curve");
  Poly2 q = Poly2::monomial(Num(1, w.modulus()), 0, 2);
  q.add_term(-w.a * x0 * 3, 2, 0);
  q.add_term(w.a * x0 * x0 * 3 - w.b, 1, 0);
  q.add_term(-w.a * x0.pow(3) - w.c, 0, 0);
  return q;
}

std::string to_string(PairStatus s) {
  switch (s) {
    case PairStatus::Identical: return "identical";
    case PairStatus::Disjoint: return "disjoint";
    case PairStatus::Intersecting: return "intersecting";
  }
  return "?";
}

namespace {

Num any_y(const WeierstrassCurve& w, Num x0) {
  const auto r = sqrt(w.rhs(x0));
  if (r.empty()) throw Error(Errc::NotOnCurve, "no curve point with x = " + to_string(x0));
  return r.front();
}

}  // namespace

PairResult conic_pair_status(const WeierstrassCurve& w, Num x0, Num x1) {
  const Num y0 = any_y(w, x0);
  (void)any_y(w, x1);
  if (x0 == x1) return {PairStatus::Identical, {}};
  const Poly2 c0 = weierstrass_tangent_conic(w, x0, y0);
  // 3x^2 + Bx + C with B = -3(x0 + x1), C = x0^2 + x0 x1 + x1^2; p > 3.
  const Num three = Num(3, w.modulus());
  const Num B = -three * (x0 + x1), C = x0 * x0 + x0 * x1 + x1 * x1;
  const Num disc = B * B - three * C * 4;
  std::set<Pt> pts;
  for (const Num r : sqrt(disc)) {
    const Num x = (-B + r) / (three * 2);
    // On the conic y^2 equals the cubic's right side minus a (x - x0)^3.
    for (const Num y : sqrt(w.rhs(x) - w.a * (x - x0).pow(3))) pts.insert(Pt(x, y));
  }
  std::vector<Pt> out(pts.begin(), pts.end());
  const Poly2 c1 = weierstrass_tangent_conic(w, x1, any_y(w, x1));
  for (const Pt& P : out) {
    if (!c0.eval(P).is_zero() || !c1.eval(P).is_zero()) {
      throw Error(Errc::InvalidInput, "intersection check failed at " + to_string(P));
    }
  }
  if (out.empty()) return {PairStatus::Disjoint, {}};
  return {PairStatus::Intersecting, std::move(out)};
}

bool SweepReport::theorem_holds() const {
  for (const SweepPrime& sp : primes) {
    for (const SweepCurve& c : sp.curves) {
      if (c.disagreements != 0) return false;
      if (!sp.minus3_square && c.intersecting != 0) return false;
    }
  }
  return true;
}

namespace {

SweepCurve sweep_curve(const WeierstrassCurve& w, std::uint64_t max_enum) {
  const Field f(w.modulus());
  SweepCurve out{w, 0, 0, 0, 0, 0, std::nullopt};
  std::vector<Num> xs;
  for (const Num x : f.elements(max_enum)) {
    if (w.has_x(x)) xs.push_back(x);
  }
  std::vector<Poly2> conics;
  for (const Num x : xs) conics.push_back(weierstrass_tangent_conic(w, x, any_y(w, x)));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const PairResult r = conic_pair_status(w, xs[i], xs[j]);
      const auto common = common_affine_zeros(conics[i], conics[j], max_enum);
      ++out.pairs_checked;
      if (r.status == PairStatus::Disjoint) ++out.disjoint;
      if (r.status == PairStatus::Intersecting) ++out.intersecting;
      if (common != r.points) ++out.disagreements;
      if (r.status == PairStatus::Intersecting && !out.witness) out.witness = SweepWitness{xs[i], xs[j], r.points};
    }
  }
  return out;
}

}  // namespace

SweepReport disjointness_sweep(std::uint64_t p_lo, std::uint64_t p_hi, std::size_t curves_per_p,
                               std::uint64_t seed, std::uint64_t max_enum) {
  SweepReport rep;
  std::mt19937_64 rng(seed);
  for (std::uint64_t p = std::max<std::uint64_t>(p_lo, 5); p <= p_hi; ++p) {
    if (!is_prime(p)) continue;
    check_enumeration_bound(p, max_enum);
    const Field f(p);
    SweepPrime sp{p, is_square(f(-3)), {}};
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    auto add = [&](Num b, Num c) {
      // 4b^3 + 27c^2 = 0 exactly when x^3 + bx + c has a repeated root.
      if ((b.pow(3) * 4 + c * c * 27).is_zero()) return;
      if (!seen.insert({b.value(), c.value()}).second) return;
      sp.curves.push_back(sweep_curve(WeierstrassCurve::make(f.one(), b, c), max_enum));
    };
    if (curves_per_p > 0) add(f.zero(), f.one());
    // Draws stop after a fixed budget so tiny fields cannot loop forever.
    for (std::size_t draws = 0; sp.curves.size() < curves_per_p && draws < 64 * curves_per_p; ++draws) {
      const Num b = f(static_cast<std::int64_t>(rng() % p));
      const Num c = f(static_cast<std::int64_t>(rng() % p));
      add(b, c);
    }
    rep.primes.push_back(std::move(sp));
  }
  return rep;
}

}  // namespace neuberg
