#include "neuberg/neuberg.hpp"

#include <algorithm>

namespace neuberg {

NeubergConstruction neuberg_construction(const Tri& t) {
  const Field f(t.modulus());
  const Poly2 x = Poly2::x(f), y = Poly2::y(f), zero(f.p());
  std::array<std::pair<Poly2, Poly2>, 3> refl{std::make_pair(zero, zero), std::make_pair(zero, zero),
                                              std::make_pair(zero, zero)};
  std::array<std::array<Poly2, 3>, 3> lines{{{zero, zero, zero}, {zero, zero, zero}, {zero, zero, zero}}};
  for (std::size_t i = 0; i < 3; ++i) {
    const Ln s = t.side(static_cast<int>(i));
    if (is_null(s)) throw Error(Errc::NullSide, "side " + to_string(s) + " is null");
    refl[i] = formula::reflect_point(s.a(), s.b(), s.c(), x, y);
    const Pt& a = t.vertex(static_cast<int>(i));
    lines[i] = formula::join(refl[i].first, refl[i].second, Poly2::constant(a.x), Poly2::constant(a.y));
  }
  Poly2 det = det3(lines);
  if (det.degree() != 3) {
    throw Error(Errc::DegenerateConfiguration,
                "concurrency determinant has degree " + std::to_string(det.degree()));
  }
  Cubic cubic = Cubic::make(det);
  return {refl, lines, std::move(det), std::move(cubic)};
}

Cubic neuberg_cubic(const Tri& t) { return neuberg_construction(t).cubic; }

RecoveredTriangle recover_triangle(const Cubic& c, std::uint64_t max_enum) {
  const auto infinite = c.infinite_points(max_enum);
  if (infinite.empty()) throw Error(Errc::NoInfinitePoint, "curve has no point at infinity");
  std::string why;
  for (const ProjPt& inf : infinite) {
    const auto g = c.gradient(inf);
    if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero()) continue;
    std::vector<ProjPt> quad;
    try {
      quad = quadrangle_to(c, inf, max_enum);
    } catch (const Error& e) {
      why = e.what();
      continue;
    }
    if (quad.size() != 4 || !std::all_of(quad.begin(), quad.end(), [](const ProjPt& P) { return P.is_affine(); })) {
      why = "quadrangle to " + to_string(inf) + " has " + std::to_string(quad.size()) + " affine-complete points";
      continue;
    }
    std::sort(quad.begin(), quad.end());
    try {
      const Tri base = Tri::make(*quad[1].affine(), *quad[2].affine(), *quad[3].affine());
      return {inf, c.tangent_line(inf), {quad[0], quad[1], quad[2], quad[3]}, orthic_triangle(base)};
    } catch (const Error& e) {
      why = e.what();
    }
  }
  throw Error(Errc::IncompleteQuadrangle, why);
}

Poly2 euler_parallel_locus(const Tri& t) {
  const Ln e = euler_line(t);
  const ConjugationMap m = isogonal_map(t);
  const Field f(t.modulus());
  const Poly2 x = Poly2::x(f), y = Poly2::y(f);
  return (e.a() * (m.X - x * m.Z) + e.b() * (m.Y - y * m.Z)).normalized();
}

}  // namespace neuberg
