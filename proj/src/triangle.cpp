#include "neuberg/triangle.hpp"

#include <algorithm>

namespace neuberg {

namespace {

int next(int i, int k = 1) { return (i + k) % 3; }

std::array<Num, 3> homog(const Pt& a) { return {a.x, a.y, Num(1, a.modulus())}; }

bool is_zero_vec(const std::array<Num, 3>& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

Num dot(const std::array<Num, 3>& u, const std::array<Num, 3>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

std::pair<Ln, Ln> require_bisectors(const Tri& t, int vertex) {
  auto b = vertex_bisectors(t, vertex);
  if (!b) {
    throw Error(Errc::NoBisectors, "spread " + to_string(t.spread(vertex)) + " at vertex " +
                                       std::to_string(vertex + 1) + " is not a square");
  }
  return *b;
}

}  // namespace

void require_triangle_field(std::uint64_t p) {
  if (p < 5) throw Error(Errc::InvalidInput, "triangle geometry needs p >= 5, got " + std::to_string(p));
}

Pt orthocenter(const Tri& t) {
  const auto& [a1, a2, a3] = t.vertices();
  const Num x1 = a1.x, y1 = a1.y, x2 = a2.x, y2 = a2.y, x3 = a3.x, y3 = a3.y;
  const Num den = x1 * y2 - x1 * y3 + x2 * y3 - x3 * y2 + x3 * y1 - x2 * y1;
  if (den.is_zero()) throw Error(Errc::DegenerateTriangle, "zero signed area");
  const Num nx = x1 * x2 * y2 - x1 * x3 * y3 + x2 * x3 * y3 - x3 * x2 * y2 + x3 * x1 * y1 -
                 x2 * x1 * y1 + y1 * y2 * y2 - y1 * y3 * y3 + y2 * y3 * y3 - y3 * y2 * y2 +
                 y3 * y1 * y1 - y2 * y1 * y1;
  const Num ny = x1 * y1 * y2 - x1 * y1 * y3 + x2 * y2 * y3 - x3 * y3 * y2 + x3 * y3 * y1 -
                 x2 * y2 * y1 + x1 * x1 * x2 - x1 * x1 * x3 + x2 * x2 * x3 - x3 * x3 * x2 +
                 x3 * x3 * x1 - x2 * x2 * x1;
  return {nx / den, ny / den};
}

Num quadrea(const Tri& t) {
  const Num r1 = t.quadrance(0), r2 = t.quadrance(1), r3 = t.quadrance(2);
  const Num s = r1 + r2 + r3;
  return s * s - 2 * (r1 * r1 + r2 * r2 + r3 * r3);
}

Num quadrea_from_determinant(const Tri& t) {
  const auto& [a1, a2, a3] = t.vertices();
  const Num d = a1.x * a2.y - a1.x * a3.y + a2.x * a3.y - a3.x * a2.y + a3.x * a1.y - a2.x * a1.y;
  return 4 * d * d;
}

std::array<Num, 3> orthocenter_barycentric(const Tri& t) {
  const Num area = quadrea(t);
  if (area.is_zero()) throw Error(Errc::DegenerateTriangle, "zero quadrea");
  const Num r1 = t.quadrance(0), r2 = t.quadrance(1), r3 = t.quadrance(2);
  return {(r3 + r1 - r2) * (r1 + r2 - r3) / area, (r1 + r2 - r3) * (r2 + r3 - r1) / area,
          (r2 + r3 - r1) * (r3 + r1 - r2) / area};
}

Tri orthic_triangle(const Tri& t) {
  std::array<Pt, 3> feet;
  for (int i = 0; i < 3; ++i) {
    const Ln s = t.side(i);
    if (is_null(s)) throw Error(Errc::NullSide, "side " + to_string(s) + " is null");
    feet[static_cast<std::size_t>(i)] = foot_of_altitude(s, t.vertex(i));
  }
  return Tri::make(feet[0], feet[1], feet[2]);
}

std::optional<std::pair<Ln, Ln>> vertex_bisectors(const Tri& t, int vertex) {
  for (int k : {1, 2}) {
    const Ln s = t.side(next(vertex, k));
    if (is_null(s)) throw Error(Errc::NullSide, "side " + to_string(s) + " is null");
  }
  const Pt& v = t.vertex(vertex);
  const Pt& b = t.vertex(next(vertex));
  const Pt& c = t.vertex(next(vertex, 2));
  const Num d1x = b.x - v.x, d1y = b.y - v.y;
  const Num d2x = c.x - v.x, d2y = c.y - v.y;

  // A direction (u, w) bisects when reflecting d1 across it gives a multiple
  // of d2: alpha u^2 + beta u w - alpha w^2 = 0.
  const Num alpha = d1x * d2y + d1y * d2x;
  const Num beta = 2 * (d1y * d2y - d1x * d2x);
  const Num zero(0, t.modulus()), one(1, t.modulus());

  std::vector<std::pair<Num, Num>> dirs;
  if (alpha.is_zero()) {
    if (beta.is_zero()) return std::nullopt;
    dirs = {{one, zero}, {zero, one}};
  } else {
    const auto roots = neuberg::sqrt(beta * beta + 4 * alpha * alpha);
    if (roots.size() != 2) return std::nullopt;
    for (const Num r : roots) dirs.emplace_back((r - beta) / (2 * alpha), one);
  }
  auto through_v = [&v](Num u, Num w) { return Ln::make(w, -u, u * v.y - w * v.x); };
  Ln l1 = through_v(dirs[0].first, dirs[0].second);
  Ln l2 = through_v(dirs[1].first, dirs[1].second);
  if (l2 < l1) std::swap(l1, l2);
  return std::make_pair(l1, l2);
}

Num bisector_spread(const Tri& t, int vertex, const Ln& bisector) {
  return spread(bisector, t.side(next(vertex, 2)));
}

IncenterQuadrangle incenter_quadrangle(const Tri& t, std::optional<Pt> base) {
  require_triangle_field(t.modulus());
  std::array<std::pair<Ln, Ln>, 3> b{require_bisectors(t, 0), require_bisectors(t, 1),
                                     require_bisectors(t, 2)};
  auto pick = [&b](int v, int which) { return which == 0 ? b[v].first : b[v].second; };

  std::vector<Pt> found;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto p = intersect(pick(0, i), pick(1, j));
      if (!p) continue;
      for (int k = 0; k < 2; ++k) {
        if (pick(2, k).contains(*p)) found.push_back(*p);
      }
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  if (found.size() != 4) {
    throw Error(Errc::DegenerateConfiguration,
                "expected 4 incenters, found " + std::to_string(found.size()));
  }

  const Pt base_pt = base.value_or(found.front());
  if (std::find(found.begin(), found.end(), base_pt) == found.end()) {
    throw Error(Errc::InvalidInput, to_string(base_pt) + " is not an incenter");
  }
  IncenterQuadrangle q;
  q.points[0] = base_pt;
  for (int v = 0; v < 3; ++v) {
    bool assigned = false;
    for (const Pt& cand : found) {
      if (cand == base_pt || !is_collinear(base_pt, cand, t.vertex(v))) continue;
      q.points[static_cast<std::size_t>(v + 1)] = cand;
      assigned = true;
    }
    if (!assigned) throw Error(Errc::DegenerateConfiguration, "incenter labelling failed");
  }
  return q;
}

Pt circumcenter(const Tri& t) {
  const auto& [a, b, c] = t.vertices();
  // 2(B-A).X = |B|^2-|A|^2 and 2(C-A).X = |C|^2-|A|^2.
  const Num m11 = 2 * (b.x - a.x), m12 = 2 * (b.y - a.y);
  const Num m21 = 2 * (c.x - a.x), m22 = 2 * (c.y - a.y);
  const Num r1 = b.x * b.x + b.y * b.y - a.x * a.x - a.y * a.y;
  const Num r2 = c.x * c.x + c.y * c.y - a.x * a.x - a.y * a.y;
  const Num det = m11 * m22 - m12 * m21;
  if (det.is_zero()) throw Error(Errc::DegenerateTriangle, "no circumcenter");
  return {(r1 * m22 - m12 * r2) / det, (m11 * r2 - r1 * m21) / det};
}

Pt centroid(const Tri& t) {
  require_triangle_field(t.modulus());
  return centroid(t.vertex(0), t.vertex(1), t.vertex(2));
}

Ln euler_line(const Tri& t) {
  const Pt o = orthocenter(t);
  const Pt c = circumcenter(t);
  if (o == c) throw Error(Errc::EquilateralDegenerate, "orthocenter equals circumcenter");
  return line_through(o, c);
}

std::optional<ProjPt> isogonal_conjugate(const Tri& t, const ProjPt& P) {
  std::array<std::array<Num, 3>, 3> reflected;
  for (int i = 0; i < 3; ++i) {
    if (P == ProjPt(t.vertex(i))) return std::nullopt;
    const auto bis = require_bisectors(t, i).first;
    const auto cevian = formula::cross(homog(t.vertex(i)), P.coords());
    reflected[static_cast<std::size_t>(i)] =
        formula::reflect_line(bis.a(), bis.b(), bis.c(), cevian[0], cevian[1], cevian[2]);
  }
  for (auto [i, j, k] : {std::array{0, 1, 2}, std::array{0, 2, 1}, std::array{1, 2, 0}}) {
    const auto h = formula::cross(reflected[i], reflected[j]);
    if (is_zero_vec(h)) continue;
    if (!dot(h, reflected[k]).is_zero()) return std::nullopt;
    return ProjPt::make(h);
  }
  return std::nullopt;
}

std::optional<Pt> isogonal_conjugate(const Tri& t, const Pt& P) {
  const auto q = isogonal_conjugate(t, ProjPt(P));
  if (!q) return std::nullopt;
  return q->affine();
}

std::optional<Pt> ConjugationMap::apply(const Pt& P) const {
  const Num z = Z.eval(P);
  if (z.is_zero()) return std::nullopt;
  return Pt{X.eval(P) / z, Y.eval(P) / z};
}

bool ConjugationMap::equivalent(const ConjugationMap& o) const {
  // Find the scale from the first nonzero component, then compare all three.
  const std::array<const Poly2*, 3> mine{&X, &Y, &Z}, theirs{&o.X, &o.Y, &o.Z};
  for (std::size_t i = 0; i < 3; ++i) {
    if (mine[i]->is_zero() != theirs[i]->is_zero()) return false;
    if (mine[i]->is_zero()) continue;
    const Num k = theirs[i]->leading_coeff() / mine[i]->leading_coeff();
    for (std::size_t j = 0; j < 3; ++j) {
      if (!(*mine[j] * k == *theirs[j])) return false;
    }
    return true;
  }
  return true;
}

ConjugationMap isogonal_map(const Tri& t) {
  const Field f(t.modulus());
  const Poly2 x = Poly2::x(f), y = Poly2::y(f), one = Poly2::constant(f.one());
  std::array<std::array<Poly2, 3>, 3> reflected{
      {{one, one, one}, {one, one, one}, {one, one, one}}};
  for (int i = 0; i < 3; ++i) {
    const Pt& a = t.vertex(i);
    const auto bis = require_bisectors(t, i).first;
    const auto cevian = formula::join(Poly2::constant(a.x), Poly2::constant(a.y), x, y);
    reflected[static_cast<std::size_t>(i)] =
        formula::reflect_line(bis.a(), bis.b(), bis.c(), cevian[0], cevian[1], cevian[2]);
  }
  const auto h = formula::cross(reflected[0], reflected[1]);
  return {h[0], h[1], h[2]};
}

std::pair<Pt, Pt> equilateral_points(const Tri& t, int side) {
  require_triangle_field(t.modulus());
  const Num three(3, t.modulus());
  const auto roots = neuberg::sqrt(three);
  if (roots.empty()) throw Error(Errc::ThreeNotSquare, "3 is not a square mod " + std::to_string(t.modulus()));
  const Pt& a = t.vertex(next(side));
  const Pt& b = t.vertex(next(side, 2));
  const Pt m = midpoint(a, b);
  const Num k = roots.front() / Num(2, t.modulus());
  const Num nx = a.y - b.y, ny = b.x - a.x;
  return {Pt{m.x + k * nx, m.y + k * ny}, Pt{m.x - k * nx, m.y - k * ny}};
}

NapoleonCentroids napoleon(const Tri& t) {
  NapoleonCentroids out;
  for (int i = 0; i < 3; ++i) {
    const auto [e, e2] = equilateral_points(t, i);
    const Pt& a = t.vertex(next(i));
    const Pt& b = t.vertex(next(i, 2));
    out.unprimed[static_cast<std::size_t>(i)] = centroid(a, b, e);
    out.primed[static_cast<std::size_t>(i)] = centroid(a, b, e2);
  }
  return out;
}

Poly2 Circle::equation() const {
  const Field f(center.modulus());
  const Poly2 dx = Poly2::x(f) - center.x, dy = Poly2::y(f) - center.y;
  return dx * dx + dy * dy - quadrance;
}

std::string to_string(const Circle& c) {
  return "(x-" + to_string(c.center.x) + ")^2+(y-" + to_string(c.center.y) + ")^2=" +
         to_string(c.quadrance);
}

ApolloniusCircle apollonius_circle(const Tri& t, int vertex) {
  require_triangle_field(t.modulus());
  const auto [b1, b2] = require_bisectors(t, vertex);
  const Ln opposite = t.side(vertex);
  const auto x = intersect(b1, opposite);
  const auto y = intersect(b2, opposite);
  if (!x || !y) {
    throw Error(Errc::BisectorParallelToSide,
                "a bisector at vertex " + std::to_string(vertex + 1) + " misses the opposite side");
  }
  const Pt c = midpoint(*x, *y);
  return {Circle{c, quadrance(c, *x)}, *x, *y};
}

namespace {

// a x + b y + c = 0 from subtracting the two circle equations.
std::optional<Ln> radical_line(const Circle& u, const Circle& v) {
  const Num a = 2 * (v.center.x - u.center.x);
  const Num b = 2 * (v.center.y - u.center.y);
  if (a.is_zero() && b.is_zero()) return std::nullopt;
  const Num c = u.center.x * u.center.x + u.center.y * u.center.y - u.quadrance -
                v.center.x * v.center.x - v.center.y * v.center.y + v.quadrance;
  return Ln::make(a, b, c);
}

std::vector<Pt> line_circle(const Ln& l, const Circle& c) {
  // Point on l plus multiples of the direction (b, -a).
  const Num zero(0, c.center.modulus());
  const Pt base = l.b().is_zero() ? Pt{-l.c() / l.a(), zero} : Pt{zero, -l.c() / l.b()};
  const Num dx = l.b(), dy = -l.a();
  const Num ox = base.x - c.center.x, oy = base.y - c.center.y;
  const Num qa = dx * dx + dy * dy;
  const Num qb = 2 * (dx * ox + dy * oy);
  const Num qc = ox * ox + oy * oy - c.quadrance;
  std::vector<Num> params;
  if (qa.is_zero()) {
    if (!qb.is_zero()) params.push_back(-qc / qb);
  } else {
    for (const Num r : neuberg::sqrt(qb * qb - 4 * qa * qc)) params.push_back((r - qb) / (2 * qa));
  }
  std::vector<Pt> out;
  for (const Num s : params) out.push_back(Pt{base.x + s * dx, base.y + s * dy});
  return out;
}

}  // namespace

std::vector<Pt> isodynamic_points(const Tri& t) {
  const std::array<Circle, 3> c{apollonius_circle(t, 0).circle, apollonius_circle(t, 1).circle,
                                apollonius_circle(t, 2).circle};
  const auto r01 = radical_line(c[0], c[1]);
  const auto r02 = radical_line(c[0], c[2]);
  std::vector<Pt> candidates;
  if (r01 && r02 && !(*r01 == *r02)) {
    if (auto p = intersect(*r01, *r02)) candidates.push_back(*p);
  } else if (r01 || r02) {
    // Coaxal circles: every radical line is the same line.
    candidates = line_circle(r01 ? *r01 : *r02, c[0]);
  }
  std::vector<Pt> out;
  for (const Pt& p : candidates) {
    if (c[0].contains(p) && c[1].contains(p) && c[2].contains(p)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());

  if (out.size() == 2 && !neuberg::sqrt(Num(3, t.modulus())).empty()) {
    std::array<Pt, 3> e;
    for (int i = 0; i < 3; ++i) e[static_cast<std::size_t>(i)] = equilateral_points(t, i).first;
    if (!is_collinear(e[0], e[1], e[2]) && e[0] != e[1] && e[1] != e[2] && e[0] != e[2]) {
      const auto fermat = perspector(t, Tri::make(e[0], e[1], e[2]));
      if (fermat && isogonal_conjugate(t, out[1]) == fermat) std::swap(out[0], out[1]);
    }
  }
  return out;
}

SpecialLines special_lines(const Tri& t) {
  std::vector<Pt> centers;
  for (int i = 0; i < 3; ++i) centers.push_back(apollonius_circle(t, i).circle.center);
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  if (centers.size() < 2) throw Error(Errc::DegenerateConfiguration, "Apollonius centers coincide");
  const Ln lemoine = line_through(centers[0], centers[1]);
  for (const Pt& c : centers) {
    if (!lemoine.contains(c)) throw Error(Errc::DegenerateConfiguration, "Apollonius centers not collinear");
  }
  const Pt circ = circumcenter(t);
  const auto k = isogonal_conjugate(t, centroid(t));
  if (!k) throw Error(Errc::DegenerateConfiguration, "symmedian point undefined");
  return {lemoine, line_through(circ, *k)};
}

std::optional<Pt> perspector(const Tri& a, const Tri& b) {
  std::array<Ln, 3> joins;
  for (int i = 0; i < 3; ++i) {
    if (a.vertex(i) == b.vertex(i)) return std::nullopt;
    joins[static_cast<std::size_t>(i)] = line_through(a.vertex(i), b.vertex(i));
  }
  for (auto [i, j, k] : {std::array{0, 1, 2}, std::array{0, 2, 1}, std::array{1, 2, 0}}) {
    if (joins[i] == joins[j]) continue;
    const auto p = intersect(joins[i], joins[j]);
    if (!p || !joins[k].contains(*p)) return std::nullopt;
    return p;
  }
  return std::nullopt;
}

Num spread_poly_s2(Num s) { return 4 * s * (1 - s); }

namespace {

template <class T, class F>
Maybe<T> attempt(F&& fn) {
  try {
    return {fn(), {}};
  } catch (const Error& e) {
    return {std::nullopt, e.what()};
  }
}

template <class T>
Maybe<T> missing(const std::string& why) {
  return {std::nullopt, why};
}

}  // namespace

CenterReport center_report(const Tri& t) {
  CenterReport r;
  r.orthocenter = attempt<Pt>([&] { return orthocenter(t); });
  r.circumcenter = attempt<Pt>([&] { return circumcenter(t); });
  r.centroid = attempt<Pt>([&] { return centroid(t); });
  r.euler = attempt<Ln>([&] { return euler_line(t); });
  r.incenters = attempt<std::array<Pt, 4>>([&] { return incenter_quadrangle(t).points; });
  if (r.centroid.has_value() && r.incenters.has_value()) {
    const auto k = isogonal_conjugate(t, *r.centroid);
    r.symmedian = k ? Maybe<Pt>{k, {}} : missing<Pt>("isogonal conjugate of the centroid is undefined");
  } else {
    r.symmedian = missing<Pt>(r.incenters.has_value() ? r.centroid.reason : r.incenters.reason);
  }
  auto iso = attempt<std::vector<Pt>>([&] { return isodynamic_points(t); });
  if (iso.has_value() && iso->size() == 2) {
    const Pt s = (*iso)[0], s2 = (*iso)[1];
    r.isodynamic = {std::make_pair(s, s2), {}};
    const auto f = isogonal_conjugate(t, s);
    const auto f2 = isogonal_conjugate(t, s2);
    if (f && f2) {
      r.fermat = {std::make_pair(*f, *f2), {}};
    } else {
      r.fermat = missing<std::pair<Pt, Pt>>("isogonal conjugate of an isodynamic point is undefined");
    }
  } else {
    const std::string why = iso.has_value()
                                ? "Apollonius circles share " + std::to_string(iso->size()) + " points"
                                : iso.reason;
    r.isodynamic = missing<std::pair<Pt, Pt>>(why);
    r.fermat = missing<std::pair<Pt, Pt>>(why);
  }
  auto lines = attempt<SpecialLines>([&] { return special_lines(t); });
  if (lines.has_value()) {
    r.lemoine = {lines->lemoine, {}};
    r.brocard = {lines->brocard, {}};
  } else {
    r.lemoine = missing<Ln>(lines.reason);
    r.brocard = missing<Ln>(lines.reason);
  }
  return r;
}

}  // namespace neuberg
